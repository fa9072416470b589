// SPDX-License-Identifier: Apache-2.0
#include "tinygen/value.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace tinygen {

Object::Object(std::initializer_list<Entry> entries) {
    for (const auto& e : entries) set(e.first, e.second);
}

const Value* Object::find(std::string_view key) const {
    for (const auto& e : entries_)
        if (e.first == key) return &e.second;
    return nullptr;
}

Value* Object::find(std::string_view key) {
    for (auto& e : entries_)
        if (e.first == key) return &e.second;
    return nullptr;
}

Value& Object::set(std::string key, Value value) {
    if (Value* existing = find(key)) {
        *existing = std::move(value);
        return *existing;
    }
    entries_.emplace_back(std::move(key), std::move(value));
    return entries_.back().second;
}

bool Object::erase(std::string_view key) {
    for (auto it = entries_.begin(); it != entries_.end(); ++it) {
        if (it->first == key) {
            entries_.erase(it);
            return true;
        }
    }
    return false;
}

bool operator==(const Object& a, const Object& b) { return a.entries_ == b.entries_; }

double Value::as_double() const {
    if (is_integer()) return static_cast<double>(as_integer());
    return std::get<double>(data_);
}

const Value* Value::get(std::string_view key) const {
    if (!is_object()) return nullptr;
    return as_object().find(key);
}

namespace {

std::string format_double(double d) {
    if (std::isnan(d)) return "nan";
    if (std::isinf(d)) return d > 0 ? "inf" : "-inf";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, d);
    if (ec != std::errc{}) throw std::runtime_error("double formatting failed");
    return std::string(buf, ptr);
}

void append_json_string(std::string& out, const std::string& s) {
    static const char* hex = "0123456789abcdef";
    out += '"';
    for (unsigned char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        case '\b': out += "\\b"; break;
        case '\f': out += "\\f"; break;
        default:
            if (c < 0x20) {
                out += "\\u00";
                out += hex[c >> 4];
                out += hex[c & 0xF];
            } else {
                out += static_cast<char>(c);
            }
        }
    }
    out += '"';
}

void append_json(std::string& out, const Value& v) {
    if (v.is_null()) {
        out += "null";
    } else if (v.is_bool() || v.is_number()) {
        out += v.scalar_text();
    } else if (v.is_string()) {
        append_json_string(out, v.as_string());
    } else if (v.is_array()) {
        out += '[';
        bool first = true;
        for (const auto& item : v.as_array()) {
            if (!first) out += ',';
            first = false;
            append_json(out, item);
        }
        out += ']';
    } else {
        out += '{';
        bool first = true;
        for (const auto& [key, item] : v.as_object()) {
            if (!first) out += ',';
            first = false;
            append_json_string(out, key);
            out += ':';
            append_json(out, item);
        }
        out += '}';
    }
}

}  // namespace

std::string Value::scalar_text() const {
    if (is_bool()) return as_bool() ? "true" : "false";
    if (is_integer()) return std::to_string(as_integer());
    if (is_double()) return format_double(std::get<double>(data_));
    if (is_string()) return as_string();
    return {};
}

const char* Value::kind_name() const noexcept {
    switch (data_.index()) {
    case 0: return "null";
    case 1: return "boolean";
    case 2: return "integer";
    case 3: return "number";
    case 4: return "string";
    case 5: return "array";
    default: return "object";
    }
}

std::string to_json(const Value& value) {
    std::string out;
    append_json(out, value);
    return out;
}

}  // namespace tinygen
