// SPDX-License-Identifier: Apache-2.0
#include <limits>

#include <json.hpp>

#include "bourne/json.hpp"

namespace bourne {

namespace {

const json& null_value() {
    static const json value;
    return value;
}

nlohmann::ordered_json to_nlohmann(const json& v) {
    switch (v.type()) {
    case json::class_type::null: return nullptr;
    case json::class_type::boolean: return v.to_bool();
    case json::class_type::integral: return v.to_int();
    case json::class_type::floating: return v.to_float();
    case json::class_type::string: return v.to_string();
    case json::class_type::array: {
        auto out = nlohmann::ordered_json::array();
        for (const auto& item : v.array_range()) out.push_back(to_nlohmann(item));
        return out;
    }
    case json::class_type::object: {
        auto out = nlohmann::ordered_json::object();
        for (const auto& [key, value] : v.object_range()) out[key] = to_nlohmann(value);
        return out;
    }
    }
    return nullptr;
}

json from_nlohmann(const nlohmann::ordered_json& v) {
    switch (v.type()) {
    case nlohmann::json::value_t::boolean: return json(v.get<bool>());
    case nlohmann::json::value_t::number_integer: return json(v.get<long long>());
    case nlohmann::json::value_t::number_unsigned: {
        auto u = v.get<unsigned long long>();
        if (u <= static_cast<unsigned long long>(std::numeric_limits<long long>::max()))
            return json(static_cast<long long>(u));
        return json(static_cast<double>(u));
    }
    case nlohmann::json::value_t::number_float: return json(v.get<double>());
    case nlohmann::json::value_t::string: return json(v.get<std::string>());
    case nlohmann::json::value_t::array: {
        json out = json::array();
        for (const auto& item : v) out.append(from_nlohmann(item));
        return out;
    }
    case nlohmann::json::value_t::object: {
        json out = json::object();
        for (const auto& [key, value] : v.items()) out[key] = from_nlohmann(value);
        return out;
    }
    default: return json();
    }
}

}  // namespace

json json::object() {
    json j;
    j.type_ = class_type::object;
    return j;
}

json json::array() {
    json j;
    j.type_ = class_type::array;
    return j;
}

json& json::operator[](const std::string& key) {
    if (type_ == class_type::null) type_ = class_type::object;
    for (auto& [k, v] : members_)
        if (k == key) return v;
    members_.emplace_back(key, json());
    return members_.back().second;
}

const json& json::operator[](const std::string& key) const {
    for (const auto& [k, v] : members_)
        if (k == key) return v;
    return null_value();
}

json& json::operator[](std::size_t index) {
    if (type_ == class_type::null) type_ = class_type::array;
    if (index >= items_.size()) items_.resize(index + 1);
    return items_[index];
}

const json& json::operator[](std::size_t index) const { return index < items_.size() ? items_[index] : null_value(); }

void json::append(const json& value) {
    if (type_ == class_type::null) type_ = class_type::array;
    items_.push_back(value);
}

bool json::has_key(const std::string& key) const {
    for (const auto& member : members_)
        if (member.first == key) return true;
    return false;
}

std::size_t json::size() const {
    if (type_ == class_type::object) return members_.size();
    if (type_ == class_type::array) return items_.size();
    return 0;
}

long long json::to_int() const {
    if (type_ == class_type::floating) return static_cast<long long>(float_);
    if (type_ == class_type::boolean) return bool_ ? 1 : 0;
    return int_;
}

double json::to_float() const { return type_ == class_type::integral ? static_cast<double>(int_) : float_; }

bool json::to_bool() const { return type_ == class_type::boolean && bool_; }

std::string json::to_string() const { return type_ == class_type::string ? string_ : dump(); }

std::string json::dump() const { return to_nlohmann(*this).dump(); }

json json::parse(const std::string& text, std::error_code& error) {
    auto parsed = nlohmann::ordered_json::parse(text, nullptr, false);
    if (parsed.is_discarded()) {
        error = std::make_error_code(std::errc::invalid_argument);
        return json();
    }
    error.clear();
    return from_nlohmann(parsed);
}

bool operator==(const json& a, const json& b) {
    if (a.type_ != b.type_) return false;
    switch (a.type_) {
    case json::class_type::null: return true;
    case json::class_type::boolean: return a.bool_ == b.bool_;
    case json::class_type::integral: return a.int_ == b.int_;
    case json::class_type::floating: return a.float_ == b.float_;
    case json::class_type::string: return a.string_ == b.string_;
    case json::class_type::array: return a.items_ == b.items_;
    case json::class_type::object: return a.members_ == b.members_;
    }
    return false;
}

}  // namespace bourne
