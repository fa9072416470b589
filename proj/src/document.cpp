// SPDX-License-Identifier: Apache-2.0
#include "tinygen/document.hpp"

#include <yaml-cpp/yaml.h>

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <json.hpp>
#include <regex>
#include <string>

#include "tinygen/error.hpp"

namespace tinygen::ingest {

namespace {

using ordered_json = nlohmann::ordered_json;

std::pair<std::size_t, std::size_t> line_column_of(std::string_view text, std::size_t offset) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

Value from_json(const ordered_json& j) {
    switch (j.type()) {
    case ordered_json::value_t::null: return Value{};
    case ordered_json::value_t::boolean: return Value{j.get<bool>()};
    case ordered_json::value_t::number_integer: return Value{j.get<std::int64_t>()};
    case ordered_json::value_t::number_unsigned: {
        auto u = j.get<std::uint64_t>();
        if (u <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
            return Value{static_cast<std::int64_t>(u)};
        return Value{static_cast<double>(u)};
    }
    case ordered_json::value_t::number_float: return Value{j.get<double>()};
    case ordered_json::value_t::string: return Value{j.get<std::string>()};
    case ordered_json::value_t::array: {
        Array out;
        out.reserve(j.size());
        for (const auto& item : j) out.push_back(from_json(item));
        return Value{std::move(out)};
    }
    case ordered_json::value_t::object: {
        Object out;
        for (const auto& [key, item] : j.items()) out.set(key, from_json(item));
        return Value{std::move(out)};
    }
    default: throw Error("unsupported JSON value (binary or discarded)");
    }
}

Value parse_json(std::string_view text) {
    try {
        auto j = ordered_json::parse(text.begin(), text.end());
        return from_json(j);
    } catch (const ordered_json::parse_error& e) {
        std::string msg = e.what();
        if (auto pos = msg.find(": "); pos != std::string::npos) {
            // "[json.exception.parse_error.101] parse error at line 1, column 2: <detail>"
            auto detail_pos = msg.find(": ", pos + 2);
            msg = detail_pos != std::string::npos ? msg.substr(detail_pos + 2) : msg.substr(pos + 2);
        }
        std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
        auto [line, column] = line_column_of(text, offset);
        throw ParseError("JSON syntax error: " + msg, line, column);
    }
}

std::size_t mark_line(const YAML::Mark& m) { return m.line >= 0 ? static_cast<std::size_t>(m.line) + 1 : 0; }
std::size_t mark_column(const YAML::Mark& m) {
    return m.column >= 0 ? static_cast<std::size_t>(m.column) + 1 : 0;
}

bool matches(const std::string& s, const std::regex& re) { return std::regex_match(s, re); }

// YAML 1.2 core schema resolution for plain scalars.
Value resolve_plain_scalar(const std::string& s) {
    static const std::regex null_re("~|null|Null|NULL|");
    static const std::regex true_re("true|True|TRUE");
    static const std::regex false_re("false|False|FALSE");
    static const std::regex dec_re("[-+]?[0-9]+");
    static const std::regex oct_re("0o[0-7]+");
    static const std::regex hex_re("0x[0-9a-fA-F]+");
    static const std::regex float_re("[-+]?(\\.[0-9]+|[0-9]+(\\.[0-9]*)?)([eE][-+]?[0-9]+)?");
    static const std::regex inf_re("[-+]?(\\.inf|\\.Inf|\\.INF)");
    static const std::regex nan_re("\\.nan|\\.NaN|\\.NAN");

    if (matches(s, null_re)) return Value{};
    if (matches(s, true_re)) return Value{true};
    if (matches(s, false_re)) return Value{false};
    if (matches(s, dec_re)) {
        std::int64_t v = 0;
        const char* first = s.data() + (s[0] == '+' ? 1 : 0);
        auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
        if (ec == std::errc{} && ptr == s.data() + s.size()) return Value{v};
        return Value{std::stod(s)};
    }
    if (matches(s, oct_re) || matches(s, hex_re)) {
        std::int64_t v = 0;
        int base = s[1] == 'o' ? 8 : 16;
        auto [ptr, ec] = std::from_chars(s.data() + 2, s.data() + s.size(), v, base);
        if (ec == std::errc{}) return Value{v};
        return Value{s};
    }
    if (matches(s, float_re)) return Value{std::stod(s)};
    if (matches(s, inf_re)) return Value{s[0] == '-' ? -INFINITY : INFINITY};
    if (matches(s, nan_re)) return Value{NAN};
    return Value{s};
}

Value from_yaml(const YAML::Node& node) {
    switch (node.Type()) {
    case YAML::NodeType::Null:
    case YAML::NodeType::Undefined: return Value{};
    case YAML::NodeType::Scalar: {
        const std::string& tag = node.Tag();
        const std::string& text = node.Scalar();
        if (tag == "!" || tag == "tag:yaml.org,2002:str") return Value{text};
        if (tag == "?" || tag.empty()) return resolve_plain_scalar(text);
        Value resolved = resolve_plain_scalar(text);
        if (tag == "tag:yaml.org,2002:int" && resolved.is_integer()) return resolved;
        if (tag == "tag:yaml.org,2002:float" && resolved.is_number()) return Value{resolved.as_double()};
        if (tag == "tag:yaml.org,2002:bool" && resolved.is_bool()) return resolved;
        if (tag == "tag:yaml.org,2002:null" && resolved.is_null()) return resolved;
        return Value{text};
    }
    case YAML::NodeType::Sequence: {
        Array out;
        out.reserve(node.size());
        for (const auto& item : node) out.push_back(from_yaml(item));
        return Value{std::move(out)};
    }
    case YAML::NodeType::Map: {
        Object out;
        for (const auto& kv : node) {
            if (!kv.first.IsScalar()) {
                auto m = kv.first.Mark();
                throw ParseError("YAML mapping key must be a scalar", mark_line(m), mark_column(m));
            }
            const std::string& key = kv.first.Scalar();
            if (out.contains(key)) {
                auto m = kv.first.Mark();
                throw ParseError("duplicate mapping key '" + key + "'", mark_line(m), mark_column(m));
            }
            out.set(key, from_yaml(kv.second));
        }
        return Value{std::move(out)};
    }
    }
    return Value{};
}

Value parse_yaml(std::string_view text) {
    try {
        YAML::Node root = YAML::Load(std::string(text));
        return from_yaml(root);
    } catch (const YAML::ParserException& e) {
        throw ParseError("YAML syntax error: " + e.msg, mark_line(e.mark), mark_column(e.mark));
    } catch (const YAML::Exception& e) {
        throw ParseError("YAML error: " + e.msg, mark_line(e.mark), mark_column(e.mark));
    }
}

std::string_view strip_bom(std::string_view text) {
    if (text.size() >= 3 && static_cast<unsigned char>(text[0]) == 0xEF &&
        static_cast<unsigned char>(text[1]) == 0xBB && static_cast<unsigned char>(text[2]) == 0xBF)
        return text.substr(3);
    return text;
}

}  // namespace

Value parse_document(std::string_view text, Format hint) {
    text = strip_bom(text);
    bool blank = true;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) {
            blank = false;
            break;
        }
    if (blank) throw Error("empty document");

    if (hint == Format::json) return parse_json(text);
    if (hint == Format::yaml) return parse_yaml(text);

    if (text.find('\0') != std::string_view::npos)
        throw Error("unknown document format: input contains NUL bytes");
    auto first = text.find_first_not_of(" \t\r\n");
    char lead = text[first];
    if (lead == '{' || lead == '[') return parse_json(text);
    Value v = parse_yaml(text);
    if (!v.is_object() && !v.is_array())
        throw Error("unknown document format: neither a JSON nor a YAML mapping/sequence");
    return v;
}

Format format_from_path(std::string_view path) {
    auto ends_with = [&](std::string_view suffix) {
        if (path.size() < suffix.size()) return false;
        auto tail = path.substr(path.size() - suffix.size());
        for (std::size_t i = 0; i < suffix.size(); ++i)
            if (std::tolower(static_cast<unsigned char>(tail[i])) != suffix[i]) return false;
        return true;
    };
    if (ends_with(".json")) return Format::json;
    if (ends_with(".yaml") || ends_with(".yml")) return Format::yaml;
    return Format::automatic;
}

}  // namespace tinygen::ingest
