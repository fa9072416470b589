// SPDX-License-Identifier: Apache-2.0
#include "tinygen/naming.hpp"

#include <algorithm>
#include <iterator>
#include <cctype>

namespace tinygen::naming {

namespace {

bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

constexpr std::string_view kKeywords[] = {
    "alignas", "alignof", "and", "and_eq", "asm", "auto", "bitand", "bitor", "bool", "break", "case", "catch",
    "char", "char16_t", "char32_t", "class", "compl", "const", "constexpr", "const_cast", "continue", "decltype",
    "default", "delete", "do", "double", "dynamic_cast", "else", "enum", "explicit", "export", "extern", "false",
    "float", "for", "friend", "goto", "if", "inline", "int", "long", "mutable", "namespace", "new", "noexcept",
    "not", "not_eq", "nullptr", "operator", "or", "or_eq", "private", "protected", "public", "register",
    "reinterpret_cast", "return", "short", "signed", "sizeof", "static", "static_assert", "static_cast", "struct",
    "switch", "template", "this", "thread_local", "throw", "true", "try", "typedef", "typeid", "typename", "union",
    "unsigned", "using", "virtual", "void", "volatile", "wchar_t", "while", "xor", "xor_eq",
    // Members of the generated AbstractService and bundled certificate constants.
    "http", "client", "basepath", "root_ca"};

}  // namespace

bool is_cpp_keyword(std::string_view word) {
    return std::find(std::begin(kKeywords), std::end(kKeywords), word) != std::end(kKeywords);
}

std::string identifier(std::string_view raw) {
    std::string out;
    out.reserve(raw.size() + 1);
    for (char c : raw) out += is_alnum(c) || c == '_' ? c : '_';
    if (out.empty()) out = "_";
    if (std::isdigit(static_cast<unsigned char>(out[0]))) out.insert(out.begin(), '_');
    if (is_cpp_keyword(out)) out += '_';
    return out;
}

std::string pascal_case(std::string_view raw) {
    std::string out;
    bool boundary = true;
    for (char c : raw) {
        if (!is_alnum(c)) {
            boundary = true;
            continue;
        }
        out += boundary ? static_cast<char>(std::toupper(static_cast<unsigned char>(c))) : c;
        boundary = false;
    }
    if (out.empty()) out = "Unnamed";
    if (std::isdigit(static_cast<unsigned char>(out[0]))) out.insert(out.begin(), '_');
    return out;
}

std::string lower_first(std::string_view raw) {
    std::string out(raw);
    if (!out.empty()) out[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(out[0])));
    return out;
}

std::string upper_first(std::string_view raw) {
    std::string out(raw);
    if (!out.empty()) out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
    return out;
}

std::string model_class(std::string_view schema_name) { return pascal_case(schema_name); }

std::string service_class(const ApiSpec& spec, const std::string& tag) {
    if (auto it = spec.tags.find(tag); it != spec.tags.end() && !it->second.service_name.empty())
        return pascal_case(it->second.service_name) + "Service";
    return pascal_case(tag) + "Service";
}

std::string method_name(const Operation& op) {
    if (!op.operation_id.empty()) return identifier(op.operation_id);
    std::string verb = to_string(op.method);
    std::transform(verb.begin(), verb.end(), verb.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return identifier(verb + pascal_case(op.path));
}

}  // namespace tinygen::naming
