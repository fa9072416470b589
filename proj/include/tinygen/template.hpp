// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tinygen/value.hpp"

namespace tinygen::tmpl {

/// 1-based source position of a tag's opening braces.
struct Position {
    std::size_t line = 1;
    std::size_t column = 1;
};

struct Node;
using Nodes = std::vector<Node>;

struct Text {
    std::string text;
};
struct Variable {
    std::string key;  // "name", "a.b", or "."
};
struct Section {
    std::string key;
    Nodes children;
    Position open;
};
struct InvertedSection {
    std::string key;
    Nodes children;
    Position open;
};
struct Partial {
    std::string name;
};
struct Comment {
    std::string text;
};

struct Node {
    std::variant<Text, Variable, Section, InvertedSection, Partial, Comment> content;
};

/// Parsed template. Immutable after parsing; safe to share between threads.
class Template {
public:
    Template() = default;
    explicit Template(Nodes nodes) : nodes_(std::move(nodes)) {}

    const Nodes& nodes() const noexcept { return nodes_; }

private:
    Nodes nodes_;
};

/// Supported tags: {{name}}, {{a.b}}, {{.}}, {{#s}}..{{/s}}, {{^s}}..{{/s}}, {{>partial}}, {{!comment}}.
/// No escaping and no standalone-line trimming: text between tags is kept byte for byte.
/// Throws TemplateError on unclosed/mismatched sections, unterminated tags and unsupported tag kinds.
Template parse_template(std::string_view text);

using Partials = std::map<std::string, Template, std::less<>>;

/// Renders against `root`. Lookups search the context stack innermost-out; misses render "".
/// Throws TemplateError when a partial is missing or partials recurse too deeply.
std::string render(const Template& tmpl, const Value& root, const Partials& partials = {});

/// parse + render in one step.
std::string render_text(std::string_view text, const Value& root, const Partials& partials = {});

}  // namespace tinygen::tmpl
