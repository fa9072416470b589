// SPDX-License-Identifier: Apache-2.0
#include "tinygen/template.hpp"

#include "tinygen/error.hpp"

namespace tinygen::tmpl {

namespace {

constexpr std::string_view kOpen = "{{";
constexpr std::string_view kClose = "}}";
constexpr int kMaxPartialDepth = 64;

std::string where(Position p) { return "line " + std::to_string(p.line) + ", column " + std::to_string(p.column); }

std::string_view trim(std::string_view s) {
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Template parse() {
        struct Frame {
            Nodes nodes;
            std::string key;
            bool inverted = false;
            Position open;
        };
        std::vector<Frame> stack(1);

        std::size_t pos = 0;
        while (pos < text_.size()) {
            std::size_t open = text_.find(kOpen, pos);
            if (open == std::string_view::npos) {
                stack.back().nodes.push_back({Text{std::string(text_.substr(pos))}});
                break;
            }
            if (open > pos) stack.back().nodes.push_back({Text{std::string(text_.substr(pos, open - pos))}});
            Position at = position_of(open);
            std::size_t close = text_.find(kClose, open + kOpen.size());
            if (close == std::string_view::npos) throw TemplateError("unterminated tag at " + where(at));
            std::string_view inner = text_.substr(open + kOpen.size(), close - open - kOpen.size());
            pos = close + kClose.size();

            if (inner.empty()) throw TemplateError("empty tag at " + where(at));
            char sigil = inner.front();
            switch (sigil) {
            case '!': stack.back().nodes.push_back({Comment{std::string(inner.substr(1))}}); break;
            case '#':
            case '^': {
                std::string key = checked_key(inner.substr(1), at);
                stack.push_back(Frame{{}, key, sigil == '^', at});
                break;
            }
            case '/': {
                std::string key = checked_key(inner.substr(1), at);
                if (stack.size() == 1)
                    throw TemplateError("close tag {{/" + key + "}} at " + where(at) + " has no open section");
                Frame& top = stack.back();
                if (top.key != key)
                    throw TemplateError("mismatched close tag {{/" + key + "}} at " + where(at) + "; expected {{/" +
                                        top.key + "}} for the section opened at " + where(top.open));
                Frame done = std::move(top);
                stack.pop_back();
                if (done.inverted)
                    stack.back().nodes.push_back({InvertedSection{done.key, std::move(done.nodes), done.open}});
                else
                    stack.back().nodes.push_back({Section{done.key, std::move(done.nodes), done.open}});
                break;
            }
            case '>': {
                std::string name(trim(inner.substr(1)));
                if (name.empty()) throw TemplateError("partial tag without a name at " + where(at));
                stack.back().nodes.push_back({Partial{name}});
                break;
            }
            case '{':
            case '&':
                throw TemplateError(std::string("unsupported unescaped-variable tag '") + sigil + "' at " + where(at) +
                                    " (interpolation is never escaped; use {{name}})");
            case '=': throw TemplateError("delimiter changes are not supported (at " + where(at) + ")");
            default: stack.back().nodes.push_back({Variable{checked_key(inner, at)}});
            }
        }
        if (stack.size() > 1) {
            const Frame& top = stack.back();
            throw TemplateError("unclosed section '" + top.key + "' opened at " + where(top.open));
        }
        return Template(std::move(stack.front().nodes));
    }

private:
    std::string_view text_;
    std::size_t scanned_ = 0;
    Position scanned_pos_;

    // Positions are requested in increasing order, so scanning resumes where it stopped.
    Position position_of(std::size_t offset) {
        for (; scanned_ < offset; ++scanned_) {
            if (text_[scanned_] == '\n') {
                ++scanned_pos_.line;
                scanned_pos_.column = 1;
            } else {
                ++scanned_pos_.column;
            }
        }
        return scanned_pos_;
    }

    static std::string checked_key(std::string_view raw, Position at) {
        std::string_view key = trim(raw);
        if (key.empty()) throw TemplateError("tag without a key at " + where(at));
        for (char c : key)
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
                throw TemplateError("tag key '" + std::string(key) + "' contains whitespace at " + where(at));
        if (key != "." && (key.front() == '.' || key.back() == '.' || key.find("..") != std::string_view::npos))
            throw TemplateError("malformed dotted key '" + std::string(key) + "' at " + where(at));
        return std::string(key);
    }
};

bool truthy(const Value& v) {
    if (v.is_null()) return false;
    if (v.is_bool()) return v.as_bool();
    if (v.is_array()) return !v.as_array().empty();
    return true;
}

class Renderer {
public:
    explicit Renderer(const Partials& partials) : partials_(partials) {}

    void render(const Nodes& nodes, std::vector<const Value*>& stack, std::string& out, int depth) const {
        for (const auto& node : nodes) {
            std::visit(
                [&](const auto& n) {
                    using T = std::decay_t<decltype(n)>;
                    if constexpr (std::is_same_v<T, Text>) {
                        out += n.text;
                    } else if constexpr (std::is_same_v<T, Variable>) {
                        if (const Value* v = lookup(n.key, stack)) out += v->scalar_text();
                    } else if constexpr (std::is_same_v<T, Section>) {
                        const Value* v = lookup(n.key, stack);
                        if (!v || !truthy(*v)) return;
                        if (v->is_array()) {
                            for (const auto& item : v->as_array()) {
                                stack.push_back(&item);
                                render(n.children, stack, out, depth);
                                stack.pop_back();
                            }
                        } else if (v->is_bool()) {
                            // `true` renders once in the enclosing scope; it is not pushed.
                            render(n.children, stack, out, depth);
                        } else {
                            stack.push_back(v);
                            render(n.children, stack, out, depth);
                            stack.pop_back();
                        }
                    } else if constexpr (std::is_same_v<T, InvertedSection>) {
                        const Value* v = lookup(n.key, stack);
                        if (!v || !truthy(*v)) render(n.children, stack, out, depth);
                    } else if constexpr (std::is_same_v<T, Partial>) {
                        auto it = partials_.find(n.name);
                        if (it == partials_.end()) throw TemplateError("missing partial '" + n.name + "'");
                        if (depth >= kMaxPartialDepth)
                            throw TemplateError("partial '" + n.name + "' nests deeper than " +
                                                std::to_string(kMaxPartialDepth) + " levels");
                        render(it->second.nodes(), stack, out, depth + 1);
                    }
                },
                node.content);
        }
    }

private:
    const Partials& partials_;

    static const Value* lookup(const std::string& key, const std::vector<const Value*>& stack) {
        if (key == ".") return stack.back();
        std::string_view rest = key;
        auto dot = rest.find('.');
        std::string_view head = rest.substr(0, dot);
        const Value* found = nullptr;
        for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
            if (const Value* v = (*it)->get(head)) {
                found = v;
                break;
            }
        }
        while (found && dot != std::string_view::npos) {
            rest = rest.substr(dot + 1);
            dot = rest.find('.');
            found = found->get(rest.substr(0, dot));
        }
        return found;
    }
};

}  // namespace

Template parse_template(std::string_view text) { return Parser(text).parse(); }

std::string render(const Template& tmpl, const Value& root, const Partials& partials) {
    std::string out;
    std::vector<const Value*> stack{&root};
    Renderer(partials).render(tmpl.nodes(), stack, out, 0);
    return out;
}

std::string render_text(std::string_view text, const Value& root, const Partials& partials) {
    return render(parse_template(text), root, partials);
}

}  // namespace tinygen::tmpl
