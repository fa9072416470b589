// SPDX-License-Identifier: Apache-2.0
#include "tinygen/emit.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "tinygen/assets.hpp"
#include "tinygen/error.hpp"
#include "tinygen/ingest.hpp"
#include "tinygen/naming.hpp"
#include "tinygen/template.hpp"

namespace tinygen::emit {

using targets::CertBundle;
using targets::TargetProfile;

namespace {

const tmpl::Partials& partials() {
    static const tmpl::Partials cache = [] {
        tmpl::Partials out;
        for (const auto& asset : assets::all()) out.emplace(std::string(asset.name), tmpl::parse_template(asset.text));
        return out;
    }();
    return cache;
}

std::string render(std::string_view asset, const Value& context) {
    return tmpl::render(partials().find(asset)->second, context, partials());
}

/// Quoted C++ string literal. Octal escapes are used because they never absorb a following digit
/// past three characters, unlike \x.
std::string cpp_literal(std::string_view text) {
    std::string out = "\"";
    for (unsigned char c : text) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default:
            if (c < 0x20 || c == 0x7F) {
                const char digits[] = {'\\', static_cast<char>('0' + (c >> 6)), static_cast<char>('0' + ((c >> 3) & 7)),
                                       static_cast<char>('0' + (c & 7)), 0};
                out += digits;
            } else {
                out += static_cast<char>(c);
            }
        }
    }
    return out + "\"";
}

/// Description text split into comment lines. Trailing blanks and backslashes are cut so a
/// line can never continue the comment onto the next source line.
Array doc_lines(std::string_view text) {
    Array lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string line(text.substr(start, nl == std::string_view::npos ? text.npos : nl - start));
        while (!line.empty() && (std::isspace(static_cast<unsigned char>(line.back())) || line.back() == '\\'))
            line.pop_back();
        lines.emplace_back(line);
        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }
    while (!lines.empty() && lines.back().as_string().empty()) lines.pop_back();
    while (!lines.empty() && lines.front().as_string().empty()) lines.erase(lines.begin());
    return lines;
}

std::string upper(std::string text) {
    std::transform(text.begin(), text.end(), text.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return text;
}

std::string guard(const std::string& class_name) { return "TINY_CPP_CLIENT_" + upper(class_name) + "_H_"; }

Value optional_text(std::string text) { return text.empty() ? Value() : Value(std::move(text)); }

bool passed_by_value(const SchemaPtr& schema) {
    switch (schema->kind) {
    case SchemaKind::boolean:
    case SchemaKind::integer32:
    case SchemaKind::integer64:
    case SchemaKind::float64: return true;
    default: return false;
    }
}

/// Adds "<Model>.h" for every named object reachable through `schema` without crossing
/// another named object.
void collect_includes(const SchemaPtr& schema, std::set<std::string>& out) {
    if (!schema) return;
    if (schema->is_named_object()) {
        out.insert(naming::model_class(schema->name) + ".h");
    } else if (schema->kind == SchemaKind::array) {
        collect_includes(schema->items, out);
    }
}

Array as_array(const std::set<std::string>& items) {
    Array out;
    for (const auto& s : items) out.emplace_back(s);
    return out;
}

std::string enum_comment(const Schema& schema) {
    std::string out = "one of:";
    for (std::size_t i = 0; i < schema.enum_values.size(); ++i)
        out += (i ? ", " : " ") + cpp_literal(schema.enum_values[i]);
    return out;
}

/// Literal used by the generated round-trip tests and service examples.
std::string sample_value(const SchemaPtr& schema) {
    switch (schema->kind) {
    case SchemaKind::string: return "\"sample\"";
    case SchemaKind::string_enum: return cpp_literal(schema->enum_values.front());
    case SchemaKind::boolean: return "true";
    case SchemaKind::integer32: return "42";
    case SchemaKind::integer64: return "1234567890123LL";
    case SchemaKind::float64: return "2.5";
    case SchemaKind::array: return map_type(schema) + "(1, " + sample_value(schema->items) + ")";
    default: return map_type(schema) + "()";
    }
}

std::string zero_value(const SchemaPtr& schema) {
    switch (schema->kind) {
    case SchemaKind::boolean: return "false";
    case SchemaKind::integer32:
    case SchemaKind::integer64: return "0";
    case SchemaKind::float64: return "0.0";
    default: return {};
    }
}

struct ResponseShape {
    std::string data_type;
    bool text = false;
};

ResponseShape response_shape(const Operation& op) {
    if (auto status = ingest::success_status(op)) {
        if (const SchemaPtr& schema = op.responses.at(*status)) return {map_type(schema), false};
    }
    return {"std::string", true};
}

const Parameter* body_parameter(const Operation& op) {
    for (const auto& p : op.parameters)
        if (p.location == ParamLocation::body) return &p;
    return nullptr;
}

std::string param_list(const Operation& op) {
    std::string out;
    for (const auto& p : op.parameters) {
        if (!out.empty()) out += ", ";
        std::string type = map_type(p.schema);
        out += passed_by_value(p.schema) ? type : "const " + type + " &";
        if (passed_by_value(p.schema)) out += ' ';
        out += naming::identifier(p.name);
    }
    return out;
}

std::string arg_list(const Operation& op) {
    std::string out;
    for (const auto& p : op.parameters) {
        if (!out.empty()) out += ", ";
        out += naming::identifier(p.name);
    }
    return out;
}

/// Statements appending the literal path pieces and the encoded path arguments to `url_`.
Array url_pieces(const Operation& op) {
    Array pieces;
    std::size_t pos = 0;
    while (pos < op.path.size()) {
        std::size_t open = op.path.find('{', pos);
        if (open == std::string::npos) {
            pieces.emplace_back(cpp_literal(op.path.substr(pos)));
            break;
        }
        if (open > pos) pieces.emplace_back(cpp_literal(op.path.substr(pos, open - pos)));
        std::size_t close = op.path.find('}', open);
        std::string name = op.path.substr(open + 1, close - open - 1);
        pieces.emplace_back("percentEncode(textOf(" + naming::identifier(name) + "))");
        pos = close + 1;
    }
    return pieces;
}

Value pair_param(const Parameter& p, const char* list) {
    Object ctx;
    ctx.set("argName", naming::identifier(p.name));
    ctx.set("keyLiteral", cpp_literal(p.name));
    ctx.set("pairList", list);
    bool is_list = p.schema->kind == SchemaKind::array;
    bool skip_empty = !is_list && !p.required &&
                      (p.schema->kind == SchemaKind::string || p.schema->kind == SchemaKind::string_enum);
    ctx.set("isList", is_list);
    ctx.set("skipWhenEmpty", skip_empty);
    ctx.set("always", !is_list && !skip_empty);
    return ctx;
}

Value method_context(const Operation& op) {
    Object ctx;
    ResponseShape response = response_shape(op);
    ctx.set("methodName", naming::method_name(op));
    ctx.set("methodDoc", doc_lines(op.summary));
    ctx.set("dataType", response.data_type);
    ctx.set("returnsText", response.text);
    ctx.set("paramList", param_list(op));
    ctx.set("argList", arg_list(op));
    ctx.set("verb", to_string(op.method));
    ctx.set("path", op.path);
    ctx.set("urlPieces", url_pieces(op));

    Array query, form, samples;
    for (const auto& p : op.parameters) {
        if (p.location == ParamLocation::query) query.push_back(pair_param(p, "query_"));
        if (p.location == ParamLocation::form) form.push_back(pair_param(p, "form_"));
        samples.push_back(Object{{"argType", map_type(p.schema)},
                                 {"argName", naming::identifier(p.name)},
                                 {"argValue", sample_value(p.schema)}});
    }
    ctx.set("hasQuery", !query.empty());
    ctx.set("queryParams", std::move(query));
    ctx.set("hasForm", !form.empty());
    ctx.set("formParams", std::move(form));
    ctx.set("sampleArgs", std::move(samples));

    const Parameter* body = body_parameter(op);
    bool has_form = ctx.find("hasForm")->as_bool();
    ctx.set("jsonBody", body ? Value(naming::identifier(body->name)) : Value());
    ctx.set("payloadExpr", body || has_form ? "payload_" : "std::string()");
    ctx.set("contentTypeExpr", body       ? "\"application/json\""
                               : has_form ? "\"application/x-www-form-urlencoded\""
                                          : "nullptr");
    return ctx;
}

std::string server_url(const ApiSpec& spec) {
    if (spec.server_urls.empty()) throw EmitError("no server URL to generate the client for");
    std::string url = spec.server_urls.front();
    while (url.size() > 1 && url.back() == '/') url.pop_back();
    return url;
}

std::map<std::string, std::vector<Operation>> operations_by_tag(const ApiSpec& spec) {
    std::map<std::string, std::vector<Operation>> out;
    for (const auto& op : spec.operations) out[op.tag].push_back(op);
    return out;
}

Value model_summary(const std::string& name) {
    std::string cls = naming::model_class(name);
    return Object{{"className", cls}, {"guardStem", upper(cls)}};
}

/// Normalizes generated text: LF line endings and exactly one trailing newline.
std::string finish_text(std::string text) {
    text.erase(std::remove(text.begin(), text.end(), '\r'), text.end());
    while (!text.empty() && text.back() == '\n') text.pop_back();
    return text + "\n";
}

}  // namespace

void GeneratedProject::merge(GeneratedProject other) {
    for (auto& [path, content] : other.files) {
        if (!files.emplace(path, std::move(content)).second) throw EmitError("file generated twice: " + path);
    }
}

std::string map_type(const SchemaPtr& schema) {
    if (!schema) throw EmitError("missing schema");
    switch (schema->kind) {
    case SchemaKind::string:
    case SchemaKind::string_enum: return "std::string";
    case SchemaKind::boolean: return "bool";
    case SchemaKind::integer32: return "int";
    case SchemaKind::integer64: return "long long";
    case SchemaKind::float64: return "double";
    case SchemaKind::array: {
        return "std::list<" + map_type(schema->items) + ">";
    }
    case SchemaKind::object:
        if (schema->name.empty()) throw EmitError("inline object schemas have no generated type");
        return naming::model_class(schema->name);
    case SchemaKind::reference: throw EmitError("unresolved reference to '" + schema->ref + "'");
    case SchemaKind::unsupported: throw EmitError("unsupported schema: " + schema->unsupported_reason);
    }
    throw EmitError("unknown schema kind");
}

GeneratedProject emit_model(const std::string& name, const Schema& schema) {
    if (schema.kind != SchemaKind::object) throw EmitError("schema '" + name + "' is not an object");
    std::string cls = naming::model_class(name);

    Object ctx;
    ctx.set("schemaName", name);
    ctx.set("className", cls);
    ctx.set("headerGuard", guard(cls));
    ctx.set("docLines", doc_lines(schema.description));

    std::set<std::string> includes;
    Array fields, setters;
    std::string initializers, equality;
    for (const auto& prop : schema.properties) {
        std::string field = naming::identifier(prop.name);
        std::string accessor = naming::pascal_case(prop.name);
        std::string type = map_type(prop.schema);
        collect_includes(prop.schema, includes);
        Object f;
        f.set("fieldName", field);
        f.set("fieldType", type);
        f.set("getter", "get" + accessor);
        f.set("setter", "set" + accessor);
        f.set("keyLiteral", cpp_literal(prop.name));
        f.set("fieldDoc", doc_lines(prop.schema->description));
        f.set("enumComment",
              prop.schema->kind == SchemaKind::string_enum ? Value(enum_comment(*prop.schema)) : Value());
        fields.emplace_back(std::move(f));
        setters.emplace_back("set" + accessor + "(" + sample_value(prop.schema) + ")");
        if (std::string zero = zero_value(prop.schema); !zero.empty())
            initializers += (initializers.empty() ? "" : ", ") + field + "(" + zero + ")";
        equality += (equality.empty() ? "" : " &&\n           ") + field + " == other." + field;
    }
    includes.erase(cls + ".h");
    ctx.set("hasFields", !fields.empty());
    ctx.set("fields", std::move(fields));
    ctx.set("modelIncludes", as_array(includes));
    ctx.set("initializers", optional_text(initializers));
    ctx.set("equality", equality);

    GeneratedProject out;
    out.files["lib/models/" + cls + ".h"] = render("model_header", ctx);
    out.files["lib/models/" + cls + ".cpp"] = render("model_source", ctx);

    Object test = model_summary(name).as_object();
    test.set("sampleSetters", std::move(setters));
    out.files["lib/TestFiles/" + cls + "Test.h"] = render("model_test", test);
    return out;
}

GeneratedProject emit_service(const ApiSpec& spec, const std::string& tag, const std::vector<Operation>& ops,
                              const TargetProfile& profile) {
    if (ops.empty()) throw EmitError("service '" + tag + "' has no operations");
    std::string cls = naming::service_class(spec, tag);

    std::set<std::string> includes, names;
    Array methods;
    for (const auto& op : ops) {
        if (op.tag != tag) throw EmitError(op.location + ": operation belongs to tag '" + op.tag + "', not '" + tag + "'");
        if (!names.insert(naming::method_name(op)).second)
            throw EmitError(op.location + ": duplicate method name '" + naming::method_name(op) + "' in " + cls);
        for (const auto& p : op.parameters) collect_includes(p.schema, includes);
        if (auto status = ingest::success_status(op)) collect_includes(op.responses.at(*status), includes);
        methods.push_back(method_context(op));
    }

    Object ctx = targets::profile_context(profile).as_object();
    ctx.set("tag", tag);
    ctx.set("className", cls);
    ctx.set("guardStem", upper(cls));
    ctx.set("headerGuard", guard(cls));
    auto tag_info = spec.tags.find(tag);
    ctx.set("docLines", doc_lines(tag_info == spec.tags.end() ? std::string() : tag_info->second.description));
    ctx.set("basepathLiteral", cpp_literal(server_url(spec)));
    ctx.set("modelIncludes", as_array(includes));
    ctx.set("methods", std::move(methods));

    GeneratedProject out;
    out.files["lib/services/" + cls + ".h"] = render("service_header", ctx);
    out.files["lib/services/" + cls + ".cpp"] = render("service_source", ctx);
    out.files["lib/TestFiles/" + cls + "Example.h"] = render("service_example", ctx);
    return out;
}

std::string emit_abstract_service(const TargetProfile& profile, const CertBundle& bundle) {
    Object ctx = targets::profile_context(profile).as_object();
    // The snippet is a free-standing function body; inside the class it sits one level deeper.
    std::string snippet = targets::select_network_snippet(profile), body;
    for (std::size_t start = 0; start < snippet.size();) {
        std::size_t nl = snippet.find('\n', start);
        std::size_t end = nl == std::string::npos ? snippet.size() : nl + 1;
        if (snippet[start] != '\n') body += "    ";
        body.append(snippet, start, end - start);
        start = end;
    }
    ctx.set("beginBody", body);
    ctx.set("certificates", targets::embed_certificates(bundle));
    return render("abstract_service", ctx);
}

GeneratedProject emit_support_files(const ApiSpec& spec, const TargetProfile& profile, const CertBundle& bundle) {
    Object ctx = targets::profile_context(profile).as_object();

    Array models;
    for (const auto& name : model_names(spec)) models.push_back(model_summary(name));
    ctx.set("hasModels", !models.empty());
    ctx.set("models", std::move(models));

    Array services;
    auto by_tag = operations_by_tag(spec);
    for (const auto& tag : service_tags(spec)) {
        Array methods;
        for (const auto& op : by_tag[tag]) methods.push_back(method_context(op));
        services.push_back(Object{{"className", naming::service_class(spec, tag)}, {"methods", std::move(methods)}});
    }
    ctx.set("services", std::move(services));

    const Operation* example = nullptr;
    for (const auto& op : spec.operations)
        if (op.method == HttpMethod::get) {
            example = &op;
            break;
        }
    if (!example && !spec.operations.empty()) example = &spec.operations.front();
    if (example) {
        Array args;
        for (const auto& p : example->parameters)
            args.push_back(Object{{"argType", map_type(p.schema)}, {"argName", naming::identifier(p.name)}});
        ctx.set("example", Object{{"exampleService", naming::service_class(spec, example->tag)},
                                  {"exampleMethod", naming::method_name(*example)},
                                  {"exampleDataType", response_shape(*example).data_type},
                                  {"exampleArgList", arg_list(*example)},
                                  {"exampleArgs", std::move(args)}});
    }

    ctx.set("title", spec.title.empty() ? std::string("API client") : spec.title);
    Array doc = doc_lines(spec.description);
    ctx.set("hasDoc", !doc.empty());
    ctx.set("docLines", std::move(doc));
    ctx.set("apiVersion", spec.version);
    ctx.set("serverUrl", server_url(spec));
    Array certs;
    for (std::size_t i = 0; i < bundle.entries.size(); ++i)
        certs.push_back(Object{{"file", bundle.entries[i].filename}, {"constant", targets::certificate_constant(i)}});
    ctx.set("hasCertificates", !certs.empty());
    ctx.set("multipleCertificates", certs.size() > 1);
    ctx.set("certificates", std::move(certs));

    GeneratedProject out;
    out.files["lib/services/Response.h"] = render("response", ctx);
    out.files["lib/services/JsonCodec.h"] = render("json_codec", ctx);
    out.files["src/main.cpp"] = render("main_cpp", ctx);
    out.files["test/RunTests.cpp"] = render("run_tests", ctx);
    out.files["README.md"] = render("project_readme", ctx);
    out.files["platformio.ini"] = targets::emit_platformio_ini(profile);
    if (ctx.find("runsBourneScript")->as_bool())
        out.files["pre_compiling_bourne.py"] = std::string(assets::get("pre_compiling_bourne_py"));
    return out;
}

std::string encode_query(const std::vector<std::pair<std::string, std::string>>& params) {
    static const char hex[] = "0123456789ABCDEF";
    auto encode = [](std::string& out, std::string_view text) {
        for (unsigned char c : text) {
            if (std::isalnum(c) || c == '-' || c == '.' || c == '_' || c == '~') {
                out += static_cast<char>(c);
            } else {
                out += '%';
                out += hex[c >> 4];
                out += hex[c & 0x0F];
            }
        }
    };
    std::string out;
    for (const auto& [name, value] : params) {
        out += out.empty() ? '?' : '&';
        encode(out, name);
        out += '=';
        encode(out, value);
    }
    return out;
}

std::vector<std::string> model_names(const ApiSpec& spec) {
    std::vector<std::string> out;
    for (const auto& [name, schema] : spec.schemas)
        if (schema->is_named_object()) out.push_back(name);
    return out;
}

std::vector<std::string> service_tags(const ApiSpec& spec) {
    std::vector<std::string> out;
    for (const auto& op : spec.operations)
        if (std::find(out.begin(), out.end(), op.tag) == out.end()) out.push_back(op.tag);
    return out;
}

GeneratedProject assemble_project(const ApiSpec& spec, const TargetProfile& profile, const CertBundle& bundle) {
    std::string url = server_url(spec);
    bool https = url.compare(0, 8, "https://") == 0;
    if (!https && url.compare(0, 7, "http://") != 0)
        throw EmitError("server URL '" + url + "' is not an absolute http:// or https:// URL");
    if (https && !profile.tls_supported)
        throw TargetError("target " + profile.id + " cannot reach " + url +
                          ": HTTPS on this target needs an x509 fingerprint, which is not supported");
    if (!bundle.empty() && !profile.tls_supported)
        throw TargetError("target " + profile.id + " does not support TLS, so root certificates cannot be bundled");

    GeneratedProject project;
    for (const auto& name : model_names(spec)) project.merge(emit_model(name, *spec.schemas.at(name)));
    auto by_tag = operations_by_tag(spec);
    for (const auto& tag : service_tags(spec)) project.merge(emit_service(spec, tag, by_tag[tag], profile));
    project.files["lib/services/AbstractService.h"] = emit_abstract_service(profile, bundle);
    project.merge(emit_support_files(spec, profile, bundle));

    for (auto& [path, content] : project.files) content = finish_text(std::move(content));
    for (const auto& entry : bundle.entries) project.files[entry.filename] = entry.pem;
    return project;
}

}  // namespace tinygen::emit
