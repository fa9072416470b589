// SPDX-License-Identifier: Apache-2.0
#include <map>
#include <set>

#include "tinygen/ingest.hpp"
#include "tinygen/naming.hpp"

namespace tinygen::ingest {

namespace {

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& item : items) {
        if (!out.empty()) out += ", ";
        out += item;
    }
    return out;
}

bool is_scalar(SchemaKind kind) {
    switch (kind) {
    case SchemaKind::string:
    case SchemaKind::boolean:
    case SchemaKind::integer32:
    case SchemaKind::integer64:
    case SchemaKind::float64:
    case SchemaKind::string_enum: return true;
    default: return false;
    }
}

/// Reason a schema used as a payload or model field cannot be generated, empty when it can.
std::string payload_problem(const SchemaPtr& schema) {
    if (!schema) return "missing schema";
    switch (schema->kind) {
    case SchemaKind::unsupported: return "unsupported schema: " + schema->unsupported_reason;
    case SchemaKind::reference: return "unresolved reference to '" + schema->ref + "'";
    case SchemaKind::object:
        if (schema->name.empty()) return "inline object schemas are unsupported (declare it under components/schemas)";
        return {};
    case SchemaKind::array: return payload_problem(schema->items);
    default: return {};
    }
}

std::string parameter_problem(const Parameter& p) {
    if (p.location == ParamLocation::body) return payload_problem(p.schema);
    if (!p.schema) return "missing schema";
    if (p.schema->kind == SchemaKind::unsupported) return "unsupported schema: " + p.schema->unsupported_reason;
    if (is_scalar(p.schema->kind)) return {};
    if (p.schema->kind == SchemaKind::array && p.location != ParamLocation::path && p.schema->items &&
        is_scalar(p.schema->items->kind))
        return {};
    return std::string(to_string(p.schema->kind)) + " values are unsupported in " + to_string(p.location) +
           " parameters";
}

}  // namespace

std::string format(const Diagnostic& d) {
    return std::string(d.severity == Severity::error ? "error" : "warning") + ": " + d.location + ": " + d.message;
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
    for (const auto& d : diagnostics)
        if (d.severity == Severity::error) return true;
    return false;
}

std::vector<Diagnostic> validate(const ApiSpec& spec) {
    std::vector<Diagnostic> out;
    auto op_diag = [&](Severity sev, std::size_t index, std::string message) {
        Diagnostic d;
        d.severity = sev;
        d.location = spec.operations[index].location;
        d.message = std::move(message);
        d.operation = index;
        out.push_back(std::move(d));
    };

    if (spec.server_urls.empty())
        out.push_back({Severity::error, "#/servers", "no server URL (declare servers or pass --server-url)", {}, {}, {}});

    std::map<std::string, std::set<std::string>> methods_by_service;
    for (std::size_t i = 0; i < spec.operations.size(); ++i) {
        const Operation& op = spec.operations[i];
        for (const auto& [name, in] : op.unsupported_parameters)
            op_diag(Severity::error, i, in + " parameters unsupported ('" + name + "')");
        if (!op.unsupported_request_media.empty())
            op_diag(Severity::error, i,
                    "unsupported request media type(s): " + join(op.unsupported_request_media) +
                        "; only application/json is implemented");
        if (!op.ignored_request_media.empty())
            op_diag(Severity::warning, i, "ignoring non-JSON request media type(s): " + join(op.ignored_request_media));
        if (!op.unsupported_response_media.empty())
            op_diag(Severity::error, i,
                    "unsupported response media type(s): " + join(op.unsupported_response_media) +
                        "; only application/json is implemented");
        if (!op.ignored_response_media.empty())
            op_diag(Severity::warning, i,
                    "ignoring non-JSON response media type(s): " + join(op.ignored_response_media));

        for (const auto& p : op.parameters) {
            std::string problem = parameter_problem(p);
            if (!problem.empty()) op_diag(Severity::error, i, std::string(to_string(p.location)) + " parameter '" + p.name + "': " + problem);
        }
        if (auto status = success_status(op)) {
            const SchemaPtr& schema = op.responses.at(*status);
            if (schema) {
                std::string problem = payload_problem(schema);
                if (!problem.empty()) op_diag(Severity::error, i, "response " + *status + ": " + problem);
            }
        }
        std::string service = naming::service_class(spec, op.tag);
        if (!methods_by_service[service].insert(naming::method_name(op)).second)
            op_diag(Severity::error, i,
                    "duplicate method name '" + naming::method_name(op) + "' in " + service);
    }

    std::map<std::string, std::string> classes;
    for (const char* reserved : {"AbstractService", "Response", "JsonCodec"}) classes[reserved] = "<generated>";
    for (const auto& [service, _] : methods_by_service) classes[service] = "<service>";

    for (const auto& [name, schema] : spec.schemas) {
        std::string location = "#/components/schemas/" + name;
        if (schema->kind == SchemaKind::unsupported) {
            out.push_back({Severity::warning, location,
                           "component not generated: " + schema->unsupported_reason, {}, {}, {}});
            continue;
        }
        if (!schema->is_named_object()) continue;
        std::string cls = naming::model_class(name);
        if (auto [it, inserted] = classes.emplace(cls, name); !inserted)
            out.push_back({Severity::error, location,
                           "model class name '" + cls + "' collides with '" + it->second + "'", {}, {}, {}});
        std::set<std::string> fields;
        for (const auto& prop : schema->properties) {
            std::string problem = payload_problem(prop.schema);
            if (!problem.empty()) {
                out.push_back({Severity::error, location + "/properties/" + prop.name,
                               "property '" + prop.name + "': " + problem, {}, name, prop.name});
            } else if (!fields.insert(naming::identifier(prop.name)).second) {
                out.push_back({Severity::error, location + "/properties/" + prop.name,
                               "property '" + prop.name + "' maps to a duplicate field name", {}, name, prop.name});
            }
        }
    }
    return out;
}

SkipResult apply_skip_policy(const ApiSpec& unresolved, const std::vector<Diagnostic>& diagnostics) {
    SkipResult result;
    std::set<std::size_t> drop_ops;
    std::map<std::string, std::set<std::string>> drop_props;
    for (const auto& d : diagnostics) {
        if (d.severity != Severity::error) continue;
        Diagnostic w = d;
        w.severity = Severity::warning;
        if (d.operation) {
            drop_ops.insert(*d.operation);
            w.message += " (operation skipped)";
            result.skipped.push_back(std::move(w));
        } else if (!d.schema.empty() && !d.property.empty()) {
            drop_props[d.schema].insert(d.property);
            w.message += " (property dropped)";
            result.skipped.push_back(std::move(w));
        } else {
            result.remaining.push_back(d);
        }
    }

    result.spec = unresolved;
    std::vector<Operation> kept;
    for (std::size_t i = 0; i < unresolved.operations.size(); ++i)
        if (!drop_ops.count(i)) kept.push_back(unresolved.operations[i]);
    result.spec.operations = std::move(kept);

    for (const auto& [schema_name, props] : drop_props) {
        auto it = result.spec.schemas.find(schema_name);
        if (it == result.spec.schemas.end()) continue;
        auto copy = std::make_shared<Schema>(*it->second);
        std::vector<Property> kept_props;
        for (const auto& p : copy->properties)
            if (!props.count(p.name)) kept_props.push_back(p);
        copy->properties = std::move(kept_props);
        it->second = copy;
    }
    return result;
}

}  // namespace tinygen::ingest
