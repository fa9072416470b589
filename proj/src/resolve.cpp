// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <map>

#include "tinygen/error.hpp"
#include "tinygen/ingest.hpp"

namespace tinygen::ingest {

namespace {

class Resolver {
public:
    explicit Resolver(const ApiSpec& spec) : spec_(spec) {}

    SchemaPtr resolve(const SchemaPtr& schema, const std::string& location);
    SchemaPtr resolve_named(const std::string& name, const std::string& location);

private:
    const ApiSpec& spec_;
    std::map<std::string, SchemaPtr> done_;
    std::vector<std::string> visiting_;
};

SchemaPtr Resolver::resolve_named(const std::string& name, const std::string& location) {
    if (auto it = done_.find(name); it != done_.end()) return it->second;

    auto open = std::find(visiting_.begin(), visiting_.end(), name);
    if (open != visiting_.end()) {
        std::string members;
        for (auto it = open; it != visiting_.end(); ++it) members += *it + " -> ";
        members += name;
        throw SpecError("#/components/schemas/" + *open, "reference cycle: " + members);
    }

    auto target = spec_.schemas.find(name);
    if (target == spec_.schemas.end())
        throw SpecError(location, "dangling reference to '" + name + "'");

    visiting_.push_back(name);
    SchemaPtr resolved = resolve(target->second, "#/components/schemas/" + name);
    visiting_.pop_back();
    done_[name] = resolved;
    return resolved;
}

SchemaPtr Resolver::resolve(const SchemaPtr& schema, const std::string& location) {
    if (!schema) return schema;
    switch (schema->kind) {
    case SchemaKind::reference: return resolve_named(schema->ref, location);
    case SchemaKind::array: {
        SchemaPtr items = resolve(schema->items, location + "/items");
        if (items == schema->items) return schema;
        auto copy = std::make_shared<Schema>(*schema);
        copy->items = items;
        return copy;
    }
    case SchemaKind::object: {
        std::shared_ptr<Schema> copy;
        for (std::size_t i = 0; i < schema->properties.size(); ++i) {
            const auto& prop = schema->properties[i];
            SchemaPtr r = resolve(prop.schema, location + "/properties/" + prop.name);
            if (r != prop.schema) {
                if (!copy) copy = std::make_shared<Schema>(*schema);
                copy->properties[i].schema = r;
            }
        }
        return copy ? SchemaPtr(copy) : schema;
    }
    default: return schema;
    }
}

}  // namespace

ApiSpec resolve_references(const ApiSpec& spec) {
    Resolver resolver(spec);
    ApiSpec out = spec;
    for (auto& [name, schema] : out.schemas) schema = resolver.resolve_named(name, "#/components/schemas/" + name);
    for (auto& op : out.operations) {
        for (auto& p : op.parameters) p.schema = resolver.resolve(p.schema, op.location + " parameter " + p.name);
        if (op.request_body) {
            op.request_body->schema = resolver.resolve(op.request_body->schema, op.location + " requestBody");
            // The body parameter shares the request body schema.
            for (auto& p : op.parameters)
                if (p.location == ParamLocation::body) p.schema = op.request_body->schema;
        }
        for (auto& [code, schema] : op.responses)
            schema = resolver.resolve(schema, op.location + " response " + code);
    }
    return out;
}

}  // namespace tinygen::ingest
