// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

#include "tinygen/api_spec.hpp"

namespace tinygen::naming {

/// Valid C++ identifier: invalid characters become '_', a leading digit gets a '_' prefix,
/// keywords get a '_' suffix.
std::string identifier(std::string_view raw);

/// "pet-store_item" -> "PetStoreItem"
std::string pascal_case(std::string_view raw);

/// "PetStore" -> "petStore"
std::string lower_first(std::string_view raw);
std::string upper_first(std::string_view raw);

/// Model class name for a component schema.
std::string model_class(std::string_view schema_name);

/// `<Tag>Service`, or `<x-service-name>Service` when the tag declares one.
std::string service_class(const ApiSpec& spec, const std::string& tag);

/// operation_id verbatim (made a valid identifier), else `<verb><PathCamelCase>`.
std::string method_name(const Operation& op);

bool is_cpp_keyword(std::string_view word);

}  // namespace tinygen::naming
