// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tinygen/api_spec.hpp"
#include "tinygen/targets.hpp"

namespace tinygen::emit {

/// Relative path ('/'-separated) -> file bytes. std::map keeps paths in lexicographic order.
struct GeneratedProject {
    std::map<std::string, std::string> files;

    void merge(GeneratedProject other);
};

/// C++11 type used for a resolved schema. Throws EmitError for kinds that cannot be emitted.
std::string map_type(const SchemaPtr& schema);

/// `lib/models/<Class>.h` and `.cpp` for a named object schema.
GeneratedProject emit_model(const std::string& name, const Schema& schema);

/// `lib/services/<Tag>Service.h` and `.cpp` holding one method per operation.
/// `ops` must be non-empty and share one tag.
GeneratedProject emit_service(const ApiSpec& spec, const std::string& tag, const std::vector<Operation>& ops,
                              const targets::TargetProfile& profile);

/// Contents of `lib/services/AbstractService.h`.
std::string emit_abstract_service(const targets::TargetProfile& profile, const targets::CertBundle& bundle);

/// Response.h, JsonCodec.h, src/main.cpp, test/RunTests.cpp, lib/TestFiles/*, README.md,
/// platformio.ini and the Bourne patch script (device targets only).
/// `bundle` only feeds the certificate section of the README.
GeneratedProject emit_support_files(const ApiSpec& spec, const targets::TargetProfile& profile,
                                    const targets::CertBundle& bundle = {});

/// `?a=1&b=x%20y` with RFC 3986 unreserved characters kept and everything else percent-encoded
/// as uppercase hex. Empty input gives an empty string.
std::string encode_query(const std::vector<std::pair<std::string, std::string>>& params);

/// The whole client project. Certificate files are copied byte for byte, every other text file
/// ends with a newline and uses LF line endings.
GeneratedProject assemble_project(const ApiSpec& spec, const targets::TargetProfile& profile,
                                  const targets::CertBundle& bundle);

/// Model files and service files would be generated for these names.
std::vector<std::string> model_names(const ApiSpec& spec);
std::vector<std::string> service_tags(const ApiSpec& spec);

}  // namespace tinygen::emit
