// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tinygen/emit.hpp"

namespace tinygen::cli {

struct GenerateOptions {
    std::string input_path;
    std::string output_dir;
    std::string target_id = "esp32";
    std::vector<std::string> cert_paths;
    std::optional<std::string> server_url_override;
    bool allow_skip = false;    // drop unsupported operations and fields instead of failing
    bool allow_native = false;  // accept the native-host target
    bool force = false;         // replace a non-empty output directory
    bool report_sizes = false;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

/// Runs one command. `args` excludes the program name. Normal output goes to `out`,
/// diagnostics (`severity: location: message`) to `err`.
///
///   generate -i SPEC -o DIR [--target ID] [--cert PEM]... [--server-url URL]
///            [--allow-skip] [--allow-native] [--force] [--report-sizes]
///   check -i SPEC [--server-url URL] [--allow-skip]
///   list-targets [--allow-native]
///   mock-server [--port N]
///   conformance --client BIN --scenarios FILE
///
/// The TINYGEN_TARGET environment variable sets the default target; --target wins over it.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The generate command with already parsed options. The output directory is written through a
/// sibling staging directory, so a failed run leaves any previous output untouched.
int generate(const GenerateOptions& options, std::ostream& out, std::ostream& err);

/// Files and bytes per directory ("." for the project root), sorted by directory, then a total row.
std::string report_sizes(const emit::GeneratedProject& project);

}  // namespace tinygen::cli
