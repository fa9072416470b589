// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tinygen/api_spec.hpp"
#include "tinygen/document.hpp"
#include "tinygen/value.hpp"

namespace tinygen::ingest {

/// Builds the IR from a parsed OpenAPI 3.0.x tree. Schema references stay unresolved.
/// Throws SpecError for structural problems (missing paths, unsupported verbs, bad placeholders).
ApiSpec build_spec(const Value& tree);

/// Replaces every reference with the named component it points at.
/// Throws SpecError on dangling references and on reference cycles (message names the members).
ApiSpec resolve_references(const ApiSpec& spec);

enum class Severity { warning, error };

struct Diagnostic {
    Severity severity = Severity::error;
    std::string location;
    std::string message;
    /// Index into ApiSpec::operations when the problem belongs to one operation.
    std::optional<std::size_t> operation;
    /// Component schema and property when the problem belongs to one model field.
    std::string schema;
    std::string property;
};

/// `severity: location: message`
std::string format(const Diagnostic& d);

bool has_errors(const std::vector<Diagnostic>& diagnostics);

/// Checks a resolved spec against the generatable feature set. Empty result means generatable.
std::vector<Diagnostic> validate(const ApiSpec& spec);

/// Drops the operations and model properties that carry error diagnostics.
/// Works on the unresolved spec (resolve again afterwards). Returns the dropped items as warnings
/// via `skipped`; errors that cannot be skipped are left in `remaining`.
struct SkipResult {
    ApiSpec spec;
    std::vector<Diagnostic> skipped;
    std::vector<Diagnostic> remaining;
};
SkipResult apply_skip_policy(const ApiSpec& unresolved, const std::vector<Diagnostic>& diagnostics);

/// Status key of the success payload response: lowest 2xx, else "default".
std::optional<std::string> success_status(const Operation& op);

/// parse_document + build_spec + resolve_references.
ApiSpec load_spec(std::string_view text, Format hint = Format::automatic);

}  // namespace tinygen::ingest
