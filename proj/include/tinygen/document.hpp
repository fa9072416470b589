// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

#include "tinygen/value.hpp"

namespace tinygen::ingest {

enum class Format { yaml, json, automatic };

/// Parses a YAML or JSON document into an insertion-ordered Value tree.
/// Throws ParseError on syntax errors and Error when the format cannot be determined.
Value parse_document(std::string_view text, Format hint = Format::automatic);

/// Format implied by a file name's extension; `automatic` when unknown.
Format format_from_path(std::string_view path);

}  // namespace tinygen::ingest
