// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>
#include <vector>

namespace tinygen::assets {

struct Asset {
    std::string_view name;  // file stem under templates/
    std::string_view text;
};

/// Every embedded template, sorted by name.
const std::vector<Asset>& all();

/// Throws Error when no template with that stem exists.
std::string_view get(std::string_view name);

}  // namespace tinygen::assets
