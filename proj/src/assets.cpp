// SPDX-License-Identifier: Apache-2.0
#include "tinygen/assets.hpp"

#include <string>

#include "tinygen/error.hpp"

namespace tinygen::assets {

std::string_view get(std::string_view name) {
    for (const auto& asset : all())
        if (asset.name == name) return asset.text;
    throw Error("no embedded template named '" + std::string(name) + "'");
}

}  // namespace tinygen::assets
