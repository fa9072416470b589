// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tinygen/value.hpp"

namespace tinygen::targets {

enum class BeginStyle {
    /// `http.begin(url, root_ca)`: the HTTP library does the TLS handshake with a CA certificate.
    root_ca,
    /// `http.begin(client, url)`: the caller owns a network client object.
    plain_client,
};

struct TargetProfile {
    std::string id;
    std::string pio_platform;
    std::string pio_board;      // empty for the host platform
    std::string pio_framework;  // empty for the host platform
    BeginStyle begin_style = BeginStyle::root_ca;
    bool tls_supported = false;
    std::vector<std::string> lib_deps;
    std::vector<std::string> extra_scripts;
    std::string http_header;  // header declaring HTTPClient
    std::string wifi_header;  // header declaring WiFi / WiFiClient
    bool native = false;      // desktop build: main() drives setup()/loop()
    bool user_facing = true;  // listed without --allow-native
};

/// Registered profiles in display order. Immutable.
const std::vector<TargetProfile>& registry();

/// Throws TargetError listing the valid ids when `id` is unknown.
const TargetProfile& get_profile(std::string_view id);

std::vector<std::string> target_ids(bool include_native);

/// Template context describing the profile (flags such as isESP32, beginWithRootCa, ...).
Value profile_context(const TargetProfile& profile);

/// `[env:<id>]` section with platform/board/framework, lib_deps and extra_scripts.
std::string emit_platformio_ini(const TargetProfile& profile);

/// Body of the generated AbstractService::begin method for the profile.
std::string select_network_snippet(const TargetProfile& profile);

struct CertEntry {
    std::string filename;
    std::string pem;
};

struct CertBundle {
    std::vector<CertEntry> entries;

    bool empty() const noexcept { return entries.empty(); }
};

/// One input -> root.cert; several -> root1.cert ... rootN.cert in input order.
/// Throws CertificateError naming the index of an input without a PEM certificate block.
CertBundle bundle_certificates(const std::vector<std::string>& pem_files);

/// Source fragment declaring `root_ca` (and root_ca_2 ... for extra certificates).
/// An empty bundle declares a null `root_ca`.
std::string embed_certificates(const CertBundle& bundle);

/// C++ identifier of the constant holding bundle entry `index` (0-based).
std::string certificate_constant(std::size_t index);

}  // namespace tinygen::targets
