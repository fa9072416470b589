// SPDX-License-Identifier: Apache-2.0
#include "tinygen/targets.hpp"

#include <algorithm>

#include "tinygen/assets.hpp"
#include "tinygen/error.hpp"
#include "tinygen/template.hpp"

namespace tinygen::targets {

namespace {

const char* const kBourne = "github.com/steinwurf/bourne.git";
const char* const kBourneScript = "pre_compiling_bourne.py";

std::vector<TargetProfile> make_registry() {
    TargetProfile esp32;
    esp32.id = "esp32";
    esp32.pio_platform = "espressif32";
    esp32.pio_board = "nodemcu-32s";
    esp32.pio_framework = "arduino";
    esp32.begin_style = BeginStyle::root_ca;
    esp32.tls_supported = true;
    esp32.lib_deps = {kBourne};
    esp32.extra_scripts = {kBourneScript};
    esp32.http_header = "HTTPClient.h";
    esp32.wifi_header = "WiFi.h";

    TargetProfile esp8266;
    esp8266.id = "esp8266";
    esp8266.pio_platform = "espressif8266";
    esp8266.pio_board = "d1_mini";
    esp8266.pio_framework = "arduino";
    esp8266.begin_style = BeginStyle::plain_client;
    esp8266.tls_supported = false;
    esp8266.lib_deps = {kBourne};
    esp8266.extra_scripts = {kBourneScript};
    esp8266.http_header = "ESP8266HTTPClient.h";
    esp8266.wifi_header = "ESP8266WiFi.h";

    // Desktop build against a host shim that supplies the Arduino-style headers.
    TargetProfile native;
    native.id = "native-host";
    native.pio_platform = "native";
    native.begin_style = BeginStyle::root_ca;
    native.tls_supported = true;
    native.http_header = "HTTPClient.h";
    native.wifi_header = "WiFi.h";
    native.native = true;
    native.user_facing = false;

    return {esp32, esp8266, native};
}

/// Empty strings are truthy in templates, so absent settings become null.
Value optional(const std::string& s) {
    return s.empty() ? Value() : Value(s);
}

Array strings(const std::vector<std::string>& items) {
    Array out;
    for (const auto& s : items) out.emplace_back(s);
    return out;
}

}  // namespace

const std::vector<TargetProfile>& registry() {
    static const std::vector<TargetProfile> profiles = make_registry();
    return profiles;
}

const TargetProfile& get_profile(std::string_view id) {
    for (const auto& p : registry())
        if (p.id == id) return p;
    std::string valid;
    for (const auto& p : registry()) {
        if (!valid.empty()) valid += ", ";
        valid += p.id;
    }
    throw TargetError("unknown target '" + std::string(id) + "' (valid targets: " + valid + ")");
}

std::vector<std::string> target_ids(bool include_native) {
    std::vector<std::string> ids;
    for (const auto& p : registry())
        if (p.user_facing || include_native) ids.push_back(p.id);
    return ids;
}

Value profile_context(const TargetProfile& profile) {
    Object ctx;
    ctx.set("id", profile.id);
    ctx.set("platform", profile.pio_platform);
    ctx.set("board", optional(profile.pio_board));
    ctx.set("framework", optional(profile.pio_framework));
    ctx.set("libDeps", strings(profile.lib_deps));
    ctx.set("hasLibDeps", !profile.lib_deps.empty());
    ctx.set("extraScripts", strings(profile.extra_scripts));
    ctx.set("hasExtraScripts", !profile.extra_scripts.empty());
    ctx.set("httpHeader", profile.http_header);
    ctx.set("wifiHeader", profile.wifi_header);
    ctx.set("isESP32", profile.id == "esp32");
    ctx.set("isESP8266", profile.id == "esp8266");
    ctx.set("isNative", profile.native);
    ctx.set("beginWithRootCa", profile.begin_style == BeginStyle::root_ca);
    ctx.set("beginWithClient", profile.begin_style == BeginStyle::plain_client);
    ctx.set("tlsSupported", profile.tls_supported);
    ctx.set("runsBourneScript",
            std::find(profile.extra_scripts.begin(), profile.extra_scripts.end(), kBourneScript) !=
                profile.extra_scripts.end());
    return ctx;
}

std::string emit_platformio_ini(const TargetProfile& profile) {
    return tmpl::render_text(assets::get("platformio_ini"), profile_context(profile));
}

std::string select_network_snippet(const TargetProfile& profile) {
    return tmpl::render_text(assets::get("begin_body"), profile_context(profile));
}

}  // namespace tinygen::targets
