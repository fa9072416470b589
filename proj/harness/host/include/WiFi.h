// SPDX-License-Identifier: Apache-2.0
// The host is always "connected": begin() succeeds and status() reports WL_CONNECTED.
#ifndef TINYGEN_HOST_WIFI_H_
#define TINYGEN_HOST_WIFI_H_

#include "Arduino.h"

enum wl_status_t { WL_IDLE_STATUS = 0, WL_CONNECTED = 3, WL_DISCONNECTED = 6 };

class WiFiClass {
public:
    wl_status_t begin(const char *ssid, const char *password);
    wl_status_t status() const;
};

extern WiFiClass WiFi;

/// Network client handed to HTTPClient::begin on targets that need one. Carries no state on the host.
class WiFiClient {
};

#endif  // TINYGEN_HOST_WIFI_H_
