// SPDX-License-Identifier: Apache-2.0
#ifndef TINYGEN_HOST_ESP8266WIFI_H_
#define TINYGEN_HOST_ESP8266WIFI_H_

#include "WiFi.h"

#endif  // TINYGEN_HOST_ESP8266WIFI_H_
