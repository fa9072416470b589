// SPDX-License-Identifier: Apache-2.0
#ifndef TINYGEN_HOST_ESP8266HTTPCLIENT_H_
#define TINYGEN_HOST_ESP8266HTTPCLIENT_H_

#include "HTTPClient.h"

#endif  // TINYGEN_HOST_ESP8266HTTPCLIENT_H_
