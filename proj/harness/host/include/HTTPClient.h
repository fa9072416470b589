// SPDX-License-Identifier: Apache-2.0
// HTTP/1.1 client with the ESP32/ESP8266 HTTPClient call shape, for running generated code on a desktop.
// Plain http:// only. Failures are reported as negative status codes, as on the devices.
#ifndef TINYGEN_HOST_HTTPCLIENT_H_
#define TINYGEN_HOST_HTTPCLIENT_H_

#include <string>
#include <utility>
#include <vector>

#include "Arduino.h"

class WiFiClient;

#define HTTPC_ERROR_CONNECTION_REFUSED (-1)
#define HTTPC_ERROR_SEND_HEADER_FAILED (-2)
#define HTTPC_ERROR_NOT_CONNECTED (-4)
#define HTTPC_ERROR_CONNECTION_LOST (-5)
#define HTTPC_ERROR_READ_TIMEOUT (-11)

class HTTPClient {
public:
    /// False when `url` is not an absolute http:// or https:// URL.
    bool begin(String url);
    /// `rootCa` is recorded but not used: the host has no TLS, so https:// requests fail to connect.
    bool begin(String url, const char *rootCa);
    bool begin(WiFiClient &client, String url);

    void addHeader(const String &name, const String &value);

    /// Performs the request and returns the status code, or one of the HTTPC_ERROR_* codes.
    int sendRequest(const char *method, String payload);
    int GET() { return sendRequest("GET", String()); }
    int POST(String payload) { return sendRequest("POST", payload); }
    int PUT(String payload) { return sendRequest("PUT", payload); }

    String getString() const { return String(body_.c_str()); }
    void end();

private:
    bool ready_ = false;
    std::string url_;
    std::string rootCa_;
    std::vector<std::pair<std::string, std::string> > headers_;
    std::string body_;
};

#endif  // TINYGEN_HOST_HTTPCLIENT_H_
