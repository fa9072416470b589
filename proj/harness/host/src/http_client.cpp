// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cctype>
#include <regex>

#include <httplib.h>

#include "HTTPClient.h"
#include "host_state.hpp"

namespace host::detail {

std::string& serial_buffer() {
    static std::string buffer;
    return buffer;
}

std::vector<RecordedRequest>& request_log() {
    static std::vector<RecordedRequest> log;
    return log;
}

Responder& responder() {
    static Responder r;
    return r;
}

}  // namespace host::detail

namespace host {

void setResponder(Responder r) { detail::responder() = std::move(r); }
const std::vector<RecordedRequest>& recordedRequests() { return detail::request_log(); }
void clearRecordedRequests() { detail::request_log().clear(); }

}  // namespace host

namespace {

struct UrlParts {
    std::string origin;  // scheme://host[:port]
    std::string target;  // path and query
    bool https = false;
};

bool equal_ignoring_case(const std::string& a, const std::string& b) {
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](unsigned char x, unsigned char y) {
               return std::tolower(x) == std::tolower(y);
           });
}

bool split_url(const std::string& url, UrlParts& out) {
    static const std::regex pattern(R"(^(https?)://([^/?#\s]+)([^#\s]*)$)");
    std::smatch m;
    if (!std::regex_match(url, m, pattern)) return false;
    out.https = m[1] == "https";
    out.origin = m[1].str() + "://" + m[2].str();
    out.target = m[3].length() ? m[3].str() : "/";
    return true;
}

}  // namespace

bool HTTPClient::begin(String url) {
    UrlParts parts;
    url_ = url.c_str();
    rootCa_.clear();
    headers_.clear();
    body_.clear();
    ready_ = split_url(url_, parts);
    return ready_;
}

bool HTTPClient::begin(String url, const char* rootCa) {
    bool ok = begin(url);
    if (rootCa) rootCa_ = rootCa;
    return ok;
}

bool HTTPClient::begin(WiFiClient&, String url) { return begin(url); }

void HTTPClient::addHeader(const String& name, const String& value) {
    headers_.emplace_back(name.c_str(), value.c_str());
}

int HTTPClient::sendRequest(const char* method, String payload) {
    body_.clear();
    if (!ready_) return HTTPC_ERROR_NOT_CONNECTED;

    host::RecordedRequest record{method, url_, headers_, payload.c_str(), !rootCa_.empty()};
    host::detail::request_log().push_back(record);
    if (auto& respond = host::detail::responder()) return respond(record, body_);

    UrlParts parts;
    split_url(url_, parts);
    if (parts.https) return HTTPC_ERROR_CONNECTION_REFUSED;

    httplib::Client client(parts.origin);
    client.set_connection_timeout(5);
    client.set_read_timeout(10);
    httplib::Request request;
    request.method = method;
    request.path = parts.target;
    std::string content_type;
    for (const auto& [name, value] : headers_) {
        if (equal_ignoring_case(name, "Content-Type")) content_type = value;
        request.set_header(name, value);
    }
    request.set_header("Connection", "close");
    if (!record.body.empty() || !content_type.empty()) request.body = record.body;

    httplib::Result result = client.send(request);
    if (!result) {
        switch (result.error()) {
        case httplib::Error::Connection: return HTTPC_ERROR_CONNECTION_REFUSED;
        case httplib::Error::Read: return HTTPC_ERROR_CONNECTION_LOST;
        case httplib::Error::ConnectionTimeout: return HTTPC_ERROR_READ_TIMEOUT;
        default: return HTTPC_ERROR_SEND_HEADER_FAILED;
        }
    }
    body_ = result->body;
    return result->status;
}

void HTTPClient::end() {
    ready_ = false;
    headers_.clear();
}
