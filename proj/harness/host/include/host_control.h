// SPDX-License-Identifier: Apache-2.0
// Test hooks of the host runtime. Generated code never includes this header.
#ifndef TINYGEN_HOST_CONTROL_H_
#define TINYGEN_HOST_CONTROL_H_

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace host {

struct RecordedRequest {
    std::string method;
    std::string url;
    std::vector<std::pair<std::string, std::string> > headers;
    std::string body;
    bool hadRootCa;
};

/// Answers requests in-process instead of going to the network. Returns the status code
/// and fills `body`. An empty function restores network access.
typedef std::function<int(const RecordedRequest &request, std::string &body)> Responder;
void setResponder(Responder responder);

/// Every request sent through HTTPClient, in order.
const std::vector<RecordedRequest> &recordedRequests();
void clearRecordedRequests();

/// Everything written through Serial so far.
const std::string &serialOutput();

}  // namespace host

#endif  // TINYGEN_HOST_CONTROL_H_
