// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tinygen/value.hpp"

namespace tinygen::harness {

struct RequestRecord {
    std::string method;
    std::string path;
    std::string query;  // raw query string without '?'
    std::vector<std::pair<std::string, std::string>> headers;  // Content-Type and Content-Length only
    std::string body;
    std::size_t ordinal = 0;  // 0-based arrival position
};

/// Pet store keyed by id. Values are canonical JSON text (sorted keys, compact).
struct StoreState {
    std::map<std::int64_t, std::string> pets;

    friend bool operator==(const StoreState&, const StoreState&) = default;
};

/// In-memory Petstore subset on 127.0.0.1. Requests are handled one at a time, in arrival order.
///
///   PUT /pet, POST /pet            store the pet and echo it (200), 400 for invalid input
///   POST /user/createWithList      echo the user list (200)
///   GET /pet/findByStatus          stored pets with the given status, by id (200)
///   GET /pet/{id}                  the stored pet (200) or "Pet not found" (404)
///   DELETE /pet/{id}               remove the pet if present, "Pet deleted" (200)
class MockServer {
public:
    MockServer();
    ~MockServer();
    MockServer(const MockServer&) = delete;
    MockServer& operator=(const MockServer&) = delete;

    /// Serves on a background thread. Port 0 picks a free port. Throws Error when binding fails.
    void start(int port = 0);
    void stop();

    int port() const;
    std::string base_url() const;

    std::vector<RequestRecord> requests() const;
    StoreState snapshot() const;
    void restore(StoreState state);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

struct ProcessResult {
    int exit_code = -1;  // valid when neither signaled nor timed out
    int signal = 0;
    bool timed_out = false;
    std::string out;
    std::string err;

    bool succeeded() const { return !timed_out && signal == 0 && exit_code == 0; }
    std::string describe() const;
};

/// Runs argv[0] (searched on PATH) without a shell and captures stdout and stderr.
ProcessResult run_process(const std::vector<std::string>& argv, std::chrono::milliseconds timeout);

struct ScenarioCase {
    int index = 0;
    std::string description;
    std::string method;    // GET, POST, PUT or DELETE
    std::string endpoint;  // path template, e.g. /pet/{petId}
    /// {"body": ...}, {"path": {name: value}}, {"query": {name: value}} in any combination.
    Value input;
    /// Shape the response body must have: "json-object", "json-array" or "text".
    std::string expected_output;
    /// When absent the oracle status only has to be 2xx.
    std::optional<int> expected_status;
    /// Checked against the oracle response: JSON bodies by value, text bodies byte for byte.
    std::optional<Value> expected_body;
};

/// Parses a scenario file: {"cases": [ScenarioCase...]}. Throws Error on malformed definitions.
std::vector<ScenarioCase> load_scenarios(std::string_view json_text);

struct Exchange {
    int status = 0;
    std::string body;
};

struct CaseResult {
    ScenarioCase scenario;
    bool passed = false;
    Exchange client;
    Exchange oracle;
    /// Why the case failed: diffs, client crash details, shape mismatch. Empty when passed.
    std::vector<std::string> problems;
};

struct Report {
    std::vector<CaseResult> cases;

    bool all_passed() const;
    std::size_t passed_count() const;
    /// One line per case plus indented problem lines, then a summary line.
    std::string format() const;
};

/// For each case: snapshot the store, run the client, restore the snapshot, issue the same request
/// directly (the oracle), then compare status, body and resulting store state.
///
/// The client is invoked as
///   <client> --base-url URL --case N --method M --endpoint E --input JSON
/// and must print one line {"status": <int>, "body": <string>} on stdout.
Report run_scenarios(const std::string& client_binary, MockServer& server, const std::vector<ScenarioCase>& cases,
                     std::chrono::milliseconds per_case_timeout = std::chrono::seconds(20));

/// Concrete request path for a case: placeholders replaced by percent-encoded input.path values,
/// followed by the encoded input.query parameters.
std::string request_target(const ScenarioCase& scenario);

/// "identical" or a description of the first differing byte with some context.
std::string byte_diff(std::string_view client, std::string_view oracle);

}  // namespace tinygen::harness
