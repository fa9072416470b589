// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cctype>
#include <cstdio>
#include <set>
#include <sstream>

#include <httplib.h>
#include <json.hpp>

#include "tinygen/document.hpp"
#include "tinygen/emit.hpp"
#include "tinygen/error.hpp"
#include "tinygen/harness.hpp"

namespace tinygen::harness {

namespace {

using json = nlohmann::json;

const std::vector<std::string> known_methods = {"GET", "POST", "PUT", "DELETE"};
const std::vector<std::string> known_shapes = {"json-object", "json-array", "text"};

std::string text_of(const Value& v) { return v.is_string() ? v.as_string() : v.scalar_text(); }

std::string percent_encode(std::string_view text) {
    static const char* hex = "0123456789ABCDEF";
    std::string out;
    for (unsigned char c : text) {
        if (std::isalnum(c) || c == '-' || c == '.' || c == '_' || c == '~') {
            out += static_cast<char>(c);
        } else {
            out += '%';
            out += hex[c >> 4];
            out += hex[c & 15];
        }
    }
    return out;
}

std::string require_string(const Value& item, const char* key, const std::string& where) {
    const Value* v = item.get(key);
    if (!v || !v->is_string() || v->as_string().empty())
        throw Error(where + ": '" + key + "' must be a non-empty string");
    return v->as_string();
}

/// Escapes control and non-ASCII bytes so diff context stays on one line.
std::string printable(std::string_view text) {
    std::string out;
    for (unsigned char c : text) {
        if (c == '\\') {
            out += "\\\\";
        } else if (c >= 0x20 && c < 0x7f) {
            out += static_cast<char>(c);
        } else {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\x%02X", c);
            out += buf;
        }
    }
    return out;
}

std::string excerpt(std::string_view text, std::size_t at) {
    std::size_t from = at > 16 ? at - 16 : 0;
    return "\"" + printable(text.substr(from, 40)) + "\"";
}

struct ClientLine {
    Exchange exchange;
    std::string error;
};

/// Finds the protocol line in the client's stdout. Other output (logs, Serial) is ignored.
ClientLine parse_client_output(const std::string& out) {
    std::istringstream lines(out);
    std::string line;
    ClientLine found;
    found.error = "no {\"status\":..,\"body\":..} line on stdout";
    while (std::getline(lines, line)) {
        json doc = json::parse(line, nullptr, false);
        if (doc.is_discarded() || !doc.is_object()) continue;
        auto status = doc.find("status");
        auto body = doc.find("body");
        if (status == doc.end() || body == doc.end() || !status->is_number_integer() || !body->is_string()) continue;
        found.exchange = {status->get<int>(), body->get<std::string>()};
        found.error.clear();
    }
    return found;
}

Exchange send_oracle(MockServer& server, const ScenarioCase& scenario) {
    httplib::Client client(server.base_url());
    client.set_connection_timeout(5);
    client.set_read_timeout(10);
    std::string target = request_target(scenario);
    const Value* body = scenario.input.get("body");
    std::string payload = body ? to_json(*body) : std::string();
    const char* type = "application/json";

    httplib::Result res{nullptr, httplib::Error::Unknown};
    if (scenario.method == "GET") {
        res = client.Get(target);
    } else if (scenario.method == "DELETE") {
        res = body ? client.Delete(target, payload, type) : client.Delete(target);
    } else if (scenario.method == "POST") {
        res = client.Post(target, payload, type);
    } else {
        res = client.Put(target, payload, type);
    }
    if (!res) throw Error("oracle request " + scenario.method + " " + target + " failed: " + httplib::to_string(res.error()));
    return {res->status, res->body};
}

bool has_shape(const std::string& body, const std::string& shape) {
    if (shape == "text") return true;
    json doc = json::parse(body, nullptr, false);
    if (doc.is_discarded()) return false;
    return shape == "json-object" ? doc.is_object() : doc.is_array();
}

bool matches_expected(const Value& expected, const std::string& body) {
    if (expected.is_string()) return expected.as_string() == body;
    json doc = json::parse(body, nullptr, false);
    return !doc.is_discarded() && doc == json::parse(to_json(expected));
}

std::vector<std::string> state_differences(const StoreState& client, const StoreState& oracle) {
    std::vector<std::string> out;
    std::set<std::int64_t> ids;
    for (const auto& [id, _] : client.pets) ids.insert(id);
    for (const auto& [id, _] : oracle.pets) ids.insert(id);
    for (auto id : ids) {
        auto c = client.pets.find(id);
        auto o = oracle.pets.find(id);
        std::string label = "store state, pet " + std::to_string(id) + ": ";
        if (c == client.pets.end())
            out.push_back(label + "missing after the client request");
        else if (o == oracle.pets.end())
            out.push_back(label + "present only after the client request");
        else if (c->second != o->second)
            out.push_back(label + byte_diff(c->second, o->second));
    }
    return out;
}

}  // namespace

std::vector<ScenarioCase> load_scenarios(std::string_view json_text) {
    Value doc = ingest::parse_document(json_text, ingest::Format::json);
    const Value* cases = doc.get("cases");
    if (!cases || !cases->is_array()) throw Error("scenario file: top-level 'cases' array missing");

    std::vector<ScenarioCase> out;
    for (std::size_t i = 0; i < cases->as_array().size(); ++i) {
        const Value& item = cases->as_array()[i];
        std::string where = "scenario file: cases[" + std::to_string(i) + "]";
        if (!item.is_object()) throw Error(where + ": expected an object");
        ScenarioCase c;
        const Value* index = item.get("index");
        c.index = index && index->is_integer() ? static_cast<int>(index->as_integer()) : static_cast<int>(i + 1);
        if (const Value* d = item.get("description"); d && d->is_string()) c.description = d->as_string();
        c.method = require_string(item, "method", where);
        if (std::find(known_methods.begin(), known_methods.end(), c.method) == known_methods.end())
            throw Error(where + ": unsupported method '" + c.method + "'");
        c.endpoint = require_string(item, "endpoint", where);
        if (c.endpoint.front() != '/') throw Error(where + ": endpoint must start with '/'");
        c.expected_output = require_string(item, "expected_output", where);
        if (std::find(known_shapes.begin(), known_shapes.end(), c.expected_output) == known_shapes.end())
            throw Error(where + ": expected_output must be json-object, json-array or text");
        if (const Value* input = item.get("input")) {
            if (!input->is_object()) throw Error(where + ": 'input' must be an object");
            c.input = *input;
        } else {
            c.input = Object{};
        }
        if (const Value* st = item.get("expected_status")) {
            if (!st->is_integer()) throw Error(where + ": expected_status must be an integer");
            c.expected_status = static_cast<int>(st->as_integer());
        }
        if (const Value* b = item.get("expected_body")) c.expected_body = *b;
        for (const char* group : {"path", "query"})
            if (const Value* g = c.input.get(group); g && !g->is_object())
                throw Error(where + ": input." + group + " must be an object");
        request_target(c);  // reports unfilled placeholders now rather than mid-run
        out.push_back(std::move(c));
    }
    return out;
}

std::string request_target(const ScenarioCase& scenario) {
    std::string path;
    const Value* values = scenario.input.get("path");
    const std::string& e = scenario.endpoint;
    for (std::size_t i = 0; i < e.size();) {
        if (e[i] != '{') {
            path += e[i++];
            continue;
        }
        auto close = e.find('}', i);
        if (close == std::string::npos) throw Error("endpoint '" + e + "': unterminated placeholder");
        std::string name = e.substr(i + 1, close - i - 1);
        const Value* v = values ? values->get(name) : nullptr;
        if (!v || !(v->is_string() || v->is_number() || v->is_bool()))
            throw Error("endpoint '" + e + "': no scalar input.path value for '" + name + "'");
        path += percent_encode(text_of(*v));
        i = close + 1;
    }
    if (const Value* query = scenario.input.get("query")) {
        std::vector<std::pair<std::string, std::string>> params;
        for (const auto& [name, v] : query->as_object()) {
            if (v.is_array()) {
                for (const auto& item : v.as_array()) params.emplace_back(name, text_of(item));
            } else {
                params.emplace_back(name, text_of(v));
            }
        }
        path += emit::encode_query(params);
    }
    return path;
}

std::string byte_diff(std::string_view client, std::string_view oracle) {
    if (client == oracle) return "identical";
    std::size_t at = 0;
    while (at < client.size() && at < oracle.size() && client[at] == oracle[at]) ++at;
    std::string out = "differs at byte " + std::to_string(at) + " (client " + std::to_string(client.size()) +
                      " bytes, oracle " + std::to_string(oracle.size()) + " bytes): client " + excerpt(client, at) +
                      " vs oracle " + excerpt(oracle, at);
    return out;
}

bool Report::all_passed() const {
    return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.passed; });
}

std::size_t Report::passed_count() const {
    return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return c.passed; }));
}

std::string Report::format() const {
    std::string out;
    for (const auto& c : cases) {
        out += "case " + std::to_string(c.scenario.index) + " " + c.scenario.method + " " + c.scenario.endpoint;
        if (!c.scenario.description.empty()) out += " (" + c.scenario.description + ")";
        out += c.passed ? ": PASS\n" : ": FAIL\n";
        for (const auto& p : c.problems) out += "    " + p + "\n";
    }
    out += std::to_string(passed_count()) + "/" + std::to_string(cases.size()) + " cases passed\n";
    return out;
}

Report run_scenarios(const std::string& client_binary, MockServer& server, const std::vector<ScenarioCase>& cases,
                     std::chrono::milliseconds per_case_timeout) {
    Report report;
    for (const auto& scenario : cases) {
        CaseResult result;
        result.scenario = scenario;
        StoreState before = server.snapshot();

        ProcessResult run = run_process({client_binary, "--base-url", server.base_url(), "--case",
                                         std::to_string(scenario.index), "--method", scenario.method, "--endpoint",
                                         scenario.endpoint, "--input", to_json(scenario.input)},
                                        per_case_timeout);
        StoreState after_client = server.snapshot();
        server.restore(before);
        result.oracle = send_oracle(server, scenario);
        StoreState after_oracle = server.snapshot();

        if (scenario.expected_status) {
            if (result.oracle.status != *scenario.expected_status)
                result.problems.push_back("oracle answered " + std::to_string(result.oracle.status) + ", expected " +
                                          std::to_string(*scenario.expected_status));
        } else if (!(result.oracle.status >= 200 && result.oracle.status < 300)) {
            result.problems.push_back("oracle answered " + std::to_string(result.oracle.status) +
                                      ", expected a 2xx status: " + excerpt(result.oracle.body, 0));
        }
        if (scenario.expected_body && !matches_expected(*scenario.expected_body, result.oracle.body))
            result.problems.push_back("oracle body " + excerpt(result.oracle.body, 0) + " does not match expected " +
                                      excerpt(to_json(*scenario.expected_body), 0));

        ClientLine line = parse_client_output(run.out);
        if (!run.succeeded()) {
            std::string tail = run.err.size() > 400 ? run.err.substr(run.err.size() - 400) : run.err;
            result.problems.push_back("client " + run.describe() + (tail.empty() ? "" : ", stderr: " + printable(tail)));
        }
        if (!line.error.empty()) {
            result.problems.push_back("client output: " + line.error);
        } else {
            result.client = line.exchange;
            if (result.client.status != result.oracle.status)
                result.problems.push_back("status: client " + std::to_string(result.client.status) + " vs oracle " +
                                          std::to_string(result.oracle.status));
            if (result.client.body != result.oracle.body)
                result.problems.push_back("body " + byte_diff(result.client.body, result.oracle.body));
            if (!has_shape(result.client.body, scenario.expected_output))
                result.problems.push_back("body is not " + scenario.expected_output);
        }
        for (auto& d : state_differences(after_client, after_oracle)) result.problems.push_back(std::move(d));

        result.passed = result.problems.empty();
        report.cases.push_back(std::move(result));
    }
    return report;
}

}  // namespace tinygen::harness
