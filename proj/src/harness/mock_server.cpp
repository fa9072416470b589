// SPDX-License-Identifier: Apache-2.0
#include <charconv>
#include <optional>
#include <mutex>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "tinygen/error.hpp"
#include "tinygen/harness.hpp"

namespace tinygen::harness {

namespace {

using json = nlohmann::json;

constexpr const char* json_type = "application/json";
constexpr const char* text_type = "text/plain";

std::optional<std::int64_t> parse_id(const std::string& text) {
    std::int64_t id = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), id);
    if (ec != std::errc() || end != text.data() + text.size() || text.empty()) return std::nullopt;
    return id;
}

std::optional<json> parse_body(const std::string& body) {
    json doc = json::parse(body, nullptr, false);
    if (doc.is_discarded()) return std::nullopt;
    return doc;
}

void reply_text(httplib::Response& res, int status, const std::string& text) {
    res.status = status;
    res.set_content(text, text_type);
}

}  // namespace

struct MockServer::Impl {
    httplib::Server server;
    std::thread thread;
    int port = 0;
    bool running = false;

    mutable std::mutex mutex;  // guards everything below
    StoreState state;
    std::vector<RequestRecord> log;

    Impl() { install_routes(); }

    void record(const httplib::Request& req) {
        RequestRecord r;
        r.method = req.method;
        auto q = req.target.find('?');
        r.path = req.target.substr(0, q);
        if (q != std::string::npos) r.query = req.target.substr(q + 1);
        for (const char* name : {"Content-Type", "Content-Length"})
            if (req.has_header(name)) r.headers.emplace_back(name, req.get_header_value(name));
        r.body = req.body;
        r.ordinal = log.size();
        log.push_back(std::move(r));
    }

    void store_pet(const httplib::Request& req, httplib::Response& res) {
        std::lock_guard lock(mutex);
        record(req);
        auto doc = parse_body(req.body);
        if (!doc || !doc->is_object() || !doc->contains("id") || !(*doc)["id"].is_number_integer()) {
            reply_text(res, 400, "Invalid input");
            return;
        }
        std::string canonical = doc->dump();
        state.pets[(*doc)["id"].get<std::int64_t>()] = canonical;
        res.status = 200;
        res.set_content(canonical, json_type);
    }

    void install_routes() {
        // One worker keeps request handling in arrival order.
        server.new_task_queue = [] { return new httplib::ThreadPool(1); };

        server.Put("/pet", [this](const auto& req, auto& res) { store_pet(req, res); });
        server.Post("/pet", [this](const auto& req, auto& res) { store_pet(req, res); });

        server.Post("/user/createWithList", [this](const httplib::Request& req, httplib::Response& res) {
            std::lock_guard lock(mutex);
            record(req);
            auto doc = parse_body(req.body);
            if (!doc || !doc->is_array()) return reply_text(res, 400, "Invalid input");
            res.status = 200;
            res.set_content(doc->dump(), json_type);
        });

        server.Get("/pet/findByStatus", [this](const httplib::Request& req, httplib::Response& res) {
            std::lock_guard lock(mutex);
            record(req);
            std::string status = req.has_param("status") ? req.get_param_value("status") : "available";
            json matches = json::array();
            for (const auto& [id, text] : state.pets) {
                json pet = json::parse(text);
                if (pet.contains("status") && pet["status"] == status) matches.push_back(std::move(pet));
            }
            res.status = 200;
            res.set_content(matches.dump(), json_type);
        });

        server.Get(R"(/pet/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
            std::lock_guard lock(mutex);
            record(req);
            auto id = parse_id(req.matches[1]);
            if (!id) return reply_text(res, 400, "Invalid ID supplied");
            auto it = state.pets.find(*id);
            if (it == state.pets.end()) return reply_text(res, 404, "Pet not found");
            res.status = 200;
            res.set_content(it->second, json_type);
        });

        server.Delete(R"(/pet/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
            std::lock_guard lock(mutex);
            record(req);
            auto id = parse_id(req.matches[1]);
            if (!id) return reply_text(res, 400, "Invalid pet value");
            state.pets.erase(*id);
            reply_text(res, 200, "Pet deleted");
        });

        // Unmatched routes are still logged so a client hitting the wrong path shows up in reports.
        server.set_error_handler([this](const httplib::Request& req, httplib::Response& res) {
            if (res.status != 404 || !res.body.empty()) return;
            std::lock_guard lock(mutex);
            record(req);
            res.set_content("Not found", text_type);
        });
    }
};

MockServer::MockServer() : impl_(std::make_unique<Impl>()) {}

MockServer::~MockServer() { stop(); }

void MockServer::start(int port) {
    if (impl_->running) throw Error("mock server already running");
    if (port == 0) {
        impl_->port = impl_->server.bind_to_any_port("127.0.0.1");
        if (impl_->port < 0) throw Error("mock server: could not bind a free port on 127.0.0.1");
    } else {
        if (!impl_->server.bind_to_port("127.0.0.1", port))
            throw Error("mock server: could not bind 127.0.0.1:" + std::to_string(port));
        impl_->port = port;
    }
    impl_->running = true;
    impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
    impl_->server.wait_until_ready();
}

void MockServer::stop() {
    if (!impl_->running) return;
    impl_->server.stop();
    if (impl_->thread.joinable()) impl_->thread.join();
    impl_->running = false;
}

int MockServer::port() const { return impl_->port; }

std::string MockServer::base_url() const { return "http://127.0.0.1:" + std::to_string(impl_->port); }

std::vector<RequestRecord> MockServer::requests() const {
    std::lock_guard lock(impl_->mutex);
    return impl_->log;
}

StoreState MockServer::snapshot() const {
    std::lock_guard lock(impl_->mutex);
    return impl_->state;
}

void MockServer::restore(StoreState state) {
    std::lock_guard lock(impl_->mutex);
    impl_->state = std::move(state);
}

}  // namespace tinygen::harness
