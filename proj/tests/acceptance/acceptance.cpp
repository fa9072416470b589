// SPDX-License-Identifier: Apache-2.0
// End-to-end acceptance checks. Prints one PASS or FAIL line per criterion and exits non-zero
// when any of them fails.
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>

#include "test_support.hpp"
#include "tinygen/cli.hpp"
#include "tinygen/emit.hpp"
#include "tinygen/error.hpp"
#include "tinygen/ingest.hpp"
#include "tinygen/naming.hpp"
#include "tinygen/targets.hpp"
#include "tinygen/template.hpp"

namespace fs = std::filesystem;
namespace emit = tinygen::emit;
namespace targets = tinygen::targets;
namespace tmpl = tinygen::tmpl;
using tinygen::ApiSpec;
using tinygen::testing::data_path;
using tinygen::testing::read_file;

namespace {

/// Collects the reasons a criterion failed.
struct Check {
    std::vector<std::string> problems;

    void expect(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }
};

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) out.push_back(line);
    return out;
}

std::map<std::string, std::string> read_tree(const fs::path& root) {
    std::map<std::string, std::string> files;
    for (const auto& entry : fs::recursive_directory_iterator(root))
        if (entry.is_regular_file()) files[fs::relative(entry.path(), root).generic_string()] = read_file(entry.path());
    return files;
}

ApiSpec petstore() { return tinygen::ingest::load_spec(read_file(data_path("petstore-json.json"))); }

targets::CertBundle certs(int n) {
    std::vector<std::string> pems;
    for (int i = 1; i <= n; ++i) pems.push_back(read_file(data_path("certs/ca" + std::to_string(i) + ".pem")));
    return targets::bundle_certificates(pems);
}

void golden_tree(Check& check) {
    fs::path dir = tinygen::testing::scratch_dir("acceptance/golden");
    std::vector<std::map<std::string, std::string>> runs;
    for (int i = 0; i < 2; ++i) {
        tinygen::cli::GenerateOptions options;
        options.input_path = data_path("petstore-json.json").string();
        options.output_dir = (dir / ("run" + std::to_string(i))).string();
        options.target_id = "esp32";
        options.cert_paths = {data_path("certs/ca1.pem").string()};
        std::ostringstream out, err;
        auto start = std::chrono::steady_clock::now();
        int code = tinygen::cli::generate(options, out, err);
        auto elapsed = std::chrono::steady_clock::now() - start;
        check.expect(code == tinygen::cli::exit_ok, "generate exited " + std::to_string(code) + ": " + err.str());
        check.expect(elapsed < std::chrono::seconds(5), "generation took longer than 5 s");
        if (code != tinygen::cli::exit_ok) return;
        runs.push_back(read_tree(options.output_dir));
    }
    std::vector<std::string> paths;
    for (const auto& [path, _] : runs[0]) paths.push_back(path);
    check.expect(paths == lines_of(read_file(data_path("petstore_esp32_files.txt"))), "file set differs from the golden list");
    check.expect(runs[0] == runs[1], "two runs produced different bytes");

    const std::set<std::string> top = {"lib", "src", "test", "platformio.ini", "README.md", "root.cert",
                                       "pre_compiling_bourne.py"};
    const std::set<std::string> lib = {"lib/models", "lib/services", "lib/TestFiles"};
    std::set<std::string> seen_top, seen_lib;
    for (const auto& path : paths) {
        seen_top.insert(path.substr(0, path.find('/')));
        if (path.rfind("lib/", 0) == 0) seen_lib.insert(path.substr(0, path.rfind('/')));
    }
    check.expect(seen_top == top, "top-level entries differ from the expected layout");
    check.expect(seen_lib == lib, "lib/ folders differ from models, services, TestFiles");
    check.expect(runs[0].count("src/main.cpp") && runs[0].count("test/RunTests.cpp"), "main or test runner missing");
}

void esp32_ini(Check& check) {
    const std::string expected =
        "[env:esp32]\n"
        "platform = espressif32\n"
        "board = nodemcu-32s\n"
        "framework = arduino\n"
        "lib_deps =\n"
        "    github.com/steinwurf/bourne.git\n"
        "extra_scripts = \n"
        "    pre_compiling_bourne.py\n";
    check.expect(targets::emit_platformio_ini(targets::get_profile("esp32")) == expected, "emitted ini differs");
    auto project = emit::assemble_project(petstore(), targets::get_profile("esp32"), certs(1));
    check.expect(project.files.at("platformio.ini") == expected, "project platformio.ini differs");
}

void service_coverage(Check& check) {
    ApiSpec spec = petstore();
    auto project = emit::assemble_project(spec, targets::get_profile("esp32"), certs(1));

    std::vector<std::string> classes;
    for (const auto& tag : emit::service_tags(spec)) classes.push_back(tinygen::naming::service_class(spec, tag));
    std::sort(classes.begin(), classes.end());
    check.expect(classes == std::vector<std::string>{"OrderService", "PetService", "UserService"},
                 "service classes are not OrderService, PetService, UserService");

    static const std::regex declaration(R"(\n    Response<.*> (\w+)\()");
    std::size_t declared = 0;
    for (const auto& cls : classes) {
        const std::string& header = project.files.at("lib/services/" + cls + ".h");
        for (std::sregex_iterator it(header.begin(), header.end(), declaration), end; it != end; ++it) ++declared;
    }
    check.expect(declared == spec.operations.size(),
                 std::to_string(declared) + " methods for " + std::to_string(spec.operations.size()) + " operations");
    for (const auto& op : spec.operations) {
        const std::string& header = project.files.at("lib/services/" + tinygen::naming::service_class(spec, op.tag) + ".h");
        check.expect(header.find(" " + tinygen::naming::method_name(op) + "(") != std::string::npos,
                     "no method for " + op.location);
    }

    struct Endpoint {
        tinygen::HttpMethod method;
        const char* path;
        bool body;
        const char* path_param;
        const char* cls;
        const char* signature;
    };
    using M = tinygen::HttpMethod;
    const Endpoint endpoints[] = {
        {M::put, "/pet", true, nullptr, "PetService", "Response<Pet> updatePet(const Pet &pet);"},
        {M::post, "/pet", true, nullptr, "PetService", "Response<Pet> addPet(const Pet &pet);"},
        {M::post, "/user/createWithList", true, nullptr, "UserService",
         "Response<std::list<User>> createUsersWithListInput(const std::list<User> &body);"},
        {M::del, "/pet/{petId}", false, "petId", "PetService", "Response<std::string> deletePet(long long petId);"},
        {M::get, "/pet/{petId}", false, "petId", "PetService", "Response<Pet> getPetById(long long petId);"},
    };
    for (const auto& e : endpoints) {
        auto op = std::find_if(spec.operations.begin(), spec.operations.end(),
                               [&](const auto& o) { return o.method == e.method && o.path == e.path; });
        if (op == spec.operations.end()) {
            check.expect(false, std::string("operation missing: ") + e.path);
            continue;
        }
        check.expect(op->request_body.has_value() == e.body, op->location + ": request body presence");
        std::vector<std::string> path_params;
        for (const auto& p : op->parameters)
            if (p.location == tinygen::ParamLocation::path) path_params.push_back(p.name);
        check.expect(path_params == (e.path_param ? std::vector<std::string>{e.path_param} : std::vector<std::string>{}),
                     op->location + ": path parameters");
        check.expect(project.files.at(std::string("lib/services/") + e.cls + ".h").find(e.signature) != std::string::npos,
                     std::string("missing declaration ") + e.signature);
    }
}

void template_oracle(Check& check) {
    tinygen::Value corpus = tinygen::testing::json(read_file(data_path("mustache_corpus.json")));
    tmpl::Partials partials;
    for (const auto& [name, text] : corpus.get("partials")->as_object())
        partials.emplace(name, tmpl::parse_template(text.as_string()));
    const auto& cases = corpus.get("cases")->as_array();
    check.expect(cases.size() >= 50, "fewer than 50 reference templates");
    std::size_t mismatches = 0;
    for (const auto& c : cases) {
        std::string got = tmpl::render(tmpl::parse_template(c.get("template")->as_string()), *c.get("data"), partials);
        if (got != c.get("expected")->as_string()) ++mismatches;
    }
    check.expect(mismatches == 0, std::to_string(mismatches) + " templates render differently from the reference");

    const std::string t = "The city {{city}} has\n{{#museum}}the {{name}} Museum, {{/museum}}\n"
                          "{{#x-hot}}And it's hot in the Summer!{{/x-hot}}";
    const std::string hot_line = "And it's hot in the Summer!";
    tinygen::Value data = tinygen::testing::json(
        R"({"city": "Madrid", "museum": [{"name": "el Prado"}, {"name": "Cerralbo"}, {"name": "Sorolla"}], "x-hot": true})");
    std::string hot = tmpl::render_text(t, data);
    check.expect(hot == "The city Madrid has\nthe el Prado Museum, the Cerralbo Museum, the Sorolla Museum, \n" + hot_line,
                 "worked example rendered as: " + hot);
    data.as_object().set("x-hot", false);
    check.expect(tmpl::render_text(t, data).find(hot_line) == std::string::npos, "hot line rendered for x-hot false");
    data.as_object().erase("x-hot");
    check.expect(tmpl::render_text(t, data).find(hot_line) == std::string::npos, "hot line rendered without x-hot");
}

void target_divergence(Check& check) {
    ApiSpec https = petstore();
    ApiSpec http = https;
    http.server_urls = {"http://192.168.1.10/api/v3"};
    auto esp32 = emit::assemble_project(https, targets::get_profile("esp32"), certs(1));
    auto esp8266 = emit::assemble_project(http, targets::get_profile("esp8266"), {});
    const std::string& a = esp32.files.at("lib/services/AbstractService.h");
    const std::string& b = esp8266.files.at("lib/services/AbstractService.h");
    check.expect(a.find("http.begin(url, root_ca);") != std::string::npos, "esp32 lacks http.begin(url, root_ca);");
    check.expect(a.find("WiFiClient") == std::string::npos, "esp32 declares a client object");
    check.expect(a.find("http.begin(client, url);") == std::string::npos, "esp32 uses the client overload");
    check.expect(b.find("http.begin(client, url);") != std::string::npos, "esp8266 lacks http.begin(client, url);");
    check.expect(b.find("root_ca") == std::string::npos, "esp8266 has a certificate constant");
    check.expect(!esp8266.files.count("root.cert"), "esp8266 project bundles a certificate");

    try {
        emit::assemble_project(https, targets::get_profile("esp8266"), {});
        check.expect(false, "https document generated for esp8266");
    } catch (const tinygen::Error& e) {
        check.expect(std::string(e.what()).find("x509 fingerprint") != std::string::npos,
                     std::string("unexpected message: ") + e.what());
    }
}

void certificate_naming(Check& check) {
    ApiSpec spec = petstore();
    for (int n : {1, 2, 5}) {
        auto bundle = certs(n);
        auto project = emit::assemble_project(spec, targets::get_profile("esp32"), bundle);
        std::vector<std::string> expected;
        if (n == 1) {
            expected = {"root.cert"};
        } else {
            for (int i = 1; i <= n; ++i) expected.push_back("root" + std::to_string(i) + ".cert");
        }
        std::vector<std::string> got;
        for (const auto& [path, _] : project.files)
            if (path.size() > 5 && path.compare(path.size() - 5, 5, ".cert") == 0) got.push_back(path);
        std::sort(expected.begin(), expected.end());
        check.expect(got == expected, std::to_string(n) + " certificates: unexpected file names");
        for (int i = 1; i <= n; ++i) {
            const std::string& name = n == 1 ? expected[0] : "root" + std::to_string(i) + ".cert";
            auto file = project.files.find(name);
            check.expect(file != project.files.end() &&
                             file->second == read_file(data_path("certs/ca" + std::to_string(i) + ".pem")),
                         name + " does not hold certificate " + std::to_string(i));
        }
        const std::string& abstract = project.files.at("lib/services/AbstractService.h");
        for (int i = 2; i <= n; ++i)
            check.expect(abstract.find("root_ca_" + std::to_string(i)) != std::string::npos,
                         "constant root_ca_" + std::to_string(i) + " missing");
        check.expect(abstract.find("root_ca_" + std::to_string(n + 1)) == std::string::npos,
                     "extra certificate constant for " + std::to_string(n) + " certificates");
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
        {"golden file tree, byte-identical across runs, under 5 s", golden_tree},
        {"esp32 platformio.ini exact match", esp32_ini},
        {"service classes and one method per operation", service_coverage},
        {"template engine matches the reference renderer", template_oracle},
        {"esp32 and esp8266 network code diverge; https on esp8266 refused", target_divergence},
        {"certificate file naming for 1, 2 and 5 certificates", certificate_naming},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Check check;
        try {
            run(check);
        } catch (const std::exception& e) {
            check.problems.push_back(std::string("exception: ") + e.what());
        }
        std::cout << (check.problems.empty() ? "PASS " : "FAIL ") << name << "\n";
        for (const auto& p : check.problems) std::cout << "    " << p << "\n";
        failed += check.problems.empty() ? 0 : 1;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " acceptance criteria passed\n";
    return failed == 0 ? 0 : 1;
}
