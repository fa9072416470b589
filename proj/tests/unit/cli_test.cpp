// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include "test_support.hpp"
#include "tinygen/cli.hpp"
#include "tinygen/emit.hpp"
#include "tinygen/ingest.hpp"

namespace fs = std::filesystem;
namespace cli = tinygen::cli;
using tinygen::testing::data_path;
using tinygen::testing::read_file;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> tree(const fs::path& root) {
    std::vector<std::string> files;
    for (const auto& entry : fs::recursive_directory_iterator(root))
        if (entry.is_regular_file()) files.push_back(fs::relative(entry.path(), root).generic_string());
    std::sort(files.begin(), files.end());
    return files;
}

std::vector<std::string> golden_files() {
    std::vector<std::string> lines;
    std::istringstream in(read_file(data_path("petstore_esp32_files.txt")));
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) lines.push_back(line);
    return lines;
}

/// Names of the entries directly inside `dir`.
std::vector<std::string> entries(const fs::path& dir) {
    std::vector<std::string> names;
    for (const auto& e : fs::directory_iterator(dir)) names.push_back(e.path().filename().string());
    std::sort(names.begin(), names.end());
    return names;
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        ::unsetenv("TINYGEN_TARGET");
        dir_ = tinygen::testing::scratch_dir(std::string("cli/") +
                                             ::testing::UnitTest::GetInstance()->current_test_info()->name());
        spec_ = data_path("petstore-json.json").string();
        cert_ = data_path("certs/ca1.pem").string();
    }
    void TearDown() override { ::unsetenv("TINYGEN_TARGET"); }

    fs::path write(const std::string& name, const std::string& text) {
        fs::path p = dir_ / name;
        std::ofstream(p, std::ios::binary) << text;
        return p;
    }

    fs::path dir_;
    std::string spec_;
    std::string cert_;
};

}  // namespace

TEST_F(Cli, GeneratesGoldenTree) {
    fs::path out = dir_ / "client";
    auto r = run({"generate", "-i", spec_, "-o", out.string(), "--target", "esp32", "--cert", cert_});
    ASSERT_EQ(r.code, cli::exit_ok) << r.err;
    EXPECT_EQ(tree(out), golden_files());
    EXPECT_EQ(read_file(out / "root.cert"), read_file(cert_));
    EXPECT_NE(r.out.find("generated 42 files for esp32"), std::string::npos) << r.out;
    EXPECT_EQ(entries(dir_), (std::vector<std::string>{"client"}));
}

TEST_F(Cli, OutputMatchesLibraryAssembly) {
    fs::path out = dir_ / "client";
    ASSERT_EQ(run({"generate", "-i", spec_, "-o", out.string(), "--cert", cert_}).code, cli::exit_ok);
    auto spec = tinygen::ingest::load_spec(read_file(spec_));
    auto bundle = tinygen::targets::bundle_certificates({read_file(cert_)});
    auto project = tinygen::emit::assemble_project(spec, tinygen::targets::get_profile("esp32"), bundle);
    for (const auto& [path, content] : project.files) EXPECT_EQ(read_file(out / path), content) << path;
}

TEST_F(Cli, TargetComesFromEnvironmentUnlessFlagGiven) {
    ::setenv("TINYGEN_TARGET", "esp8266", 1);
    fs::path a = dir_ / "env";
    ASSERT_EQ(run({"generate", "-i", spec_, "-o", a.string(), "--server-url", "http://10.0.0.2/api"}).code, cli::exit_ok);
    EXPECT_NE(read_file(a / "platformio.ini").find("esp8266"), std::string::npos);

    fs::path b = dir_ / "flag";
    auto r = run({"generate", "-i", spec_, "-o", b.string(), "-t", "esp32", "--server-url", "http://10.0.0.2/api"});
    ASSERT_EQ(r.code, cli::exit_ok) << r.err;
    EXPECT_NE(read_file(b / "platformio.ini").find("esp32"), std::string::npos);
    EXPECT_EQ(read_file(b / "platformio.ini").find("esp8266"), std::string::npos);
}

TEST_F(Cli, DefaultTargetIsEsp32) {
    fs::path out = dir_ / "client";
    auto r = run({"generate", "-i", spec_, "-o", out.string()});
    ASSERT_EQ(r.code, cli::exit_ok) << r.err;
    EXPECT_NE(r.out.find("for esp32"), std::string::npos);
}

TEST_F(Cli, HttpsOnEsp8266IsRefused) {
    fs::path out = dir_ / "client";
    auto r = run({"generate", "-i", spec_, "-o", out.string(), "-t", "esp8266"});
    EXPECT_EQ(r.code, cli::exit_failure);
    EXPECT_NE(r.err.find("x509 fingerprint"), std::string::npos) << r.err;
    EXPECT_TRUE(std::regex_search(r.err, std::regex("^error: [^:]+petstore-json\\.json: ")) ) << r.err;
    EXPECT_TRUE(entries(dir_).empty());
}

TEST_F(Cli, RefusesNonEmptyOutputWithoutForce) {
    fs::path out = dir_ / "client";
    fs::create_directories(out);
    write("client/keep.txt", "mine");
    auto r = run({"generate", "-i", spec_, "-o", out.string()});
    EXPECT_EQ(r.code, cli::exit_failure);
    EXPECT_NE(r.err.find("--force"), std::string::npos) << r.err;
    EXPECT_EQ(tree(out), (std::vector<std::string>{"keep.txt"}));

    r = run({"generate", "-i", spec_, "-o", out.string(), "--force", "--cert", cert_});
    ASSERT_EQ(r.code, cli::exit_ok) << r.err;
    EXPECT_EQ(tree(out), golden_files());
    EXPECT_EQ(entries(dir_), (std::vector<std::string>{"client"}));
}

TEST_F(Cli, FailuresLeaveNoPartialOutput) {
    fs::path out = dir_ / "client";
    fs::path bad_cert = write("bad.pem", "not a certificate\n");
    auto r = run({"generate", "-i", spec_, "-o", out.string(), "--cert", bad_cert.string()});
    EXPECT_EQ(r.code, cli::exit_failure);
    EXPECT_NE(r.err.find("error: " + bad_cert.string() + ": "), std::string::npos) << r.err;

    r = run({"generate", "-i", (dir_ / "missing.yaml").string(), "-o", out.string()});
    EXPECT_EQ(r.code, cli::exit_failure);
    EXPECT_NE(r.err.find("cannot read file"), std::string::npos) << r.err;

    fs::path broken = write("broken.yaml", "openapi: 3.0.0\npaths: [\n");
    r = run({"generate", "-i", broken.string(), "-o", out.string()});
    EXPECT_EQ(r.code, cli::exit_failure);
    EXPECT_EQ(entries(dir_), (std::vector<std::string>{"bad.pem", "broken.yaml"}));
}

TEST_F(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(run({}).code, cli::exit_usage);
    EXPECT_EQ(run({"generate", "-i", spec_}).code, cli::exit_usage);
    EXPECT_EQ(run({"generate", "-i", spec_, "-o", "x", "--bogus"}).code, cli::exit_usage);
    EXPECT_EQ(run({"frobnicate"}).code, cli::exit_usage);

    auto r = run({"generate", "-i", spec_, "-o", (dir_ / "x").string(), "-t", "avr"});
    EXPECT_EQ(r.code, cli::exit_usage);
    EXPECT_NE(r.err.find("unknown target 'avr'; valid targets: esp32, esp8266"), std::string::npos) << r.err;

    r = run({"generate", "-i", spec_, "-o", (dir_ / "x").string(), "-t", "native-host"});
    EXPECT_EQ(r.code, cli::exit_usage);
    EXPECT_NE(r.err.find("--allow-native"), std::string::npos) << r.err;
    EXPECT_TRUE(entries(dir_).empty());

    EXPECT_EQ(run({"--help"}).code, cli::exit_ok);
}

TEST_F(Cli, NativeTargetNeedsOptIn) {
    fs::path out = dir_ / "native";
    auto r = run({"generate", "-i", spec_, "-o", out.string(), "-t", "native-host", "--allow-native", "--server-url",
                  "http://127.0.0.1:8080/api/v3"});
    ASSERT_EQ(r.code, cli::exit_ok) << r.err;
    EXPECT_FALSE(fs::exists(out / "pre_compiling_bourne.py"));
}

TEST_F(Cli, ListsTargets) {
    auto r = run({"list-targets"});
    EXPECT_EQ(r.code, cli::exit_ok);
    EXPECT_EQ(r.out, "esp32\nesp8266\n");
    EXPECT_EQ(run({"list-targets", "--allow-native"}).out, "esp32\nesp8266\nnative-host\n");
}

TEST_F(Cli, ChecksDocuments) {
    auto r = run({"check", "-i", spec_});
    EXPECT_EQ(r.code, cli::exit_ok) << r.err;
    EXPECT_EQ(r.out, spec_ + ": 17 operations, 8 models, ok\n");

    std::string full = data_path("petstore.yaml").string();
    r = run({"check", "-i", full});
    EXPECT_EQ(r.code, cli::exit_failure);
    EXPECT_NE(r.err.find("header parameters unsupported"), std::string::npos) << r.err;

    r = run({"check", "-i", full, "--allow-skip"});
    EXPECT_EQ(r.code, cli::exit_ok) << r.err;
    EXPECT_NE(r.out.find("16 operations"), std::string::npos) << r.out;
    EXPECT_TRUE(std::regex_search(r.err, std::regex("^warning: ", std::regex::multiline))) << r.err;
}

TEST_F(Cli, RejectsUnusableServerUrls) {
    auto r = run({"check", "-i", spec_, "--server-url", "/api/v3"});
    EXPECT_EQ(r.code, cli::exit_failure);
    EXPECT_NE(r.err.find("--server-url"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("absolute"), std::string::npos) << r.err;

    fs::path templated = write("templated.yaml", "openapi: 3.0.3\ninfo: {title: T, version: '1'}\n"
                                                 "servers: [{url: 'http://{host}/v1'}]\npaths:\n  /x:\n    get:\n"
                                                 "      responses: {'200': {description: ok}}\n");
    r = run({"check", "-i", templated.string()});
    EXPECT_EQ(r.code, cli::exit_failure);
    EXPECT_NE(r.err.find("#/servers/0"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("variables"), std::string::npos) << r.err;
    EXPECT_EQ(run({"check", "-i", templated.string(), "--server-url", "http://h/v1"}).code, cli::exit_ok);
}

TEST_F(Cli, ReportsSizes) {
    fs::path out = dir_ / "client";
    auto r = run({"generate", "-i", spec_, "-o", out.string(), "--cert", cert_, "--report-sizes"});
    ASSERT_EQ(r.code, cli::exit_ok) << r.err;
    EXPECT_NE(r.out.find("directory"), std::string::npos);
    EXPECT_TRUE(std::regex_search(r.out, std::regex("\ntotal +42 +\\d+\n"))) << r.out;
}

TEST(ReportSizes, EmptyProjectHasZeroTotal) {
    tinygen::emit::GeneratedProject empty;
    std::string table = cli::report_sizes(empty);
    EXPECT_TRUE(std::regex_search(table, std::regex("^directory +files +bytes\ntotal +0 +0\n$"))) << table;
}

TEST(ReportSizes, RowsSumToTotalAndAreStable) {
    auto spec = tinygen::ingest::load_spec(read_file(data_path("petstore-json.json")));
    auto bundle = tinygen::targets::bundle_certificates({read_file(data_path("certs/ca1.pem"))});
    auto project = tinygen::emit::assemble_project(spec, tinygen::targets::get_profile("esp32"), bundle);
    std::string table = cli::report_sizes(project);
    EXPECT_EQ(table, cli::report_sizes(project));

    std::map<std::string, std::pair<std::size_t, std::size_t>> want;
    std::size_t total_bytes = 0;
    for (const auto& [path, content] : project.files) {
        auto slash = path.rfind('/');
        auto& row = want[slash == std::string::npos ? "." : path.substr(0, slash)];
        ++row.first;
        row.second += content.size();
        total_bytes += content.size();
    }
    std::istringstream lines(table);
    std::string header;
    std::getline(lines, header);
    std::map<std::string, std::pair<std::size_t, std::size_t>> got;
    std::size_t sum_files = 0, sum_bytes = 0, total_files_row = 0, total_bytes_row = 0;
    for (std::string dir; lines >> dir;) {
        std::size_t files = 0, bytes = 0;
        lines >> files >> bytes;
        if (dir == "total") {
            total_files_row = files;
            total_bytes_row = bytes;
            continue;
        }
        got[dir] = {files, bytes};
        sum_files += files;
        sum_bytes += bytes;
    }
    EXPECT_EQ(got, want);
    EXPECT_TRUE(got.count("lib/models"));
    EXPECT_TRUE(got.count("lib/services"));
    EXPECT_EQ(total_files_row, project.files.size());
    EXPECT_EQ(total_bytes_row, total_bytes);
    EXPECT_EQ(sum_files, total_files_row);
    EXPECT_EQ(sum_bytes, total_bytes_row);
}
