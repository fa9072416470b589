// SPDX-License-Identifier: Apache-2.0
#include "tinygen/cli.hpp"

#include <signal.h>
#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "tinygen/error.hpp"
#include "tinygen/harness.hpp"
#include "tinygen/ingest.hpp"
#include "tinygen/targets.hpp"

namespace fs = std::filesystem;

namespace tinygen::cli {

namespace {

using ingest::Diagnostic;
using ingest::Severity;

/// Reported problem that ends the command with exit code 1.
struct Failure {
    std::string location;
    std::string message;
};

[[noreturn]] void fail(std::string location, std::string message) {
    throw Failure{std::move(location), std::move(message)};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(path, "cannot read file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) fail(path, "cannot read file");
    return buffer.str();
}

void print(std::ostream& err, const std::vector<Diagnostic>& diagnostics) {
    for (const auto& d : diagnostics) err << ingest::format(d) << "\n";
}

/// Problem with the server URL the client would be generated for, empty when it is usable.
std::string server_url_problem(const std::string& url) {
    if (url.find('{') != std::string::npos)
        return "server URL '" + url + "' has variables; pass a concrete URL with --server-url";
    if (url.rfind("http://", 0) != 0 && url.rfind("https://", 0) != 0)
        return "server URL '" + url + "' is not an absolute http:// or https:// URL; pass one with --server-url";
    return {};
}

/// Reads, resolves and validates a document. Diagnostics go to `err`; any error-severity
/// diagnostic that survives the skip policy ends the command.
ApiSpec prepare_spec(const std::string& path, const std::optional<std::string>& server_url, bool allow_skip,
                     std::ostream& err) {
    std::string text = read_file(path);
    ApiSpec unresolved;
    ApiSpec spec;
    try {
        unresolved = ingest::build_spec(ingest::parse_document(text, ingest::format_from_path(path)));
        if (server_url) unresolved.server_urls = {*server_url};
        spec = ingest::resolve_references(unresolved);
    } catch (const SpecError& e) {
        fail(e.location(), e.what() + e.location().size() + 2);
    } catch (const Error& e) {
        fail(path, e.what());
    }

    std::vector<Diagnostic> diagnostics = ingest::validate(spec);
    if (!spec.server_urls.empty()) {
        std::string problem = server_url_problem(spec.server_urls.front());
        if (!problem.empty())
            diagnostics.push_back({Severity::error, server_url ? "--server-url" : "#/servers/0", problem, {}, {}, {}});
    }

    if (allow_skip && ingest::has_errors(diagnostics)) {
        ingest::SkipResult skipped = ingest::apply_skip_policy(unresolved, diagnostics);
        std::vector<Diagnostic> report = skipped.skipped;
        for (const auto& d : diagnostics)
            if (d.severity == Severity::warning) report.push_back(d);
        report.insert(report.end(), skipped.remaining.begin(), skipped.remaining.end());
        diagnostics = std::move(report);
        spec = ingest::resolve_references(skipped.spec);
    }
    print(err, diagnostics);
    if (ingest::has_errors(diagnostics)) throw Failure{};
    return spec;
}

void write_tree(const fs::path& root, const emit::GeneratedProject& project) {
    for (const auto& [relative, content] : project.files) {
        fs::path file = root / relative;
        fs::create_directories(file.parent_path());
        std::ofstream stream(file, std::ios::binary | std::ios::trunc);
        stream.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!stream) fail(file.string(), "cannot write file");
    }
}

/// Moves the staged tree into place. An existing output directory is set aside first and put
/// back if the final rename fails.
void publish(const fs::path& staging, const fs::path& target) {
    fs::path backup;
    if (fs::exists(target)) {
        backup = target.parent_path() / ("." + target.filename().string() + ".old-" + std::to_string(::getpid()));
        fs::rename(target, backup);
    }
    std::error_code ec;
    fs::rename(staging, target, ec);
    if (ec) {
        if (!backup.empty()) fs::rename(backup, target);
        fail(target.string(), "cannot move generated project into place: " + ec.message());
    }
    if (!backup.empty()) fs::remove_all(backup);
}

int generate_checked(const GenerateOptions& options, std::ostream& out, std::ostream& err) {
    if (options.output_dir.empty()) fail("-o", "output directory must not be empty");
    const targets::TargetProfile& profile = targets::get_profile(options.target_id);

    ApiSpec spec = prepare_spec(options.input_path, options.server_url_override, options.allow_skip, err);

    std::vector<std::string> pems;
    for (const auto& path : options.cert_paths) pems.push_back(read_file(path));
    targets::CertBundle bundle;
    try {
        bundle = targets::bundle_certificates(pems);
    } catch (const CertificateError& e) {
        fail(options.cert_paths.at(e.index()), e.what());
    }

    emit::GeneratedProject project;
    try {
        project = emit::assemble_project(spec, profile, bundle);
    } catch (const Error& e) {
        fail(options.input_path, e.what());
    }

    fs::path target = fs::absolute(options.output_dir).lexically_normal();
    if (target.filename().empty()) target = target.parent_path();
    if (fs::exists(target)) {
        if (!fs::is_directory(target)) fail(target.string(), "output path exists and is not a directory");
        if (!fs::is_empty(target) && !options.force)
            fail(target.string(), "output directory is not empty (pass --force to replace it)");
    }
    fs::create_directories(target.parent_path());
    fs::path staging = target.parent_path() / ("." + target.filename().string() + ".staging-" + std::to_string(::getpid()));
    fs::remove_all(staging);
    try {
        write_tree(staging, project);
        publish(staging, target);
    } catch (...) {
        std::error_code ignored;
        fs::remove_all(staging, ignored);
        throw;
    }

    out << "generated " << project.files.size() << " files for " << profile.id << " in " << target.string() << "\n";
    if (options.report_sizes) out << report_sizes(project);
    return exit_ok;
}

/// Maps the exceptions a command can raise to diagnostics and an exit code.
template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const Failure& f) {
        if (!f.message.empty()) err << "error: " << f.location << ": " << f.message << "\n";
        return exit_failure;
    } catch (const fs::filesystem_error& e) {
        err << "error: " << e.path1().string() << ": " << e.code().message() << "\n";
        return exit_failure;
    } catch (const Error& e) {
        err << "error: tinygen: " << e.what() << "\n";
        return exit_failure;
    }
}

int serve_mock(int port, std::ostream& out) {
    // Block the stop signals before the server thread starts so only sigwait sees them.
    sigset_t stop_signals;
    sigemptyset(&stop_signals);
    sigaddset(&stop_signals, SIGINT);
    sigaddset(&stop_signals, SIGTERM);
    pthread_sigmask(SIG_BLOCK, &stop_signals, nullptr);

    harness::MockServer server;
    server.start(port);
    out << "mock Petstore listening on " << server.base_url() << std::endl;
    int received = 0;
    sigwait(&stop_signals, &received);
    server.stop();
    pthread_sigmask(SIG_UNBLOCK, &stop_signals, nullptr);
    out << "stopped after " << server.requests().size() << " requests\n";
    return exit_ok;
}

int run_conformance(const std::string& client, const std::string& scenario_path, std::ostream& out) {
    std::vector<harness::ScenarioCase> cases = harness::load_scenarios(read_file(scenario_path));
    harness::MockServer server;
    server.start(0);
    harness::Report report = harness::run_scenarios(client, server, cases);
    server.stop();
    out << report.format();
    return report.all_passed() ? exit_ok : exit_failure;
}

}  // namespace

std::string report_sizes(const emit::GeneratedProject& project) {
    std::map<std::string, std::pair<std::size_t, std::size_t>> rows;  // directory -> files, bytes
    std::size_t total_files = 0, total_bytes = 0;
    for (const auto& [path, content] : project.files) {
        auto slash = path.rfind('/');
        auto& row = rows[slash == std::string::npos ? "." : path.substr(0, slash)];
        ++row.first;
        row.second += content.size();
        ++total_files;
        total_bytes += content.size();
    }
    std::size_t width = 9;
    for (const auto& [dir, _] : rows) width = std::max(width, dir.size());

    std::ostringstream table;
    auto line = [&](const std::string& dir, std::size_t files, std::size_t bytes) {
        table << std::left << std::setw(static_cast<int>(width)) << dir << std::right << std::setw(8) << files
              << std::setw(10) << bytes << "\n";
    };
    table << std::left << std::setw(static_cast<int>(width)) << "directory" << std::right << std::setw(8) << "files"
          << std::setw(10) << "bytes" << "\n";
    for (const auto& [dir, row] : rows) line(dir, row.first, row.second);
    line("total", total_files, total_bytes);
    return table.str();
}

int generate(const GenerateOptions& options, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] { return generate_checked(options, out, err); });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"tinygen: OpenAPI client generator for microcontrollers", "tinygen"};
    app.require_subcommand(1);

    GenerateOptions gen;
    std::string server_url;
    if (const char* env = std::getenv("TINYGEN_TARGET"); env && *env) gen.target_id = env;

    auto* generate_cmd = app.add_subcommand("generate", "Generate a client project");
    generate_cmd->add_option("-i,--input", gen.input_path, "OpenAPI 3.0 document (YAML or JSON)")->required();
    generate_cmd->add_option("-o,--output", gen.output_dir, "Directory to write the project to")->required();
    generate_cmd->add_option("-t,--target", gen.target_id, "Target profile (default esp32, or $TINYGEN_TARGET)");
    generate_cmd->add_option("--cert", gen.cert_paths, "PEM root certificate to bundle (repeatable)");
    auto* gen_url = generate_cmd->add_option("--server-url", server_url, "Server URL overriding the document's servers");
    generate_cmd->add_flag("--allow-skip", gen.allow_skip, "Skip unsupported operations and fields with a warning");
    generate_cmd->add_flag("--allow-native", gen.allow_native, "Allow the native-host target");
    generate_cmd->add_flag("--force", gen.force, "Replace a non-empty output directory");
    generate_cmd->add_flag("--report-sizes", gen.report_sizes, "Print files and bytes per directory");

    std::string check_input, check_url;
    bool check_skip = false;
    auto* check_cmd = app.add_subcommand("check", "Validate a document without generating");
    check_cmd->add_option("-i,--input", check_input, "OpenAPI 3.0 document (YAML or JSON)")->required();
    auto* check_url_opt = check_cmd->add_option("--server-url", check_url, "Server URL overriding the document's servers");
    check_cmd->add_flag("--allow-skip", check_skip, "Report what generate --allow-skip would drop");

    bool list_native = false;
    auto* list_cmd = app.add_subcommand("list-targets", "Print the target profile ids");
    list_cmd->add_flag("--allow-native", list_native, "Include the native-host target");

    int port = 8080;
    auto* mock_cmd = app.add_subcommand("mock-server", "Serve the mock Petstore until interrupted");
    mock_cmd->add_option("-p,--port", port, "Port on 127.0.0.1 (0 picks a free one)")->check(CLI::Range(0, 65535));

    std::string client, scenarios;
    auto* conf_cmd = app.add_subcommand("conformance", "Run a generated client against the mock Petstore");
    conf_cmd->add_option("--client", client, "Conformance client executable")->required();
    conf_cmd->add_option("--scenarios", scenarios, "Scenario definition file (JSON)")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: usage: " << e.what() << "\n";
        err << "run 'tinygen --help' for usage\n";
        return exit_usage;
    }

    if (generate_cmd->parsed()) {
        if (*gen_url) gen.server_url_override = server_url;
        auto ids = targets::target_ids(true);
        if (std::find(ids.begin(), ids.end(), gen.target_id) == ids.end()) {
            err << "error: usage: unknown target '" << gen.target_id << "'; valid targets: ";
            auto visible = targets::target_ids(gen.allow_native);
            for (std::size_t i = 0; i < visible.size(); ++i) err << (i ? ", " : "") << visible[i];
            err << "\n";
            return exit_usage;
        }
        if (targets::get_profile(gen.target_id).native && !gen.allow_native) {
            err << "error: usage: target '" << gen.target_id << "' is for host testing; pass --allow-native to use it\n";
            return exit_usage;
        }
        return generate(gen, out, err);
    }
    if (check_cmd->parsed()) {
        return guarded(err, [&] {
            std::optional<std::string> override_url;
            if (*check_url_opt) override_url = check_url;
            ApiSpec spec = prepare_spec(check_input, override_url, check_skip, err);
            out << check_input << ": " << spec.operations.size() << " operations, " << emit::model_names(spec).size()
                << " models, ok\n";
            return exit_ok;
        });
    }
    if (list_cmd->parsed()) {
        for (const auto& id : targets::target_ids(list_native)) out << id << "\n";
        return exit_ok;
    }
    if (mock_cmd->parsed()) return guarded(err, [&] { return serve_mock(port, out); });
    return guarded(err, [&] { return run_conformance(client, scenarios, out); });
}

}  // namespace tinygen::cli
