// SPDX-License-Identifier: Apache-2.0
#include <cctype>

#include "tinygen/error.hpp"
#include "tinygen/targets.hpp"

namespace tinygen::targets {

namespace {

constexpr std::string_view kBegin = "-----BEGIN CERTIFICATE-----";
constexpr std::string_view kEnd = "-----END CERTIFICATE-----";

bool is_base64_char(unsigned char c) {
    return std::isalnum(c) || c == '+' || c == '/';
}

/// Checks the text between the markers is a plausible base64 payload.
std::string base64_problem(std::string_view body) {
    std::size_t count = 0;
    std::size_t padding = 0;
    for (unsigned char c : body) {
        if (std::isspace(c)) continue;
        if (c == '=') {
            ++padding;
        } else if (!is_base64_char(c) || padding > 0) {
            return "invalid base64 character in certificate body";
        }
        ++count;
    }
    if (count == 0) return "empty certificate body";
    if (padding > 2 || count % 4 != 0) return "truncated base64 certificate body";
    return {};
}

/// Span from the first BEGIN marker to the end of the last END marker.
std::string_view pem_span(std::string_view text) {
    std::size_t first = text.find(kBegin);
    std::size_t last = text.rfind(kEnd);
    return text.substr(first, last + kEnd.size() - first);
}

std::string quote_line(std::string_view line) {
    std::string out = "\"";
    for (char c : line) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += "\\n\"";
    return out;
}

}  // namespace

CertBundle bundle_certificates(const std::vector<std::string>& pem_files) {
    CertBundle bundle;
    for (std::size_t i = 0; i < pem_files.size(); ++i) {
        std::string_view text = pem_files[i];
        std::size_t pos = text.find(kBegin);
        if (pos == std::string_view::npos)
            throw CertificateError(i, "not a PEM certificate (no '" + std::string(kBegin) + "' line)");
        while (pos != std::string_view::npos) {
            std::size_t body = pos + kBegin.size();
            std::size_t end = text.find(kEnd, body);
            if (end == std::string_view::npos)
                throw CertificateError(i, "PEM certificate block is not terminated by '" + std::string(kEnd) + "'");
            if (std::string problem = base64_problem(text.substr(body, end - body)); !problem.empty())
                throw CertificateError(i, problem);
            pos = text.find(kBegin, end + kEnd.size());
        }
        std::string name = pem_files.size() == 1 ? "root.cert" : "root" + std::to_string(i + 1) + ".cert";
        bundle.entries.push_back({std::move(name), pem_files[i]});
    }
    return bundle;
}

std::string certificate_constant(std::size_t index) {
    return index == 0 ? "root_ca" : "root_ca_" + std::to_string(index + 1);
}

std::string embed_certificates(const CertBundle& bundle) {
    if (bundle.empty())
        return "// No root certificate was bundled, so HTTPS servers cannot be verified.\n"
               "static const char *const root_ca = nullptr;\n";

    std::string out;
    for (std::size_t i = 0; i < bundle.entries.size(); ++i) {
        const auto& entry = bundle.entries[i];
        if (i > 0) out += '\n';
        out += "// " + entry.filename + "\n";
        out += "static const char *const " + certificate_constant(i) + " =\n";
        std::string_view span = pem_span(entry.pem);
        std::size_t start = 0;
        while (start <= span.size()) {
            std::size_t nl = span.find('\n', start);
            std::string_view line = span.substr(start, nl == std::string_view::npos ? span.npos : nl - start);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            bool last = nl == std::string_view::npos;
            out += "    " + quote_line(line) + (last ? ";\n" : "\n");
            if (last) break;
            start = nl + 1;
        }
    }
    return out;
}

}  // namespace tinygen::targets
