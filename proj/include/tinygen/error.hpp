// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tinygen {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Syntax error in a YAML/JSON document or template. Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(message + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Structural problem with an OpenAPI document; `location` is a JSON-pointer-like path.
class SpecError : public Error {
public:
    SpecError(std::string location, const std::string& message)
        : Error(location + ": " + message), location_(std::move(location)) {}

    const std::string& location() const noexcept { return location_; }

private:
    std::string location_;
};

class TemplateError : public Error {
public:
    using Error::Error;
};

class TargetError : public Error {
public:
    using Error::Error;
};

/// `index` is the 0-based position of the offending input.
class CertificateError : public Error {
public:
    CertificateError(std::size_t index, const std::string& message)
        : Error("certificate at index " + std::to_string(index) + ": " + message), index_(index) {}

    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class EmitError : public Error {
public:
    using Error::Error;
};

}  // namespace tinygen
