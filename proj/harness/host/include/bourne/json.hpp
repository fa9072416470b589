// SPDX-License-Identifier: Apache-2.0
// Host implementation of the bourne::json interface subset used by generated clients.
#ifndef TINYGEN_HOST_BOURNE_JSON_HPP_
#define TINYGEN_HOST_BOURNE_JSON_HPP_

#include <cstddef>
#include <string>
#include <system_error>
#include <utility>
#include <vector>

namespace bourne {

class json {
public:
    enum class class_type { null, object, array, string, floating, integral, boolean };

    json() : type_(class_type::null) {}
    json(std::nullptr_t) : type_(class_type::null) {}
    json(bool value) : type_(class_type::boolean), bool_(value) {}
    json(int value) : type_(class_type::integral), int_(value) {}
    json(long value) : type_(class_type::integral), int_(value) {}
    json(long long value) : type_(class_type::integral), int_(value) {}
    json(unsigned value) : type_(class_type::integral), int_(value) {}
    json(double value) : type_(class_type::floating), float_(value) {}
    json(const char *value) : type_(class_type::string), string_(value) {}
    json(const std::string &value) : type_(class_type::string), string_(value) {}

    static json object();
    static json array();

    /// Member access; turns a null value into an object first.
    json &operator[](const std::string &key);
    /// Member lookup; missing members read as null.
    const json &operator[](const std::string &key) const;
    json &operator[](std::size_t index);
    const json &operator[](std::size_t index) const;

    /// Appends to an array; turns a null value into an array first.
    void append(const json &value);

    bool has_key(const std::string &key) const;
    std::size_t size() const;

    class_type type() const { return type_; }
    bool is_null() const { return type_ == class_type::null; }
    bool is_object() const { return type_ == class_type::object; }
    bool is_array() const { return type_ == class_type::array; }
    bool is_string() const { return type_ == class_type::string; }
    bool is_int() const { return type_ == class_type::integral; }
    bool is_float() const { return type_ == class_type::floating; }
    bool is_bool() const { return type_ == class_type::boolean; }

    long long to_int() const;
    double to_float() const;
    bool to_bool() const;
    /// The text of a string value; any other value is dumped.
    std::string to_string() const;

    const std::vector<json> &array_range() const { return items_; }
    const std::vector<std::pair<std::string, json> > &object_range() const { return members_; }

    /// Compact JSON text. Object members keep insertion order.
    std::string dump() const;

    /// Sets `error` and returns null on malformed input.
    static json parse(const std::string &text, std::error_code &error);

    friend bool operator==(const json &a, const json &b);
    friend bool operator!=(const json &a, const json &b) { return !(a == b); }

private:
    class_type type_;
    bool bool_ = false;
    long long int_ = 0;
    double float_ = 0.0;
    std::string string_;
    std::vector<json> items_;
    std::vector<std::pair<std::string, json> > members_;
};

}  // namespace bourne

#endif  // TINYGEN_HOST_BOURNE_JSON_HPP_
