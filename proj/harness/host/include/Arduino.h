// SPDX-License-Identifier: Apache-2.0
// Desktop stand-in for the parts of the Arduino core that generated clients use.
// Kept to C++11 so it compiles with the same dialect as device code.
#ifndef TINYGEN_HOST_ARDUINO_H_
#define TINYGEN_HOST_ARDUINO_H_

#include <string>

/// Byte string with the Arduino String interface subset. Like the real class it has no
/// std::string constructor, so generated code must go through c_str().
class String {
public:
    String() {}
    String(const char *text) : text_(text ? text : "") {}
    String(int value);
    String(long long value);

    const char *c_str() const { return text_.c_str(); }
    unsigned int length() const { return static_cast<unsigned int>(text_.size()); }
    bool startsWith(const String &prefix) const { return text_.compare(0, prefix.text_.size(), prefix.text_) == 0; }

    String &operator+=(const String &other)
    {
        text_ += other.text_;
        return *this;
    }
    friend String operator+(String a, const String &b) { return a += b; }
    friend bool operator==(const String &a, const String &b) { return a.text_ == b.text_; }
    friend bool operator!=(const String &a, const String &b) { return a.text_ != b.text_; }

private:
    std::string text_;
};

/// Writes to stdout and keeps a copy for host::serial_output().
class HardwareSerial {
public:
    void begin(unsigned long baud);
    void print(const char *text);
    void print(const String &text) { print(text.c_str()); }
    void print(int value);
    void println();
    void println(const char *text);
    void println(const String &text) { println(text.c_str()); }
    void println(int value);
};

extern HardwareSerial Serial;

void delay(unsigned long ms);
unsigned long millis();

#endif  // TINYGEN_HOST_ARDUINO_H_
