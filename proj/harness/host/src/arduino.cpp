// SPDX-License-Identifier: Apache-2.0
#include <chrono>
#include <cstdio>
#include <iostream>
#include <thread>

#include "Arduino.h"
#include "WiFi.h"
#include "host_state.hpp"

HardwareSerial Serial;
WiFiClass WiFi;

String::String(int value) : text_(std::to_string(value)) {}
String::String(long long value) : text_(std::to_string(value)) {}

namespace {

void emit(const std::string& text) {
    host::detail::serial_buffer() += text;
    std::cout << text << std::flush;
}

const auto start_time = std::chrono::steady_clock::now();

}  // namespace

void HardwareSerial::begin(unsigned long) {}
void HardwareSerial::print(const char* text) { emit(text ? text : ""); }
void HardwareSerial::print(int value) { emit(std::to_string(value)); }
void HardwareSerial::println() { emit("\n"); }
void HardwareSerial::println(const char* text) { emit(std::string(text ? text : "") + "\n"); }
void HardwareSerial::println(int value) { emit(std::to_string(value) + "\n"); }

// Generated sketches poll WiFi with delay(); on the host there is nothing to wait for.
void delay(unsigned long) {}

unsigned long millis() {
    auto elapsed = std::chrono::steady_clock::now() - start_time;
    return static_cast<unsigned long>(std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count());
}

wl_status_t WiFiClass::begin(const char*, const char*) { return WL_CONNECTED; }
wl_status_t WiFiClass::status() const { return WL_CONNECTED; }

namespace host {

const std::string& serialOutput() { return detail::serial_buffer(); }

}  // namespace host
