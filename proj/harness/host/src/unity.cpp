// SPDX-License-Identifier: Apache-2.0
#include <cstdio>

#include "unity.h"

namespace unity_host {

namespace {
int tests = 0;
int failures = 0;
bool current_failed = false;
}  // namespace

void begin() {
    tests = 0;
    failures = 0;
}

void run(void (*test)(), const char* name, int line) {
    ++tests;
    current_failed = false;
    test();
    if (current_failed) ++failures;
    std::printf("%d:%s:%s\n", line, name, current_failed ? "FAIL" : "PASS");
}

void fail(const char* file, int line, const char* message) {
    current_failed = true;
    std::printf("%s:%d: %s\n", file, line, message);
}

int end() {
    std::printf("\n-----------------------\n%d Tests %d Failures 0 Ignored\n%s\n", tests, failures,
                failures ? "FAIL" : "OK");
    return failures;
}

}  // namespace unity_host
