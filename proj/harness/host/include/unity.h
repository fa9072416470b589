// SPDX-License-Identifier: Apache-2.0
// Minimal Unity-compatible test macros for running generated tests on the host.
#ifndef TINYGEN_HOST_UNITY_H_
#define TINYGEN_HOST_UNITY_H_

namespace unity_host {
void begin();
void run(void (*test)(), const char *name, int line);
void fail(const char *file, int line, const char *message);
int end();
}  // namespace unity_host

#define UNITY_BEGIN() unity_host::begin()
#define UNITY_END() unity_host::end()
#define RUN_TEST(fn) unity_host::run(fn, #fn, __LINE__)
#define TEST_ASSERT_TRUE(condition) \
    do { \
        if (!(condition)) { \
            unity_host::fail(__FILE__, __LINE__, "Expected TRUE Was FALSE"); \
            return; \
        } \
    } while (0)
#define TEST_ASSERT_EQUAL(expected, actual) TEST_ASSERT_TRUE((expected) == (actual))

#endif  // TINYGEN_HOST_UNITY_H_
