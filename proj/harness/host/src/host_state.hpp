// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "host_control.h"

namespace host::detail {

std::string& serial_buffer();
std::vector<RecordedRequest>& request_log();
Responder& responder();

}  // namespace host::detail
