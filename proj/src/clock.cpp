// SPDX-License-Identifier: Apache-2.0
#include "decoypot/clock.hpp"

#include <chrono>

namespace decoypot {

int64_t SystemClock::now_ms() const {
    using namespace std::chrono;
    return duration_cast<milliseconds>(system_clock::now().time_since_epoch()).count();
}

}  // namespace decoypot
