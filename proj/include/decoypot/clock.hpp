// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <atomic>
#include <cstdint>
#include <memory>

namespace decoypot {

// All timestamps in the project are UTC milliseconds since the epoch.
class Clock {
public:
    virtual ~Clock() = default;
    virtual int64_t now_ms() const = 0;
};

class SystemClock final : public Clock {
public:
    int64_t now_ms() const override;
};

// Manually advanced clock for deterministic tests and the simulated backend.
class TestClock final : public Clock {
public:
    explicit TestClock(int64_t start_ms = 1'700'000'000'000) : now_(start_ms) {}
    int64_t now_ms() const override { return now_.load(); }
    void advance_ms(int64_t delta) { now_ += delta; }
    void set_ms(int64_t t) { now_ = t; }

private:
    std::atomic<int64_t> now_;
};

}  // namespace decoypot
