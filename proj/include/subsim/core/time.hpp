#pragma once

#include <cstdint>

namespace subsim {

// Simulation time is kept as an integer tick count, one tick per sampled-value
// publication. All device timing (trip delays, breaker travel, heartbeats) is
// expressed in ticks so event timestamps are exact and runs are reproducible.
using Tick = std::int64_t;

struct TimeBase {
    double nominal_hz = 60.0;   // system frequency
    int samples_per_cycle = 80; // SV publications per nominal cycle

    int samples_per_second() const {
        return static_cast<int>(nominal_hz * samples_per_cycle);
    }
    double seconds(Tick t) const {
        return static_cast<double>(t) / samples_per_second();
    }
    Tick from_seconds(double s) const {
        return static_cast<Tick>(s * samples_per_second() + 0.5);
    }
    Tick cycles(int n) const { return static_cast<Tick>(n) * samples_per_cycle; }
};

} // namespace subsim
