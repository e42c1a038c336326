#pragma once

#include "subsim/core/time.hpp"

#include <complex>
#include <vector>

namespace subsim::sim {

/// Sliding half-cycle correlation turning an instantaneous sample stream
/// back into a phasor. Exact for a clean fundamental-frequency signal once
/// the window holds a contiguous half cycle. A repeated push for the same
/// tick replaces the previous sample (last frame wins), which is how
/// injected traffic overrides the genuine stream at a victim relay.
class PhasorEstimator {
  public:
    explicit PhasorEstimator(int samples_per_cycle = 80);

    void push(Tick t, double sample);
    void reset();

    /// Valid once the window is full and contiguous.
    bool valid() const;
    /// RMS phasor of the windowed signal (same units as the samples).
    std::complex<double> phasor() const;

  private:
    int spc_;
    int window_;
    std::vector<double> cos_table_, sin_table_;
    struct Entry {
        Tick t;
        double x;
    };
    std::vector<Entry> buf_; // ring, newest at head_ - 1
    int head_ = 0;
    int count_ = 0;
    Tick last_tick_ = -1;
    double sum_c_ = 0.0, sum_s_ = 0.0;
    long pushes_ = 0;

    void rebuild_sums();
};

} // namespace subsim::sim
