#pragma once

#include "subsim/codec/frames.hpp"
#include "subsim/core/time.hpp"
#include "subsim/sim/layout.hpp"
#include "subsim/sim/phasor.hpp"

#include <Eigen/Dense>

#include <array>
#include <optional>

namespace subsim::sim {

/// Relay settings. Pickups are chosen at configuration time from the solved
/// network so they clear the bay's maximum normal current with margin.
struct IedConfig {
    double pickup_pu = 0.15;
    int trip_delay_cycles = 1; // within [1, 3]
    bool reclose_disabled = true;
    bool validate_goose_freshness = false; // baseline relays accept stale counters

    void validate() const;
};

/// Phasor measurements a merging unit turns into one SV stream: four
/// currents (a, b, c, neutral) and four voltages, engineering units.
struct BayMeasurements {
    std::array<std::complex<double>, 4> current_a;
    std::array<std::complex<double>, 4> voltage_v;
};

/// Publishes the bay's SV stream: instantaneous samples of the measurement
/// phasors, scaled to integer counts. The sample counter is derived from the
/// simulation tick and wraps each second.
class MergingUnit {
  public:
    MergingUnit(const Bay& bay, TimeBase tb);
    codec::RawFrame publish(Tick t, const BayMeasurements& m) const;
    codec::SvFrame frame_at(Tick t, const BayMeasurements& m) const;

  private:
    const Bay* bay_;
    TimeBase tb_;
};

/// GOOSE retransmission bookkeeping: a state change bumps stNum and resets
/// sqNum, heartbeats at half the time-allowed-to-live bump sqNum.
class GoosePublisher {
  public:
    GoosePublisher(const Bay& bay, TimeBase tb,
                   std::uint32_t time_allowed_to_live_ms = 1000);

    /// Returns a frame when a publication is due. `heartbeat_out` tells the
    /// caller whether it was a heartbeat (trace) or a state change.
    std::optional<codec::GooseFrame> poll(Tick t, const codec::GooseEntry& state,
                                          bool& heartbeat_out);
    codec::GooseFrame snapshot(Tick t) const; // current state, counters as-is

  private:
    const Bay* bay_;
    TimeBase tb_;
    std::uint32_t tal_ms_;
    Tick heartbeat_ticks_;
    bool published_ = false;
    codec::GooseEntry last_{};
    std::uint32_t st_num_ = 0;
    std::uint32_t sq_num_ = 0;
    Tick next_heartbeat_ = 0;

    codec::GooseFrame make(Tick t) const;
};

/// Protection relay: consumes the bay's SV stream (plus the remote end's for
/// line bays), estimates current phasors, and trips when the operating
/// current exceeds pickup continuously for the configured delay.
/// Line bays operate on the differential current (sum of the end currents);
/// generator and load bays on the local phase current.
class Ied {
  public:
    Ied(const Bay& bay, IedConfig cfg, bool differential, double amps_per_pu,
        TimeBase tb);

    void on_local_sv(Tick t, const codec::SvFrame& f);
    void on_remote_sv(Tick t, const codec::SvFrame& f);

    struct Decision {
        bool trip_now = false;   // first tick the trip asserts
        double operating_pu = 0.0;
    };
    Decision evaluate(Tick t);

    bool tripped() const { return tripped_; }
    void reset_trip() { tripped_ = false; above_ticks_ = 0; }
    const IedConfig& config() const { return cfg_; }
    void set_config(const IedConfig& cfg) { cfg_ = cfg; }
    const Bay& bay() const { return *bay_; }
    bool differential() const { return differential_; }

  private:
    const Bay* bay_;
    IedConfig cfg_;
    bool differential_;
    double amps_per_pu_;
    TimeBase tb_;
    std::array<PhasorEstimator, 4> local_i_;
    std::array<PhasorEstimator, 4> remote_i_;
    long above_ticks_ = 0;
    bool tripped_ = false;
};

/// Breaker with a one-cycle mechanical delay. Trip commands latch; repeated
/// commands while opening or already open are ignored.
class Breaker {
  public:
    Breaker(const Bay& bay, TimeBase tb) : bay_(&bay), tb_(tb) {}

    /// A trip command arrived (from a GOOSE with the trip flag set).
    /// Returns true when this schedules a fresh opening.
    bool command_trip(Tick t);
    /// Returns true when the breaker transitions open at this tick.
    bool update(Tick t);
    void close();

    bool closed() const { return closed_; }
    bool opening() const { return open_at_ >= 0; }
    const Bay& bay() const { return *bay_; }

  private:
    const Bay* bay_;
    TimeBase tb_;
    bool closed_ = true;
    Tick open_at_ = -1;
};

} // namespace subsim::sim
