#pragma once

#include "subsim/codec/frames.hpp"
#include "subsim/core/event_log.hpp"
#include "subsim/core/time.hpp"
#include "subsim/sim/layout.hpp"

#include <Eigen/Dense>

namespace subsim::sim {

/// One PMU report: the reporting substation's bus phasors at an instant,
/// with measurement noise already applied.
struct PmuSample {
    Tick tick = 0;
    int bus = 0;
    Eigen::Vector3d magnitude;
    Eigen::Vector3d angle;
    Eigen::Vector3d frequency;
};

/// The simulation surface exposed to attached actors (SCADA, attackers,
/// operators). Everything they may do goes through here.
class SimControl {
  public:
    virtual ~SimControl() = default;
    virtual Tick now() const = 0;
    virtual const TimeBase& time_base() const = 0;
    virtual const SystemLayout& layout() const = 0;
    virtual EventLog& log() = 0;

    /// Frame injection on a device's access link (does not traverse the
    /// switch): the relay's SV input or the breaker's command input.
    virtual void inject_sv_to_ied(int bay_id, const codec::RawFrame&) = 0;
    virtual void inject_goose_to_breaker(int bay_id, const codec::RawFrame&) = 0;

    /// Isolate the compromised relay and promote the substation's standby:
    /// port rule delta on both switches plus takeover, atomically.
    virtual void activate_cied(int bus, int compromised_bay_id) = 0;

    /// Operator breaker commands.
    virtual void operator_close_breaker(int bay_id) = 0;

    /// Live publisher state of a bay, used by forgers to continue counters.
    virtual codec::GooseFrame current_goose(int bay_id) const = 0;
    virtual codec::SvFrame current_sv(int bay_id) const = 0;
};

class AttackDriver {
  public:
    virtual ~AttackDriver() = default;
    virtual void step(Tick t, SimControl& sim) = 0;
};

class ScadaHook {
  public:
    virtual ~ScadaHook() = default;
    virtual void on_goose(Tick t, int from_bus, const codec::GooseFrame&) = 0;
    virtual void on_pmu(const PmuSample&) = 0;
    virtual void step(Tick t, SimControl& sim) = 0;
};

} // namespace subsim::sim
