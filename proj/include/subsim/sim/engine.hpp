#pragma once

#include "subsim/core/event_log.hpp"
#include "subsim/grid/fault.hpp"
#include "subsim/grid/power_flow.hpp"
#include "subsim/sim/devices.hpp"
#include "subsim/sim/hooks.hpp"
#include "subsim/sim/layout.hpp"
#include "subsim/sim/sdn_switch.hpp"

#include <map>
#include <memory>
#include <optional>
#include <random>

namespace subsim::sim {

struct SimulationParams {
    TimeBase tb{};
    std::uint64_t seed = 1;
    grid::NoiseParams noise{};
    double load_scale = 1.0;
    bool trace = false;
    std::uint32_t goose_tal_ms = 1000;
};

/// Relay settings per bay, derived at configuration time: pickups clear the
/// maximum normal bay current and, for machine/load bays, the bay's largest
/// through current over a fault sweep of the whole default grid, so only
/// in-zone events trip.
struct ProtectionSettings {
    std::vector<IedConfig> per_bay;

    static ProtectionSettings configure(const grid::NetworkModel& net,
                                        const SystemLayout& layout,
                                        const grid::ServiceState& svc,
                                        const grid::PowerFlowSolution& pf);
};

/// Single-clock substation simulation. Per tick, in fixed order: scheduled
/// grid transitions, merging units publish, attackers act, switches deliver,
/// relays evaluate and publish, breakers move, PMUs report, SCADA steps.
class Simulation : public SimControl {
  public:
    Simulation(const grid::NetworkModel& net, SimulationParams params,
               std::optional<ProtectionSettings> settings = std::nullopt);
    ~Simulation() override;

    // Wiring.
    void set_scada(ScadaHook* hook) { scada_ = hook; }
    void add_attacker(std::shared_ptr<AttackDriver> driver);

    /// Monitoring: returns the monitor-port id of the substation's process
    /// switch. Capture must be armed on that port.
    int monitor_port(int bus) const;
    void arm_capture(int bus, int port, Tick from, Tick to);
    const std::vector<codec::RawFrame>& captured_frames() const {
        return capture_;
    }

    // Scheduling.
    void schedule_fault(Tick t, const grid::FaultSpec& spec);
    void schedule_operator_close(Tick t, int bay_id);

    // Execution. Ticks in [now, t_end) are simulated; advance_quiet skips
    // straight to the target tick and is only legal while nothing is
    // scheduled in between (publishing, protection and heartbeat work is
    // elided for the skipped span).
    void run_to(Tick t_end);
    void advance_quiet(Tick t);

    // SimControl.
    Tick now() const override { return now_; }
    const TimeBase& time_base() const override { return params_.tb; }
    const SystemLayout& layout() const override { return layout_; }
    EventLog& log() override { return log_; }
    void inject_sv_to_ied(int bay_id, const codec::RawFrame&) override;
    void inject_goose_to_breaker(int bay_id, const codec::RawFrame&) override;
    void activate_cied(int bus, int compromised_bay_id) override;
    void operator_close_breaker(int bay_id) override;
    codec::GooseFrame current_goose(int bay_id) const override;
    codec::SvFrame current_sv(int bay_id) const override;

    // Introspection.
    const grid::NetworkModel& network() const { return *net_; }
    const grid::GridState& grid_state() const { return state_; }
    const grid::PowerFlowSolution& power_flow() const { return pf_; }
    const grid::ServiceState& service_state() const { return svc_; }
    const Breaker& breaker(int bay_id) const;
    const Ied& ied(int bay_id) const;
    bool cied_active(int bus) const;
    int cied_assumed_bay(int bus) const; // -1 when standby
    const ProtectionSettings& protection() const { return settings_; }
    bool fault_active() const { return active_fault_.has_value(); }
    BayMeasurements bay_measurements(int bay_id) const;
    grid::SystemSnapshot snapshot_now(bool with_noise);
    const SdnSwitch& process_switch(int bus) const;
    const SdnSwitch& station_switch(int bus) const;

  private:
    struct Node; // per-substation wiring

    const grid::NetworkModel* net_;
    SimulationParams params_;
    SystemLayout layout_;
    ProtectionSettings settings_;
    EventLog log_;
    std::mt19937_64 rng_;
    Tick now_ = 0;

    grid::ServiceState svc_;
    grid::PowerFlowSolution pf_;
    grid::GridState state_;
    std::optional<grid::FaultSpec> active_fault_;

    std::vector<MergingUnit> mus_;
    std::vector<Ied> ieds_;
    std::vector<GoosePublisher> pubs_;
    std::vector<Breaker> breakers_;
    std::vector<BayMeasurements> meas_;
    std::vector<std::vector<codec::RawFrame>> ied_inbox_;
    std::vector<std::vector<codec::RawFrame>> cb_inbox_;

    std::map<int, std::unique_ptr<Node>> nodes_; // bus id -> wiring
    ScadaHook* scada_ = nullptr;
    std::vector<std::shared_ptr<AttackDriver>> attackers_;

    std::vector<codec::RawFrame> capture_;
    int capture_bus_ = -1;
    Tick capture_from_ = 0, capture_to_ = -1;

    std::multimap<Tick, grid::FaultSpec> pending_faults_;
    std::multimap<Tick, int> pending_closes_;

    void build_wiring();
    void rebuild_service_state();
    void recompute_state();
    void refresh_measurements();
    void step_one();
    void route_process(int bus, int ingress_port, const codec::RawFrame& f);
    void route_station(int bus, int ingress_port, const codec::RawFrame& f);
    void deliver(int bus, bool process, int port, const codec::RawFrame& f);
    void publish_goose(int bay_id, bool from_cied, Node& node,
                       const codec::GooseFrame& frame, bool heartbeat);
    Node& node(int bus);
    const Node& node(int bus) const;
};

} // namespace subsim::sim
