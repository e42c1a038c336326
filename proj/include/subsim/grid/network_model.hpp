#pragma once

#include <complex>
#include <string>
#include <vector>

namespace subsim::grid {

using Complex = std::complex<double>;

enum class BusType { Slack, PV, PQ };

struct Bus {
    int id = 0; // 1-based
    BusType type = BusType::PQ;
    double nominal_kv = 132.0; // phase-to-phase, used for ohm <-> pu conversion
    double shunt_g = 0.0;      // bus shunt, pu on system base
    double shunt_b = 0.0;
};

// Series impedances are per-unit on the system base, one value per sequence.
// Charging susceptance is the total line value (split half/half at the ends).
struct Branch {
    int id = 0; // 1-based
    int from = 0;
    int to = 0;
    Complex z1; // positive sequence (= negative for static elements)
    Complex z0; // zero sequence
    double charging_b = 0.0;
    double tap = 1.0; // off-nominal turns ratio on the from side, 1 = none
};

struct Generator {
    int id = 0;
    int bus = 0;
    double p_mw = 0.0;
    double v_setpoint = 1.0;
    Complex z1{0.0, 0.2};      // machine positive/negative-sequence impedance, pu
    Complex z0_ground{0.0, 0.05}; // zero-sequence path to ground, pu
};

struct Load {
    int id = 0;
    int bus = 0;
    double p_mw = 0.0;
    double q_mvar = 0.0;
};

/// Static network description: buses, branches, generators, loads, with
/// per-sequence impedance data. All impedances per-unit on base_mva.
struct NetworkModel {
    std::string name;
    double base_mva = 100.0;
    std::vector<Bus> buses;
    std::vector<Branch> branches;
    std::vector<Generator> generators;
    std::vector<Load> loads;

    int bus_count() const { return static_cast<int>(buses.size()); }
    int branch_count() const { return static_cast<int>(branches.size()); }
    int bus_index(int bus_id) const; // 0-based index, throws on unknown id
    const Branch& branch_by_id(int branch_id) const;

    double z_base_ohm(int bus_id) const; // nominal_kv^2 / base_mva

    /// Throws ModelError on structural problems: duplicate ids, branches to
    /// unknown buses, non-positive impedance magnitudes, a disconnected
    /// graph, or a missing/duplicated slack bus.
    void validate() const;
};

/// Buses reachable from the slack over in-service branches. `open` holds
/// branch ids taken out of service.
std::vector<bool> reachable_from_slack(const NetworkModel& net,
                                       const std::vector<int>& open = {});

} // namespace subsim::grid
