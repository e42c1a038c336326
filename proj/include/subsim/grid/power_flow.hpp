#pragma once

#include "subsim/grid/network_model.hpp"
#include "subsim/grid/snapshot.hpp"

#include <Eigen/Dense>

#include <vector>

namespace subsim::grid {

using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

/// Elements taken out of service before solving (open breakers).
struct ServiceState {
    std::vector<int> open_branches; // branch ids
    std::vector<int> offline_generators;
    std::vector<int> offline_loads;
    double load_scale = 1.0;

    bool in_service_branch(int id) const;
    bool in_service_generator(int id) const;
    bool in_service_load(int id) const;
};

struct PowerFlowOptions {
    double tolerance = 1e-10; // max |mismatch| in pu
    int max_iterations = 30;
};

struct PowerFlowSolution {
    ComplexVector v;              // positive-sequence voltage per bus
    std::vector<Complex> gen_s;   // per-generator complex output, pu
    std::vector<bool> energized;  // false for buses outside the slack island
    int iterations = 0;
    double max_mismatch = 0.0;
};

/// Positive-sequence bus admittance matrix for the in-service network.
ComplexMatrix build_ybus(const NetworkModel& net, const ServiceState& svc = {});

/// Newton-Raphson power flow. Buses cut off from the slack island are
/// allowed only when they carry no in-service load; a generator-only island
/// is held at its machine setpoint (no-load energization) and a dead island
/// at zero. Throws ModelError naming disconnected load buses, and
/// ConvergenceError (with the worst mismatch) past the iteration cap.
PowerFlowSolution solve_power_flow(const NetworkModel& net,
                                   const ServiceState& svc = {},
                                   const PowerFlowOptions& opts = {});

/// Complex current into each end of every branch (pu). Row 0: from end,
/// row 1: to end; out-of-service branches carry zero.
Eigen::Matrix2Xcd branch_currents(const NetworkModel& net,
                                  const ServiceState& svc,
                                  const ComplexVector& v);

/// Complex power into the from end of every branch (pu).
ComplexVector branch_flows_from(const NetworkModel& net,
                                const ServiceState& svc,
                                const ComplexVector& v);

/// Balanced three-phase snapshot from a positive-sequence solution: phase a
/// carries the solved phasor, phases b and c trail/lead by 120 degrees, all
/// frequencies exactly nominal.
SystemSnapshot to_snapshot(const PowerFlowSolution& sol, double nominal_hz,
                           double timestamp);

} // namespace subsim::grid
