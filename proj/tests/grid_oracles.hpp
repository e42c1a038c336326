#pragma once

#include "subsim/grid/fault.hpp"
#include "subsim/grid/network_model.hpp"
#include "subsim/grid/power_flow.hpp"

#include <Eigen/Dense>

namespace oracles {

// Independent full three-phase nodal solve of a faulted network, used to
// cross-check the sequence-network fault analysis. It builds the 3(N+1)
// phase-frame admittance matrix directly from the model data (its own
// Fortescue algebra, its own branch splitting), recovers machine Norton
// sources from the prefault operating point, stamps the fault connection in
// the phase frame and solves the dense system. Loads are ungrounded-wye
// constant admittances fixed at prefault voltage, matching the model's
// documented semantics.
struct ThreePhaseFaultOracle {
    // Voltage phasors per phase per bus (3 x nbus), fault node excluded.
    Eigen::Matrix3Xcd bus_v;
    // Residual of the prefault reconstruction: how exactly the assembled
    // network reproduces the power-flow voltages before the fault stamp.
    double prefault_residual = 0.0;
};

ThreePhaseFaultOracle solve_three_phase_fault(
    const subsim::grid::NetworkModel& net,
    const subsim::grid::ServiceState& svc,
    const subsim::grid::PowerFlowSolution& prefault,
    const subsim::grid::FaultSpec& spec);

} // namespace oracles
