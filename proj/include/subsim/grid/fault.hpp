#pragma once

#include "subsim/grid/network_model.hpp"
#include "subsim/grid/power_flow.hpp"
#include "subsim/grid/snapshot.hpp"

#include <Eigen/Dense>

namespace subsim::grid {

/// Fault classes 1-10: which phases are involved and whether the fault
/// connects to ground.
enum class FaultType {
    AGround = 1,
    BGround = 2,
    CGround = 3,
    ABGround = 4,
    BCGround = 5,
    ACGround = 6,
    AB = 7,
    BC = 8,
    AC = 9,
    ABCGround = 10,
};

const char* to_string(FaultType t);
bool involves_ground(FaultType t);
/// Phase involvement mask (a, b, c).
std::array<bool, 3> faulted_phases(FaultType t);

struct FaultSpec {
    int branch_id = 0;
    double location = 0.5;      // fraction along the branch from the from end
    double impedance_ohm = 1.0; // per faulted phase
    FaultType type = FaultType::ABCGround;

    /// Throws ModelError unless location is strictly inside (0,1),
    /// impedance positive, type in [1,10] and the branch exists.
    void validate(const NetworkModel& net) const;
};

/// Full three-phase electrical operating point: everything a merging unit
/// can measure. Currents follow the convention: branch currents flow into
/// the branch at each end, generator currents into the network, load
/// currents into the load.
struct GridState {
    Eigen::Matrix3Xcd bus_v;     // 3 x nbus
    Eigen::Matrix3Xcd br_i_from; // 3 x nbranch
    Eigen::Matrix3Xcd br_i_to;
    Eigen::Matrix3Xcd gen_i;  // 3 x ngen
    Eigen::Matrix3Xcd load_i; // 3 x nload
    double freq_offset_hz = 0.0; // system-wide deviation below nominal
};

struct FaultResult {
    GridState state;
    Complex i_fault_seq[3]; // zero, positive, negative at the fault point
    Eigen::Vector3cd i_fault_abc;
    Eigen::Vector3cd v_fault_abc; // during-fault voltage at the fault point
    Complex v_prefault_fault_node;
};

/// Balanced three-phase state from a positive-sequence power-flow solution.
GridState make_steady_state(const NetworkModel& net, const ServiceState& svc,
                            const PowerFlowSolution& sol);

/// During-fault state by sequence-network analysis: a temporary fault node
/// is inserted at the location fraction, the boundary condition for the
/// fault type is solved against the three sequence Thevenin equivalents,
/// and voltages everywhere follow by superposition on the prefault state.
/// Loads are held as constant admittances fixed at their prefault voltage;
/// machines are sources behind their stored impedances.
FaultResult apply_fault(const NetworkModel& net, const ServiceState& svc,
                        const PowerFlowSolution& prefault,
                        const FaultSpec& spec);

/// Same analysis with the fault applied directly at an existing bus.
FaultResult apply_bus_fault(const NetworkModel& net, const ServiceState& svc,
                            const PowerFlowSolution& prefault, int bus_id,
                            FaultType type, double impedance_ohm);

/// Snapshot view of a state (used for feature assembly and the PMU feeds).
SystemSnapshot state_to_snapshot(const GridState& state, double nominal_hz,
                                 double timestamp);

/// Frequency dip applied system-wide during a genuine fault: 0.01 Hz per
/// per-unit of positive-sequence fault current, capped at 10 pu.
double fault_frequency_dip(const Complex& i1_fault);

} // namespace subsim::grid
