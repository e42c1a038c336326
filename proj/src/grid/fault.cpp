#include "subsim/grid/fault.hpp"

#include "subsim/core/errors.hpp"
#include "subsim/grid/sequence.hpp"

#include <array>
#include <cmath>

namespace subsim::grid {

const char* to_string(FaultType t) {
    switch (t) {
    case FaultType::AGround: return "A-gnd";
    case FaultType::BGround: return "B-gnd";
    case FaultType::CGround: return "C-gnd";
    case FaultType::ABGround: return "AB-gnd";
    case FaultType::BCGround: return "BC-gnd";
    case FaultType::ACGround: return "AC-gnd";
    case FaultType::AB: return "A-B";
    case FaultType::BC: return "B-C";
    case FaultType::AC: return "A-C";
    case FaultType::ABCGround: return "ABC-gnd";
    }
    return "?";
}

bool involves_ground(FaultType t) {
    switch (t) {
    case FaultType::AB:
    case FaultType::BC:
    case FaultType::AC: return false;
    default: return true;
    }
}

std::array<bool, 3> faulted_phases(FaultType t) {
    switch (t) {
    case FaultType::AGround: return {true, false, false};
    case FaultType::BGround: return {false, true, false};
    case FaultType::CGround: return {false, false, true};
    case FaultType::ABGround:
    case FaultType::AB: return {true, true, false};
    case FaultType::BCGround:
    case FaultType::BC: return {false, true, true};
    case FaultType::ACGround:
    case FaultType::AC: return {true, false, true};
    case FaultType::ABCGround: return {true, true, true};
    }
    return {false, false, false};
}

void FaultSpec::validate(const NetworkModel& net) const {
    net.branch_by_id(branch_id);
    if (!(location > 0.0 && location < 1.0))
        throw ModelError("fault location must be strictly inside (0,1)");
    if (impedance_ohm <= 0.0)
        throw ModelError("fault impedance must be positive");
    const int t = static_cast<int>(type);
    if (t < 1 || t > 10)
        throw ModelError("fault type must be a class in [1,10]");
}

double fault_frequency_dip(const Complex& i1_fault) {
    return 0.01 * std::min(std::abs(i1_fault), 10.0);
}

namespace {

constexpr int kZero = 0, kPos = 1, kNeg = 2;

Eigen::Vector3cd balanced_from_positive(const Complex& v1) {
    Eigen::Vector3cd seq;
    seq << Complex(0, 0), v1, Complex(0, 0);
    return sequence_to_phase<double>(seq);
}

// Internal expanded network: the original buses plus (optionally) one fault
// node spliced into a branch. Charging stays lumped at the original branch
// ends so the prefault solution of the expanded network equals the original
// one exactly; only the series element is split.
struct ExpandedNet {
    const NetworkModel* net = nullptr;
    const ServiceState* svc = nullptr;
    int fault_node = -1;   // index in the expanded numbering, -1 for bus fault
    int split_branch = -1; // branch index, -1 when faulting a bus directly
    double location = 0.0;

    int size() const {
        return net->bus_count() + (fault_node >= 0 ? 1 : 0);
    }
};

// Per-sequence admittance matrix for the expanded network with machine
// impedances and constant-admittance loads included as shunts (sources
// zeroed), suitable for Thevenin/Zbus work.
ComplexMatrix sequence_ybus(const ExpandedNet& ex, int seq,
                            const ComplexVector& v_pre) {
    const NetworkModel& net = *ex.net;
    const int n = ex.size();
    ComplexMatrix y = ComplexMatrix::Zero(n, n);

    auto stamp = [&](int f, int t, Complex zs, double b_from, double b_to,
                     double tap) {
        const Complex ys = 1.0 / zs;
        y(f, f) += (ys + Complex(0, b_from / 2.0)) / (tap * tap);
        y(t, t) += ys + Complex(0, b_to / 2.0);
        y(f, t) += -ys / tap;
        y(t, f) += -ys / tap;
    };

    for (int bi = 0; bi < net.branch_count(); ++bi) {
        const auto& br = net.branches[bi];
        if (!ex.svc->in_service_branch(br.id)) continue;
        const Complex z = (seq == kZero) ? br.z0 : br.z1;
        const int f = net.bus_index(br.from);
        const int t = net.bus_index(br.to);
        if (bi == ex.split_branch) {
            // Series element split at the fault location; end charging and
            // the off-nominal tap stay on the original terminals.
            stamp(f, ex.fault_node, z * ex.location, br.charging_b, 0.0, br.tap);
            stamp(ex.fault_node, t, z * (1.0 - ex.location), 0.0, br.charging_b,
                  1.0);
        } else {
            stamp(f, t, z, br.charging_b, br.charging_b, br.tap);
        }
    }

    if (seq != kZero) {
        for (int i = 0; i < net.bus_count(); ++i)
            y(i, i) += Complex(net.buses[i].shunt_g, net.buses[i].shunt_b);
        for (const auto& l : net.loads) {
            if (!ex.svc->in_service_load(l.id)) continue;
            const int i = net.bus_index(l.bus);
            const double vm2 = std::norm(v_pre(i));
            if (vm2 <= 0.0) continue;
            const Complex s = ex.svc->load_scale *
                              Complex(l.p_mw, l.q_mvar) / net.base_mva;
            y(i, i) += std::conj(s) / vm2;
        }
        for (const auto& g : net.generators) {
            if (!ex.svc->in_service_generator(g.id)) continue;
            y(net.bus_index(g.bus), net.bus_index(g.bus)) += 1.0 / g.z1;
        }
    } else {
        for (const auto& g : net.generators) {
            if (!ex.svc->in_service_generator(g.id)) continue;
            y(net.bus_index(g.bus), net.bus_index(g.bus)) += 1.0 / g.z0_ground;
        }
    }
    return y;
}

// Column of the sequence impedance matrix at the fault node, i.e. the bus
// voltage response to a unit current injection there.
ComplexVector zbus_column(const ComplexMatrix& y, int node,
                          const char* which) {
    ComplexVector e = ComplexVector::Zero(y.rows());
    e(node) = Complex(1.0, 0.0);
    Eigen::PartialPivLU<ComplexMatrix> lu(y);
    ComplexVector col = lu.solve(e);
    if (!col.allFinite() || (y * col - e).norm() > 1e-6 * std::max(1.0, col.norm()))
        throw ModelError(std::string("singular ") + which +
                         " network: no path for fault current");
    return col;
}

struct BoundaryResult {
    Eigen::Vector3cd v_abc;
    Eigen::Vector3cd i_abc;
};

// Solve the fault boundary conditions in the phase frame against the
// sequence Thevenin impedances: three Thevenin rows plus three rows that
// encode the fault connection. Ground faults tie each faulted phase to
// ground through zf; phase-phase faults tie the two phases through zf.
BoundaryResult solve_boundary(const Complex& v_pre, Complex z0, Complex z1,
                              Complex z2, FaultType type, Complex zf) {
    using M6 = Eigen::Matrix<Complex, 6, 6>;
    using V6 = Eigen::Matrix<Complex, 6, 1>;
    const auto zabc = sequence_diag_to_phase<double>(z0, z1, z2);
    const auto vpre_abc = balanced_from_positive(v_pre);

    M6 m = M6::Zero();
    V6 rhs = V6::Zero();
    // V_abc + Zthev * I_abc = Vpre_abc
    for (int r = 0; r < 3; ++r) {
        m(r, r) = Complex(1, 0);
        for (int c = 0; c < 3; ++c) m(r, 3 + c) = zabc(r, c);
        rhs(r) = vpre_abc(r);
    }
    int row = 3;
    auto phase_to_ground = [&](int p) {
        m(row, p) = Complex(1, 0);
        m(row, 3 + p) = -zf;
        ++row;
    };
    auto open_phase = [&](int p) {
        m(row, 3 + p) = Complex(1, 0);
        ++row;
    };
    auto phase_to_phase = [&](int p, int q) {
        m(row, 3 + p) = Complex(1, 0); // Ip + Iq = 0
        m(row, 3 + q) = Complex(1, 0);
        ++row;
        m(row, p) = Complex(1, 0); // Vp - Vq = zf * Ip
        m(row, q) = Complex(-1, 0);
        m(row, 3 + p) = -zf;
        ++row;
    };

    const auto mask = faulted_phases(type);
    if (!involves_ground(type)) {
        int p = -1, q = -1;
        for (int i = 0; i < 3; ++i)
            if (mask[i]) (p < 0 ? p : q) = i;
        for (int i = 0; i < 3; ++i)
            if (!mask[i]) open_phase(i);
        phase_to_phase(p, q);
    } else {
        for (int i = 0; i < 3; ++i)
            mask[i] ? phase_to_ground(i) : open_phase(i);
    }

    V6 x = m.fullPivLu().solve(rhs);
    BoundaryResult out;
    out.v_abc = x.head<3>();
    out.i_abc = x.tail<3>();
    return out;
}

// Per-sequence branch end currents given the sequence voltages.
void sequence_branch_currents(const ExpandedNet& ex, int seq,
                              const ComplexVector& v,
                              ComplexVector& i_from, ComplexVector& i_to) {
    const NetworkModel& net = *ex.net;
    i_from = ComplexVector::Zero(net.branch_count());
    i_to = ComplexVector::Zero(net.branch_count());
    for (int bi = 0; bi < net.branch_count(); ++bi) {
        const auto& br = net.branches[bi];
        if (!ex.svc->in_service_branch(br.id)) continue;
        const Complex z = (seq == kZero) ? br.z0 : br.z1;
        const int f = net.bus_index(br.from);
        const int t = net.bus_index(br.to);
        const Complex bc(0.0, br.charging_b / 2.0);
        if (bi == ex.split_branch) {
            const Complex y1 = 1.0 / (z * ex.location);
            const Complex y2 = 1.0 / (z * (1.0 - ex.location));
            const Complex vf = v(f), vm = v(ex.fault_node), vt = v(t);
            const double a = br.tap;
            i_from(bi) = (y1 + bc) / (a * a) * vf - y1 / a * vm;
            i_to(bi) = -y2 * vm + (y2 + bc) * vt;
        } else {
            const Complex ys = 1.0 / z;
            const Complex vf = v(f), vt = v(t);
            const double a = br.tap;
            i_from(bi) = (ys + bc) / (a * a) * vf - ys / a * vt;
            i_to(bi) = -ys / a * vf + (ys + bc) * vt;
        }
    }
}

FaultResult run_fault(const ExpandedNet& ex, const PowerFlowSolution& prefault,
                      int fault_node, FaultType type, double zf_ohm,
                      double zbase_ohm) {
    const NetworkModel& net = *ex.net;
    const int nbus = net.bus_count();
    const Complex zf(zf_ohm / zbase_ohm, 0.0);

    // Prefault positive-sequence voltage at the fault point. For a spliced
    // branch this is the series divider value, which matches the expanded
    // network's own solution because charging stays on the terminals.
    ComplexVector v1_pre(ex.size());
    v1_pre.head(nbus) = prefault.v;
    if (ex.split_branch >= 0) {
        const auto& br = net.branches[ex.split_branch];
        const Complex vf = prefault.v(net.bus_index(br.from)) / br.tap;
        const Complex vt = prefault.v(net.bus_index(br.to));
        // End charging does not flow through the series element, so the
        // divider over the split impedance gives the exact node voltage.
        const Complex i_ser = (vf - vt) / br.z1;
        v1_pre(ex.fault_node) = vf - br.z1 * ex.location * i_ser;
    }

    const ComplexMatrix y1 = sequence_ybus(ex, kPos, prefault.v);
    // Static elements share positive/negative impedances, so the negative-
    // sequence network coincides with the positive one.
    const ComplexVector z1col = zbus_column(y1, fault_node, "positive-sequence");
    const ComplexVector& z2col = z1col;

    ComplexVector z0col;
    Complex z0_thev(1.0, 0.0); // placeholder when no ground path is exercised
    if (involves_ground(type)) {
        const ComplexMatrix y0 = sequence_ybus(ex, kZero, prefault.v);
        z0col = zbus_column(y0, fault_node, "zero-sequence");
        z0_thev = z0col(fault_node);
    } else {
        z0col = ComplexVector::Zero(ex.size());
    }

    const auto bd = solve_boundary(v1_pre(fault_node), z0_thev,
                                   z1col(fault_node), z2col(fault_node), type,
                                   zf);
    const Eigen::Vector3cd i_seq = phase_to_sequence<double>(bd.i_abc);

    // Superposition: sequence voltages everywhere.
    ComplexVector v0 = -z0col * i_seq(kZero);
    ComplexVector v1 = v1_pre - z1col * i_seq(kPos);
    ComplexVector v2 = -z2col * i_seq(kNeg);

    FaultResult res;
    res.i_fault_seq[0] = i_seq(kZero);
    res.i_fault_seq[1] = i_seq(kPos);
    res.i_fault_seq[2] = i_seq(kNeg);
    res.i_fault_abc = bd.i_abc;
    res.v_fault_abc = bd.v_abc;
    res.v_prefault_fault_node = v1_pre(fault_node);

    GridState& st = res.state;
    st.bus_v.resize(3, nbus);
    for (int i = 0; i < nbus; ++i) {
        Eigen::Vector3cd seq;
        seq << v0(i), v1(i), v2(i);
        st.bus_v.col(i) = sequence_to_phase<double>(seq);
    }

    ComplexVector if0, it0, if1, it1, if2, it2;
    sequence_branch_currents(ex, kPos, v1, if1, it1);
    sequence_branch_currents(ex, kPos, v2, if2, it2);
    if (involves_ground(type)) {
        sequence_branch_currents(ex, kZero, v0, if0, it0);
    } else {
        if0 = ComplexVector::Zero(net.branch_count());
        it0 = if0;
    }
    st.br_i_from.resize(3, net.branch_count());
    st.br_i_to.resize(3, net.branch_count());
    for (int b = 0; b < net.branch_count(); ++b) {
        Eigen::Vector3cd sf, stv;
        sf << if0(b), if1(b), if2(b);
        stv << it0(b), it1(b), it2(b);
        st.br_i_from.col(b) = sequence_to_phase<double>(sf);
        st.br_i_to.col(b) = sequence_to_phase<double>(stv);
    }

    // Machines: internal emf fixed by the prefault operating point.
    const int ngen = static_cast<int>(net.generators.size());
    st.gen_i.resize(3, ngen);
    for (int gi = 0; gi < ngen; ++gi) {
        const auto& g = net.generators[gi];
        st.gen_i.col(gi).setZero();
        if (!ex.svc->in_service_generator(g.id)) continue;
        const int i = net.bus_index(g.bus);
        const Complex v_pre_bus = prefault.v(i);
        if (std::abs(v_pre_bus) <= 0.0) continue;
        const Complex i_pre = std::conj(prefault.gen_s[gi] / v_pre_bus);
        const Complex emf = v_pre_bus + g.z1 * i_pre;
        Eigen::Vector3cd seq;
        seq << -v0(i) / g.z0_ground, (emf - v1(i)) / g.z1, -v2(i) / g.z1;
        if (!involves_ground(type)) seq(0) = Complex(0, 0);
        st.gen_i.col(gi) = sequence_to_phase<double>(seq);
    }

    const int nload = static_cast<int>(net.loads.size());
    st.load_i.resize(3, nload);
    for (int li = 0; li < nload; ++li) {
        const auto& l = net.loads[li];
        st.load_i.col(li).setZero();
        if (!ex.svc->in_service_load(l.id)) continue;
        const int i = net.bus_index(l.bus);
        const double vm2 = std::norm(prefault.v(i));
        if (vm2 <= 0.0) continue;
        const Complex y_load = std::conj(ex.svc->load_scale *
                                         Complex(l.p_mw, l.q_mvar) /
                                         net.base_mva) / vm2;
        Eigen::Vector3cd seq;
        seq << Complex(0, 0), y_load * v1(i), y_load * v2(i);
        st.load_i.col(li) = sequence_to_phase<double>(seq);
    }

    st.freq_offset_hz = fault_frequency_dip(i_seq(kPos));
    return res;
}

} // namespace

GridState make_steady_state(const NetworkModel& net, const ServiceState& svc,
                            const PowerFlowSolution& sol) {
    GridState st;
    const int nbus = net.bus_count();
    st.bus_v.resize(3, nbus);
    for (int i = 0; i < nbus; ++i)
        st.bus_v.col(i) = balanced_from_positive(sol.v(i));

    const auto cur = branch_currents(net, svc, sol.v);
    st.br_i_from.resize(3, net.branch_count());
    st.br_i_to.resize(3, net.branch_count());
    for (int b = 0; b < net.branch_count(); ++b) {
        st.br_i_from.col(b) = balanced_from_positive(cur(0, b));
        st.br_i_to.col(b) = balanced_from_positive(cur(1, b));
    }

    st.gen_i.resize(3, static_cast<int>(net.generators.size()));
    for (size_t gi = 0; gi < net.generators.size(); ++gi) {
        const auto& g = net.generators[gi];
        st.gen_i.col(gi).setZero();
        if (!svc.in_service_generator(g.id)) continue;
        const Complex v = sol.v(net.bus_index(g.bus));
        if (std::abs(v) <= 0.0) continue;
        st.gen_i.col(gi) = balanced_from_positive(std::conj(sol.gen_s[gi] / v));
    }

    st.load_i.resize(3, static_cast<int>(net.loads.size()));
    for (size_t li = 0; li < net.loads.size(); ++li) {
        const auto& l = net.loads[li];
        st.load_i.col(li).setZero();
        if (!svc.in_service_load(l.id)) continue;
        const Complex v = sol.v(net.bus_index(l.bus));
        if (std::abs(v) <= 0.0) continue;
        const Complex s = svc.load_scale * Complex(l.p_mw, l.q_mvar) / net.base_mva;
        st.load_i.col(li) = balanced_from_positive(std::conj(s / v));
    }
    return st;
}

FaultResult apply_fault(const NetworkModel& net, const ServiceState& svc,
                        const PowerFlowSolution& prefault,
                        const FaultSpec& spec) {
    spec.validate(net);
    const auto& br = net.branch_by_id(spec.branch_id);
    if (!svc.in_service_branch(br.id))
        throw ModelError("fault on out-of-service branch " +
                         std::to_string(br.id));
    ExpandedNet ex;
    ex.net = &net;
    ex.svc = &svc;
    ex.fault_node = net.bus_count();
    for (int bi = 0; bi < net.branch_count(); ++bi)
        if (net.branches[bi].id == spec.branch_id) ex.split_branch = bi;
    ex.location = spec.location;
    return run_fault(ex, prefault, ex.fault_node, spec.type, spec.impedance_ohm,
                     net.z_base_ohm(br.from));
}

FaultResult apply_bus_fault(const NetworkModel& net, const ServiceState& svc,
                            const PowerFlowSolution& prefault, int bus_id,
                            FaultType type, double impedance_ohm) {
    ExpandedNet ex;
    ex.net = &net;
    ex.svc = &svc;
    return run_fault(ex, prefault, net.bus_index(bus_id), type, impedance_ohm,
                     net.z_base_ohm(bus_id));
}

SystemSnapshot state_to_snapshot(const GridState& state, double nominal_hz,
                                 double timestamp) {
    const int n = static_cast<int>(state.bus_v.cols());
    SystemSnapshot snap;
    snap.magnitude.resize(3, n);
    snap.angle.resize(3, n);
    snap.frequency =
        Eigen::Matrix3Xd::Constant(3, n, nominal_hz - state.freq_offset_hz);
    snap.timestamp = timestamp;
    for (int i = 0; i < n; ++i) {
        for (int p = 0; p < 3; ++p) {
            snap.magnitude(p, i) = std::abs(state.bus_v(p, i));
            snap.angle(p, i) = normalize_angle(std::arg(state.bus_v(p, i)));
        }
    }
    return snap;
}

} // namespace subsim::grid
