#include "grid_oracles.hpp"

#include <complex>

namespace oracles {

using subsim::grid::Complex;
using subsim::grid::FaultSpec;
using subsim::grid::FaultType;
using subsim::grid::NetworkModel;
using subsim::grid::PowerFlowSolution;
using subsim::grid::ServiceState;
using M3 = Eigen::Matrix3cd;
using V3 = Eigen::Vector3cd;

namespace {

const Complex kAlpha = std::polar(1.0, 2.0 * M_PI / 3.0);

M3 synthesis() {
    M3 a;
    a << Complex(1, 0), Complex(1, 0), Complex(1, 0),
         Complex(1, 0), kAlpha * kAlpha, kAlpha,
         Complex(1, 0), kAlpha, kAlpha * kAlpha;
    return a;
}

M3 seq_block(Complex y0, Complex y1, Complex y2) {
    M3 d = M3::Zero();
    d(0, 0) = y0;
    d(1, 1) = y1;
    d(2, 2) = y2;
    const M3 a = synthesis();
    return a * d * a.inverse();
}

V3 balanced(Complex positive) {
    V3 v;
    v << positive, kAlpha * kAlpha * positive, kAlpha * positive;
    return v;
}

struct Stamper {
    Eigen::MatrixXcd& y;
    void block(int i, int j, const M3& b) {
        y.block<3, 3>(3 * i, 3 * j) += b;
    }
};

} // namespace

ThreePhaseFaultOracle solve_three_phase_fault(const NetworkModel& net,
                                              const ServiceState& svc,
                                              const PowerFlowSolution& prefault,
                                              const FaultSpec& spec) {
    const int nbus = net.bus_count();
    const int nf = nbus; // index of the inserted fault node
    const int n = nbus + 1;
    Eigen::MatrixXcd y = Eigen::MatrixXcd::Zero(3 * n, 3 * n);
    Stamper st{y};

    auto stamp_branch = [&](int f, int t, Complex z0, Complex z1, double b_from,
                            double b_to, double tap) {
        const M3 yser = seq_block(1.0 / z0, 1.0 / z1, 1.0 / z1);
        const M3 shf = seq_block(Complex(0, b_from / 2), Complex(0, b_from / 2),
                                 Complex(0, b_from / 2));
        const M3 sht = seq_block(Complex(0, b_to / 2), Complex(0, b_to / 2),
                                 Complex(0, b_to / 2));
        st.block(f, f, (yser + shf) / (tap * tap));
        st.block(t, t, yser + sht);
        st.block(f, t, -yser / tap);
        st.block(t, f, -yser / tap);
    };

    for (const auto& br : net.branches) {
        if (!svc.in_service_branch(br.id)) continue;
        const int f = net.bus_index(br.from);
        const int t = net.bus_index(br.to);
        if (br.id == spec.branch_id) {
            const double loc = spec.location;
            stamp_branch(f, nf, br.z0 * loc, br.z1 * loc, br.charging_b, 0.0,
                         br.tap);
            stamp_branch(nf, t, br.z0 * (1 - loc), br.z1 * (1 - loc), 0.0,
                         br.charging_b, 1.0);
        } else {
            stamp_branch(f, t, br.z0, br.z1, br.charging_b, br.charging_b,
                         br.tap);
        }
    }

    for (int i = 0; i < nbus; ++i) {
        const auto& b = net.buses[i];
        if (b.shunt_g != 0.0 || b.shunt_b != 0.0)
            st.block(i, i,
                     seq_block(Complex(0, 0), Complex(b.shunt_g, b.shunt_b),
                               Complex(b.shunt_g, b.shunt_b)));
    }
    for (const auto& l : net.loads) {
        if (!svc.in_service_load(l.id)) continue;
        const int i = net.bus_index(l.bus);
        const double vm2 = std::norm(prefault.v(i));
        if (vm2 <= 0.0) continue;
        const Complex yl =
            std::conj(svc.load_scale * Complex(l.p_mw, l.q_mvar) / net.base_mva) /
            vm2;
        st.block(i, i, seq_block(Complex(0, 0), yl, yl));
    }

    // Machines: Norton equivalents whose internal emf reproduces the
    // prefault dispatch.
    Eigen::VectorXcd i_src = Eigen::VectorXcd::Zero(3 * n);
    for (size_t gi = 0; gi < net.generators.size(); ++gi) {
        const auto& g = net.generators[gi];
        if (!svc.in_service_generator(g.id)) continue;
        const int i = net.bus_index(g.bus);
        st.block(i, i, seq_block(1.0 / g.z0_ground, 1.0 / g.z1, 1.0 / g.z1));
        const Complex v_pre = prefault.v(i);
        if (std::abs(v_pre) <= 0.0) continue;
        const Complex i_pre = std::conj(prefault.gen_s[gi] / v_pre);
        const Complex emf = v_pre + g.z1 * i_pre;
        i_src.segment<3>(3 * i) += balanced(emf / g.z1);
    }

    // Consistency: the unfaulted assembled network must reproduce the
    // prefault voltages at the original buses.
    Eigen::VectorXcd v_unfaulted = y.partialPivLu().solve(i_src);
    double resid = 0.0;
    for (int i = 0; i < nbus; ++i) {
        const V3 want = balanced(prefault.v(i));
        resid = std::max(resid,
                         (v_unfaulted.segment<3>(3 * i) - want).cwiseAbs().maxCoeff());
    }

    // Fault stamps at the fault node.
    const double zbase = net.z_base_ohm(net.branch_by_id(spec.branch_id).from);
    const Complex yf = zbase / Complex(spec.impedance_ohm, 0.0);
    const auto mask = subsim::grid::faulted_phases(spec.type);
    if (subsim::grid::involves_ground(spec.type)) {
        for (int p = 0; p < 3; ++p)
            if (mask[p]) y(3 * nf + p, 3 * nf + p) += yf;
    } else {
        int a = -1, b = -1;
        for (int p = 0; p < 3; ++p)
            if (mask[p]) (a < 0 ? a : b) = p;
        y(3 * nf + a, 3 * nf + a) += yf;
        y(3 * nf + b, 3 * nf + b) += yf;
        y(3 * nf + a, 3 * nf + b) -= yf;
        y(3 * nf + b, 3 * nf + a) -= yf;
    }

    Eigen::VectorXcd v = y.partialPivLu().solve(i_src);
    ThreePhaseFaultOracle out;
    out.prefault_residual = resid;
    out.bus_v.resize(3, nbus);
    for (int i = 0; i < nbus; ++i) out.bus_v.col(i) = v.segment<3>(3 * i);
    return out;
}

} // namespace oracles
