#include "subsim/grid/power_flow.hpp"

#include "subsim/core/errors.hpp"
#include "subsim/grid/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace subsim::grid {

bool ServiceState::in_service_branch(int id) const {
    return std::find(open_branches.begin(), open_branches.end(), id) ==
           open_branches.end();
}
bool ServiceState::in_service_generator(int id) const {
    return std::find(offline_generators.begin(), offline_generators.end(), id) ==
           offline_generators.end();
}
bool ServiceState::in_service_load(int id) const {
    return std::find(offline_loads.begin(), offline_loads.end(), id) ==
           offline_loads.end();
}

ComplexMatrix build_ybus(const NetworkModel& net, const ServiceState& svc) {
    const int n = net.bus_count();
    ComplexMatrix y = ComplexMatrix::Zero(n, n);
    for (const auto& br : net.branches) {
        if (!svc.in_service_branch(br.id)) continue;
        const int f = net.bus_index(br.from);
        const int t = net.bus_index(br.to);
        const Complex ys = 1.0 / br.z1;
        const Complex bc(0.0, br.charging_b / 2.0);
        const double a = br.tap;
        y(f, f) += (ys + bc) / (a * a);
        y(t, t) += ys + bc;
        y(f, t) += -ys / a;
        y(t, f) += -ys / a;
    }
    for (int i = 0; i < n; ++i)
        y(i, i) += Complex(net.buses[i].shunt_g, net.buses[i].shunt_b);
    return y;
}

namespace {

struct Injections {
    Eigen::VectorXd p_sched;
    Eigen::VectorXd q_sched;
    std::vector<BusType> eff_type; // PV buses demoted to PQ when gen offline
    Eigen::VectorXd v_set;
};

Injections scheduled_injections(const NetworkModel& net,
                                const ServiceState& svc) {
    const int n = net.bus_count();
    Injections inj;
    inj.p_sched = Eigen::VectorXd::Zero(n);
    inj.q_sched = Eigen::VectorXd::Zero(n);
    inj.v_set = Eigen::VectorXd::Ones(n);
    inj.eff_type.assign(n, BusType::PQ);

    std::vector<bool> has_gen(n, false);
    for (const auto& g : net.generators) {
        if (!svc.in_service_generator(g.id)) continue;
        const int i = net.bus_index(g.bus);
        inj.p_sched(i) += g.p_mw / net.base_mva;
        inj.v_set(i) = g.v_setpoint;
        has_gen[i] = true;
    }
    for (const auto& l : net.loads) {
        if (!svc.in_service_load(l.id)) continue;
        const int i = net.bus_index(l.bus);
        inj.p_sched(i) -= svc.load_scale * l.p_mw / net.base_mva;
        inj.q_sched(i) -= svc.load_scale * l.q_mvar / net.base_mva;
    }
    for (int i = 0; i < n; ++i) {
        if (net.buses[i].type == BusType::Slack) {
            inj.eff_type[i] = BusType::Slack;
            if (!has_gen[i])
                throw ModelError("slack bus " + std::to_string(net.buses[i].id) +
                                 " has no in-service generator");
        } else if (net.buses[i].type == BusType::PV && has_gen[i]) {
            inj.eff_type[i] = BusType::PV;
        }
    }
    return inj;
}

} // namespace

PowerFlowSolution solve_power_flow(const NetworkModel& net,
                                   const ServiceState& svc,
                                   const PowerFlowOptions& opts) {
    const int n = net.bus_count();
    auto reach = reachable_from_slack(net, svc.open_branches);

    // Loads outside the slack island cannot be served.
    std::string lost;
    for (const auto& l : net.loads) {
        if (!svc.in_service_load(l.id)) continue;
        const int i = net.bus_index(l.bus);
        if (!reach[i]) lost += (lost.empty() ? "" : ", ") + std::to_string(l.bus);
    }
    if (!lost.empty())
        throw ModelError("load buses disconnected from the slack: " + lost);

    const auto inj = scheduled_injections(net, svc);

    // Solve only the slack island; islanded generator buses are reported at
    // their setpoint, dead buses at zero.
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
        if (reach[i]) keep.push_back(i);
    const int m = static_cast<int>(keep.size());
    std::vector<int> pos(n, -1);
    for (int k = 0; k < m; ++k) pos[keep[k]] = k;

    ComplexMatrix y_full = build_ybus(net, svc);
    ComplexMatrix y(m, m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) y(a, b) = y_full(keep[a], keep[b]);

    Eigen::VectorXd vm(m), va = Eigen::VectorXd::Zero(m);
    std::vector<int> ang_idx, vm_idx;
    for (int k = 0; k < m; ++k) {
        const int i = keep[k];
        vm(k) = inj.eff_type[i] == BusType::PQ ? 1.0 : inj.v_set(i);
        if (inj.eff_type[i] != BusType::Slack) ang_idx.push_back(k);
        if (inj.eff_type[i] == BusType::PQ) vm_idx.push_back(k);
    }
    const int na = static_cast<int>(ang_idx.size());
    const int nv = static_cast<int>(vm_idx.size());

    auto bus_power = [&](const Eigen::VectorXd& vmag, const Eigen::VectorXd& vang) {
        ComplexVector vc(m);
        for (int k = 0; k < m; ++k) vc(k) = std::polar(vmag(k), vang(k));
        ComplexVector s = vc.array() * (y * vc).conjugate().array();
        return std::pair<Eigen::VectorXd, Eigen::VectorXd>(s.real(), s.imag());
    };

    double worst = 0.0;
    int it = 0;
    for (; it <= opts.max_iterations; ++it) {
        auto [p, q] = bus_power(vm, va);
        Eigen::VectorXd mis(na + nv);
        for (int a = 0; a < na; ++a)
            mis(a) = inj.p_sched(keep[ang_idx[a]]) - p(ang_idx[a]);
        for (int b = 0; b < nv; ++b)
            mis(na + b) = inj.q_sched(keep[vm_idx[b]]) - q(vm_idx[b]);
        worst = mis.size() ? mis.cwiseAbs().maxCoeff() : 0.0;
        if (worst < opts.tolerance) break;
        if (it == opts.max_iterations)
            throw ConvergenceError(
                "power flow did not converge after " +
                    std::to_string(opts.max_iterations) +
                    " iterations; worst mismatch " + std::to_string(worst) + " pu",
                worst);

        Eigen::MatrixXd jac(na + nv, na + nv);
        auto G = [&](int i, int j) { return y(i, j).real(); };
        auto B = [&](int i, int j) { return y(i, j).imag(); };
        for (int a = 0; a < na; ++a) {
            const int i = ang_idx[a];
            for (int b = 0; b < na; ++b) {
                const int j = ang_idx[b];
                if (i == j) {
                    jac(a, b) = -q(i) - B(i, i) * vm(i) * vm(i);
                } else {
                    const double th = va(i) - va(j);
                    jac(a, b) = vm(i) * vm(j) *
                                (G(i, j) * std::sin(th) - B(i, j) * std::cos(th));
                }
            }
            for (int b = 0; b < nv; ++b) {
                const int j = vm_idx[b];
                if (i == j) {
                    jac(a, na + b) = p(i) / vm(i) + G(i, i) * vm(i);
                } else {
                    const double th = va(i) - va(j);
                    jac(a, na + b) = vm(i) * (G(i, j) * std::cos(th) +
                                              B(i, j) * std::sin(th));
                }
            }
        }
        for (int a = 0; a < nv; ++a) {
            const int i = vm_idx[a];
            for (int b = 0; b < na; ++b) {
                const int j = ang_idx[b];
                if (i == j) {
                    jac(na + a, b) = p(i) - G(i, i) * vm(i) * vm(i);
                } else {
                    const double th = va(i) - va(j);
                    jac(na + a, b) = -vm(i) * vm(j) *
                                     (G(i, j) * std::cos(th) +
                                      B(i, j) * std::sin(th));
                }
            }
            for (int b = 0; b < nv; ++b) {
                const int j = vm_idx[b];
                if (i == j) {
                    jac(na + a, na + b) = q(i) / vm(i) - B(i, i) * vm(i);
                } else {
                    const double th = va(i) - va(j);
                    jac(na + a, na + b) = vm(i) * (G(i, j) * std::sin(th) -
                                                   B(i, j) * std::cos(th));
                }
            }
        }

        Eigen::VectorXd dx = jac.partialPivLu().solve(mis);
        for (int a = 0; a < na; ++a) va(ang_idx[a]) += dx(a);
        for (int b = 0; b < nv; ++b) vm(vm_idx[b]) += dx(na + b);
    }

    PowerFlowSolution sol;
    sol.v = ComplexVector::Zero(n);
    sol.energized.assign(n, false);
    sol.iterations = it;
    sol.max_mismatch = worst;
    for (int k = 0; k < m; ++k) {
        sol.v(keep[k]) = std::polar(vm(k), va(k));
        sol.energized[keep[k]] = true;
    }

    // Generator-only islands sit at machine setpoint with no current.
    for (const auto& g : net.generators) {
        if (!svc.in_service_generator(g.id)) continue;
        const int i = net.bus_index(g.bus);
        if (!reach[i]) {
            sol.v(i) = Complex(g.v_setpoint, 0.0);
            sol.energized[i] = true;
        }
    }

    // Attribute bus generation back to individual machines: the slack bus
    // picks up P and Q, PV buses pick up Q; co-located machines share equally.
    ComplexVector s_bus = sol.v.array() * (y_full * sol.v).conjugate().array();
    for (const auto& l : net.loads) {
        if (!svc.in_service_load(l.id)) continue;
        const int i = net.bus_index(l.bus);
        s_bus(i) += svc.load_scale * Complex(l.p_mw, l.q_mvar) / net.base_mva;
    }
    std::vector<int> gens_at(n, 0);
    for (const auto& g : net.generators)
        if (svc.in_service_generator(g.id)) gens_at[net.bus_index(g.bus)]++;
    sol.gen_s.assign(net.generators.size(), Complex(0.0, 0.0));
    for (size_t gi = 0; gi < net.generators.size(); ++gi) {
        const auto& g = net.generators[gi];
        if (!svc.in_service_generator(g.id)) continue;
        const int i = net.bus_index(g.bus);
        if (!reach[i]) continue; // islanded machine floats unloaded
        sol.gen_s[gi] = s_bus(i) / static_cast<double>(gens_at[i]);
    }
    return sol;
}

Eigen::Matrix2Xcd branch_currents(const NetworkModel& net,
                                  const ServiceState& svc,
                                  const ComplexVector& v) {
    Eigen::Matrix2Xcd out = Eigen::Matrix2Xcd::Zero(2, net.branch_count());
    for (int bi = 0; bi < net.branch_count(); ++bi) {
        const auto& br = net.branches[bi];
        if (!svc.in_service_branch(br.id)) continue;
        const Complex vf = v(net.bus_index(br.from));
        const Complex vt = v(net.bus_index(br.to));
        const Complex ys = 1.0 / br.z1;
        const Complex bc(0.0, br.charging_b / 2.0);
        const double a = br.tap;
        out(0, bi) = (ys + bc) / (a * a) * vf - ys / a * vt;
        out(1, bi) = -ys / a * vf + (ys + bc) * vt;
    }
    return out;
}

ComplexVector branch_flows_from(const NetworkModel& net,
                                const ServiceState& svc,
                                const ComplexVector& v) {
    auto cur = branch_currents(net, svc, v);
    ComplexVector s(net.branch_count());
    for (int bi = 0; bi < net.branch_count(); ++bi)
        s(bi) = v(net.bus_index(net.branches[bi].from)) * std::conj(cur(0, bi));
    return s;
}

SystemSnapshot to_snapshot(const PowerFlowSolution& sol, double nominal_hz,
                           double timestamp) {
    const int n = static_cast<int>(sol.v.size());
    SystemSnapshot snap;
    snap.magnitude.resize(3, n);
    snap.angle.resize(3, n);
    snap.frequency = Eigen::Matrix3Xd::Constant(3, n, nominal_hz);
    snap.timestamp = timestamp;
    const double shift = 2.0 * M_PI / 3.0;
    for (int i = 0; i < n; ++i) {
        const double m = std::abs(sol.v(i));
        const double a = std::arg(sol.v(i));
        for (int p = 0; p < 3; ++p) {
            snap.magnitude(p, i) = m;
            snap.angle(p, i) = normalize_angle(a - p * shift);
        }
    }
    return snap;
}

} // namespace subsim::grid
