#include "subsim/grid/ieee14.hpp"

namespace subsim::grid {

// Positive-sequence bus/branch/generator/load data is the published IEEE
// 14-bus test case on a 100 MVA base. The published case carries no
// sequence data and no voltage bases, so this model adds documented
// conventions:
//   - zero-sequence branch impedance = 3 x positive-sequence
//   - machine impedance j0.20 pu (positive = negative sequence), generator
//     zero-sequence ground path j0.05 pu
//   - nominal voltage 132 kV at every bus; this fixes the ohm -> per-unit
//     conversion for fault impedances (Zbase = 174.24 ohm)
NetworkModel build_ieee14() {
    NetworkModel net;
    net.name = "ieee14";
    net.base_mva = 100.0;

    struct BusRow { int id; BusType t; double vset, qd, pd, bs; };
    const BusRow bus_rows[] = {
        // id  type          Vset    Qd    Pd     Bshunt
        {1, BusType::Slack, 1.060, 0.0, 0.0, 0.0},
        {2, BusType::PV, 1.045, 12.7, 21.7, 0.0},
        {3, BusType::PV, 1.010, 19.0, 94.2, 0.0},
        {4, BusType::PQ, 1.0, -3.9, 47.8, 0.0},
        {5, BusType::PQ, 1.0, 1.6, 7.6, 0.0},
        {6, BusType::PV, 1.070, 7.5, 11.2, 0.0},
        {7, BusType::PQ, 1.0, 0.0, 0.0, 0.0},
        {8, BusType::PV, 1.090, 0.0, 0.0, 0.0},
        {9, BusType::PQ, 1.0, 16.6, 29.5, 0.19},
        {10, BusType::PQ, 1.0, 5.8, 9.0, 0.0},
        {11, BusType::PQ, 1.0, 1.8, 3.5, 0.0},
        {12, BusType::PQ, 1.0, 1.6, 6.1, 0.0},
        {13, BusType::PQ, 1.0, 5.8, 13.5, 0.0},
        {14, BusType::PQ, 1.0, 5.0, 14.9, 0.0},
    };
    for (const auto& r : bus_rows) {
        Bus b;
        b.id = r.id;
        b.type = r.t;
        b.nominal_kv = 132.0;
        b.shunt_b = r.bs;
        net.buses.push_back(b);
    }

    struct BranchRow { int f, t; double r, x, b, tap; };
    const BranchRow branch_rows[] = {
        {1, 2, 0.01938, 0.05917, 0.0528, 0.0},
        {1, 5, 0.05403, 0.22304, 0.0492, 0.0},
        {2, 3, 0.04699, 0.19797, 0.0438, 0.0},
        {2, 4, 0.05811, 0.17632, 0.0340, 0.0},
        {2, 5, 0.05695, 0.17388, 0.0346, 0.0},
        {3, 4, 0.06701, 0.17103, 0.0128, 0.0},
        {4, 5, 0.01335, 0.04211, 0.0, 0.0},
        {4, 7, 0.0, 0.20912, 0.0, 0.978},
        {4, 9, 0.0, 0.55618, 0.0, 0.969},
        {5, 6, 0.0, 0.25202, 0.0, 0.932},
        {6, 11, 0.09498, 0.19890, 0.0, 0.0},
        {6, 12, 0.12291, 0.25581, 0.0, 0.0},
        {6, 13, 0.06615, 0.13027, 0.0, 0.0},
        {7, 8, 0.0, 0.17615, 0.0, 0.0},
        {7, 9, 0.0, 0.11001, 0.0, 0.0},
        {9, 10, 0.03181, 0.08450, 0.0, 0.0},
        {9, 14, 0.12711, 0.27038, 0.0, 0.0},
        {10, 11, 0.08205, 0.19207, 0.0, 0.0},
        {12, 13, 0.22092, 0.19988, 0.0, 0.0},
        {13, 14, 0.17093, 0.34802, 0.0, 0.0},
    };
    int bid = 1;
    for (const auto& r : branch_rows) {
        Branch br;
        br.id = bid++;
        br.from = r.f;
        br.to = r.t;
        br.z1 = Complex(r.r, r.x);
        br.z0 = 3.0 * br.z1;
        br.charging_b = r.b;
        br.tap = r.tap > 0.0 ? r.tap : 1.0;
        net.branches.push_back(br);
    }

    struct GenRow { int bus; double p; };
    const GenRow gen_rows[] = {{1, 232.4}, {2, 40.0}, {3, 0.0}, {6, 0.0}, {8, 0.0}};
    int gid = 1;
    for (const auto& r : gen_rows) {
        Generator g;
        g.id = gid++;
        g.bus = r.bus;
        g.p_mw = r.p;
        g.v_setpoint = bus_rows[r.bus - 1].vset;
        net.generators.push_back(g);
    }

    int lid = 1;
    for (const auto& r : bus_rows) {
        if (r.pd != 0.0 || r.qd != 0.0) {
            Load l;
            l.id = lid++;
            l.bus = r.id;
            l.p_mw = r.pd;
            l.q_mvar = r.qd;
            net.loads.push_back(l);
        }
    }

    return net;
}

} // namespace subsim::grid
