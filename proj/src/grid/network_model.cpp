#include "subsim/grid/network_model.hpp"

#include "subsim/core/errors.hpp"

#include <set>

namespace subsim::grid {

int NetworkModel::bus_index(int bus_id) const {
    for (int i = 0; i < bus_count(); ++i)
        if (buses[i].id == bus_id) return i;
    throw ModelError("unknown bus id " + std::to_string(bus_id));
}

const Branch& NetworkModel::branch_by_id(int branch_id) const {
    for (const auto& b : branches)
        if (b.id == branch_id) return b;
    throw ModelError("unknown branch id " + std::to_string(branch_id));
}

double NetworkModel::z_base_ohm(int bus_id) const {
    const Bus& b = buses[bus_index(bus_id)];
    return b.nominal_kv * b.nominal_kv / base_mva;
}

std::vector<bool> reachable_from_slack(const NetworkModel& net,
                                       const std::vector<int>& open) {
    std::set<int> open_set(open.begin(), open.end());
    int n = net.bus_count();
    std::vector<bool> seen(n, false);
    int slack = -1;
    for (int i = 0; i < n; ++i)
        if (net.buses[i].type == BusType::Slack) slack = i;
    if (slack < 0) throw ModelError("network has no slack bus");
    std::vector<int> stack{slack};
    seen[slack] = true;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (const auto& br : net.branches) {
            if (open_set.count(br.id)) continue;
            int f = net.bus_index(br.from), t = net.bus_index(br.to);
            int v = -1;
            if (f == u) v = t;
            else if (t == u) v = f;
            if (v >= 0 && !seen[v]) {
                seen[v] = true;
                stack.push_back(v);
            }
        }
    }
    return seen;
}

void NetworkModel::validate() const {
    if (buses.empty()) throw ModelError("network has no buses");
    std::set<int> ids;
    int slack_count = 0;
    for (const auto& b : buses) {
        if (!ids.insert(b.id).second)
            throw ModelError("duplicate bus id " + std::to_string(b.id));
        if (b.type == BusType::Slack) ++slack_count;
        if (b.nominal_kv <= 0)
            throw ModelError("bus " + std::to_string(b.id) +
                             " has non-positive nominal kV");
    }
    if (slack_count != 1)
        throw ModelError("network must have exactly one slack bus, found " +
                         std::to_string(slack_count));
    std::set<int> br_ids;
    for (const auto& br : branches) {
        if (!br_ids.insert(br.id).second)
            throw ModelError("duplicate branch id " + std::to_string(br.id));
        bus_index(br.from);
        bus_index(br.to);
        if (std::abs(br.z1) <= 0.0 || std::abs(br.z0) <= 0.0)
            throw ModelError("branch " + std::to_string(br.id) +
                             " has zero impedance magnitude");
        if (br.tap <= 0.0)
            throw ModelError("branch " + std::to_string(br.id) +
                             " has non-positive tap");
    }
    for (const auto& g : generators) {
        bus_index(g.bus);
        if (std::abs(g.z1) <= 0.0)
            throw ModelError("generator " + std::to_string(g.id) +
                             " has zero machine impedance");
    }
    for (const auto& l : loads) bus_index(l.bus);

    auto seen = reachable_from_slack(*this);
    for (int i = 0; i < bus_count(); ++i)
        if (!seen[i])
            throw ModelError("bus " + std::to_string(buses[i].id) +
                             " is not connected to the slack");
}

} // namespace subsim::grid
