#include "subsim/sim/layout.hpp"

#include "subsim/core/errors.hpp"

#include <cstdio>

namespace subsim::sim {

std::string substation_name(int bus) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "s%02d", bus);
    return buf;
}

namespace {

codec::Mac multicast_mac(std::uint8_t proto, int bus, int bay) {
    return codec::Mac{0x01, 0x0C, 0xCD, proto, static_cast<std::uint8_t>(bus),
                      static_cast<std::uint8_t>(bay)};
}

void finish_bay(Bay& b, int global_id) {
    b.id = global_id;
    b.sv_mac = multicast_mac(0x04, b.bus, global_id);
    b.goose_mac = multicast_mac(0x01, b.bus, global_id);
    b.sv_appid = static_cast<std::uint16_t>(0x4000 + global_id);
    b.goose_appid = static_cast<std::uint16_t>(0x0100 + global_id);
    b.sv_id = "MU-" + b.name;
}

} // namespace

SystemLayout SystemLayout::build(const grid::NetworkModel& net) {
    SystemLayout sl;
    sl.net = &net;
    sl.bays_at_bus.assign(net.bus_count(), {});
    int id = 0;
    auto add = [&](Bay b) {
        finish_bay(b, id++);
        sl.bays_at_bus[net.bus_index(b.bus)].push_back(b.id);
        sl.bays.push_back(std::move(b));
    };

    for (const auto& br : net.branches) {
        char buf[32];
        Bay f;
        f.kind = BayKind::Line;
        f.bus = br.from;
        f.element_id = br.id;
        f.at_from_end = true;
        std::snprintf(buf, sizeof(buf), "%s.L%02df",
                      substation_name(br.from).c_str(), br.id);
        f.name = buf;
        add(f);
        Bay t;
        t.kind = BayKind::Line;
        t.bus = br.to;
        t.element_id = br.id;
        t.at_from_end = false;
        std::snprintf(buf, sizeof(buf), "%s.L%02dt",
                      substation_name(br.to).c_str(), br.id);
        t.name = buf;
        add(t);
    }
    for (const auto& g : net.generators) {
        Bay b;
        b.kind = BayKind::Generator;
        b.bus = g.bus;
        b.element_id = g.id;
        b.name = substation_name(g.bus) + ".G" + std::to_string(g.id);
        add(b);
    }
    for (const auto& l : net.loads) {
        Bay b;
        b.kind = BayKind::Load;
        b.bus = l.bus;
        b.element_id = l.id;
        b.name = substation_name(l.bus) + ".D" + std::to_string(l.id);
        add(b);
    }
    return sl;
}

std::pair<int, int> SystemLayout::line_bays(int branch_id) const {
    int f = -1, t = -1;
    for (const auto& b : bays) {
        if (b.kind != BayKind::Line || b.element_id != branch_id) continue;
        (b.at_from_end ? f : t) = b.id;
    }
    if (f < 0 || t < 0)
        throw ModelError("no line bays for branch " + std::to_string(branch_id));
    return {f, t};
}

int SystemLayout::bay_for_generator(int gen_id) const {
    for (const auto& b : bays)
        if (b.kind == BayKind::Generator && b.element_id == gen_id) return b.id;
    throw ModelError("no generator bay for id " + std::to_string(gen_id));
}

} // namespace subsim::sim
