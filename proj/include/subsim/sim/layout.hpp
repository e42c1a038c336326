#pragma once

#include "subsim/codec/frames.hpp"
#include "subsim/grid/network_model.hpp"

#include <string>
#include <vector>

namespace subsim::sim {

enum class BayKind { Line, Generator, Load };

/// One protection bay: a breaker, the merging unit measuring its element,
/// and the relay that commands it. Line ends get a bay at each terminal
/// substation.
struct Bay {
    int id = 0; // global index; doubles as the breaker index in feature order
    BayKind kind = BayKind::Line;
    int bus = 0;        // substation this bay lives at
    int element_id = 0; // branch / generator / load id
    bool at_from_end = true;
    std::string name; // e.g. "s06.L13f", "s01.G1", "s02.D1"

    codec::Mac sv_mac{};
    codec::Mac goose_mac{};
    std::uint16_t sv_appid = 0;
    std::uint16_t goose_appid = 0;
    std::string sv_id;
};

/// Deterministic system layout derived from the network model. Bay order is
/// the breaker feature order: line bays by ascending branch id (from end
/// before to end), then generator bays by id, then load bays by id.
struct SystemLayout {
    const grid::NetworkModel* net = nullptr;
    std::vector<Bay> bays;
    std::vector<std::vector<int>> bays_at_bus; // bus index -> bay ids

    int bay_count() const { return static_cast<int>(bays.size()); }
    /// Bay ids of the two ends of a line, {from, to}.
    std::pair<int, int> line_bays(int branch_id) const;
    int bay_for_generator(int gen_id) const;
    const Bay& bay(int id) const { return bays[static_cast<size_t>(id)]; }

    static SystemLayout build(const grid::NetworkModel& net);
};

std::string substation_name(int bus);

} // namespace subsim::sim
