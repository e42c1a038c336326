#pragma once

#include "subsim/grid/network_model.hpp"

#include <iosfwd>
#include <string>

namespace subsim::grid {

// Plain-text case format, one record per line, '#' comments:
//   case <name> <base_mva>
//   bus <id> <slack|pv|pq> <nominal_kv> <shunt_g> <shunt_b>
//   branch <id> <from> <to> <r1> <x1> <r0> <x0> <charging_b> <tap>
//   gen <id> <bus> <p_mw> <v_setpoint> <x1> <x0_ground>
//   load <id> <bus> <p_mw> <q_mvar>
// All impedances per-unit on the case base; tap 1 means none.

NetworkModel read_case(std::istream& in);
NetworkModel read_case_file(const std::string& path);
void write_case(std::ostream& out, const NetworkModel& net);
void write_case_file(const std::string& path, const NetworkModel& net);

} // namespace subsim::grid
