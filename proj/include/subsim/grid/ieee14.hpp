#pragma once

#include "subsim/grid/network_model.hpp"

namespace subsim::grid {

/// Standard IEEE 14-bus test case (100 MVA base): 14 buses, 20 branches,
/// 5 generators, 11 loads. Positive-sequence data is the published test-case
/// set; see ieee14.cpp for the sequence-data and voltage-base conventions
/// this model adds on top of it.
NetworkModel build_ieee14();

} // namespace subsim::grid
