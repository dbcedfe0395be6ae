#pragma once

// Seeded random scenarios whose hypotheses hold by construction: disk
// automorphisms, rotations between nested arc systems, Blaschke coverings,
// contractions of the strip and the quadrant, and half-plane slit maps.

#include <cstdint>
#include <vector>

#include "robincap/scenario.hpp"

namespace robincap {

/// `count` instances of one kind; ids are `<kind>_rand_<seed>_<k>`.
std::vector<Scenario> random_scenarios(ScenarioKind kind, int count, std::uint64_t seed);

/// `count` instances of every kind.
std::vector<Scenario> random_suite(int count, std::uint64_t seed);

}  // namespace robincap
