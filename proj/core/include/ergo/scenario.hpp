#pragma once

#include <string>

#include "ergo/action.hpp"
#include "ergo/partition.hpp"

namespace ergo {

/// Built-in model constructors. Parameters by name:
///   rotation:         angle p/q (interval action of Z)
///   odometer:         depth (adding machine on 2^depth equal atoms)
///   sl2-torus:        p (elementary matrices acting on (Z/p)^2 minus 0)
///   schreier-sl2p:    p (same group on SL(2, Z/p) by left multiplication)
///   schmidt-composite: block_sizes + block_ratio (expander blocks with
///                      geometrically shrinking masses chained by a swap)
///   nasty-z:          truncation M (the measured-expander example, with
///                      its uniform-arcs partition family attached)
struct ScenarioSpec {
  std::string name;
  Rational angle = 0;
  int depth = 3;
  int p = 3;
  std::vector<int> block_sizes;
  Rational block_ratio = Rational(1, 8);
  int truncation = 6;
};

struct Scenario {
  ActionModel action;
  std::vector<Partition> partitions;
  std::string description;
  Rational mass_defect = 0;  // nasty-z: mass of the discarded tail
};

Scenario scenario_build(const ScenarioSpec& spec);

/// Tail sets of the schmidt-composite model: Z_j = union of blocks >= j.
std::vector<Set> schmidt_tails(const Scenario& scenario, const std::vector<int>& block_sizes);

}  // namespace ergo
