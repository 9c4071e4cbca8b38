#pragma once

#include <optional>
#include <string>

#include "ergo/measurable_set.hpp"

namespace ergo {

/// A measurable partition: disjoint positive-measure cells covering the
/// space up to null sets. mesh is the largest cell diameter (interval
/// models only).
struct Partition {
  std::vector<Set> cells;
  std::vector<std::string> labels;
  std::optional<Rational> mesh;

  int size() const { return static_cast<int>(cells.size()); }
};

struct PartitionSpec {
  enum class Kind { uniform_arcs, dyadic, atom_blocks };
  Kind kind = Kind::uniform_arcs;
  int n = 1;                    // arc count or dyadic depth
  std::vector<int> assignment;  // atom-blocks: block id per atom
};

Partition build_partition(const Space& space, const PartitionSpec& spec);

/// Saturation [A]_P: the union of cells meeting A with positive measure.
Set saturate(const Space& space, const Partition& partition, const Set& a);

/// Largest pairwise cell-measure ratio; Q >= 1.
Rational measure_ratio_Q(const Space& space, const Partition& partition);

void validate_partition(const Space& space, const Partition& partition);

}  // namespace ergo
