#include "ergo/partition.hpp"

#include <algorithm>

#include "ergo/errors.hpp"

namespace ergo {

Partition build_partition(const Space& space, const PartitionSpec& spec) {
  Partition p;
  switch (spec.kind) {
    case PartitionSpec::Kind::uniform_arcs: {
      if (space.kind != Space::Kind::unit_interval)
        throw BadSpec("uniform-arcs needs an interval model");
      if (spec.n < 1) throw BadSpec("uniform-arcs needs n >= 1");
      for (int i = 0; i < spec.n; ++i) {
        p.cells.push_back(
            IntervalSet::from_intervals({{Rational(i, spec.n), Rational(i + 1, spec.n)}}));
        p.labels.push_back("arc" + std::to_string(i));
      }
      p.mesh = Rational(1, spec.n);
      break;
    }
    case PartitionSpec::Kind::dyadic: {
      if (space.kind != Space::Kind::unit_interval)
        throw BadSpec("dyadic needs an interval model");
      if (spec.n < 0 || spec.n > 20) throw BadSpec("dyadic depth out of range");
      int cells = 1 << spec.n;
      for (int i = 0; i < cells; ++i) {
        p.cells.push_back(
            IntervalSet::from_intervals({{Rational(i, cells), Rational(i + 1, cells)}}));
        p.labels.push_back("d" + std::to_string(i));
      }
      p.mesh = Rational(1, cells);
      break;
    }
    case PartitionSpec::Kind::atom_blocks: {
      if (space.kind != Space::Kind::atoms)
        throw BadSpec("atom-blocks needs an atom model");
      const int n = space.atom_space.atom_count;
      if (static_cast<int>(spec.assignment.size()) != n)
        throw BadSpec("atom-blocks assignment must cover every atom");
      int blocks = 0;
      for (int b : spec.assignment) {
        if (b < 0) throw BadSpec("negative block id");
        blocks = std::max(blocks, b + 1);
      }
      std::vector<std::vector<int>> members(blocks);
      for (int i = 0; i < n; ++i) members[spec.assignment[i]].push_back(i);
      for (int b = 0; b < blocks; ++b) {
        if (members[b].empty()) throw BadSpec("empty block " + std::to_string(b));
        p.cells.push_back(AtomSet::of(n, members[b]));
        p.labels.push_back("B" + std::to_string(b));
      }
      break;
    }
  }
  validate_partition(space, p);
  return p;
}

void validate_partition(const Space& space, const Partition& partition) {
  if (partition.cells.empty()) throw BadSpec("partition needs at least one cell");
  Rational total = 0;
  Set seen = space.empty_set();
  for (const auto& cell : partition.cells) {
    Rational nu = space.measure_of(cell);
    if (nu <= 0) throw BadSpec("partition cells must have positive measure");
    if (space.measure_of(set_intersect(seen, cell)) != 0)
      throw BadSpec("partition cells overlap");
    seen = set_union(seen, cell);
    total += nu;
  }
  if (total != 1) throw BadSpec("partition cells must cover the space");
}

Set saturate(const Space& space, const Partition& partition, const Set& a) {
  Set out = space.empty_set();
  for (const auto& cell : partition.cells)
    if (space.measure_of(set_intersect(cell, a)) > 0) out = set_union(out, cell);
  return out;
}

Rational measure_ratio_Q(const Space& space, const Partition& partition) {
  Rational lo = 0, hi = 0;
  for (const auto& cell : partition.cells) {
    Rational nu = space.measure_of(cell);
    if (lo == 0 || nu < lo) lo = nu;
    if (nu > hi) hi = nu;
  }
  return hi / lo;
}

}  // namespace ergo
