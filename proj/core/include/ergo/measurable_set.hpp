#pragma once

#include <variant>

#include "ergo/atom_space.hpp"
#include "ergo/interval_set.hpp"

namespace ergo {

/// A measurable subset of either supported space kind.
using Set = std::variant<IntervalSet, AtomSet>;

enum class SetOp { unite, intersect, difference, symdiff };

/// The underlying probability space: the unit interval with Lebesgue
/// measure, or a weighted atom space.
struct Space {
  enum class Kind { unit_interval, atoms };

  Kind kind = Kind::unit_interval;
  WeightedAtomSpace atom_space;  // meaningful only when kind == atoms

  static Space unit_interval() { return Space{}; }
  static Space atoms(WeightedAtomSpace s) {
    Space sp;
    sp.kind = Kind::atoms;
    sp.atom_space = std::move(s);
    return sp;
  }

  Set empty_set() const;
  Set full_set() const;
  Rational measure_of(const Set& s) const;
  bool is_uniform() const {
    return kind == Kind::atoms && atom_space.is_uniform();
  }
};

/// Exact set algebra over the Set variant.
/// Throws MixedSpaceKinds when the operands live over different space kinds.
Set set_algebra(const Set& a, const Set& b, SetOp op);

Set set_union(const Set& a, const Set& b);
Set set_intersect(const Set& a, const Set& b);
Set set_difference(const Set& a, const Set& b);
Set set_symdiff(const Set& a, const Set& b);

bool set_empty(const Set& s);
bool is_subset(const Set& a, const Set& b);
Set set_complement(const Set& s);

}  // namespace ergo
