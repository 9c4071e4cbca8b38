#pragma once

#include <boost/dynamic_bitset.hpp>

#include <vector>

#include "ergo/rational.hpp"

namespace ergo {

/// Finite surrogate of a probability space: atoms with positive rational
/// weights summing to 1.
struct WeightedAtomSpace {
  int atom_count = 0;
  std::vector<Rational> weights;

  static WeightedAtomSpace uniform(int n);
  static WeightedAtomSpace with_weights(std::vector<Rational> w);

  bool is_uniform() const;
};

/// Bit-indexed subset of the atoms of a WeightedAtomSpace.
class AtomSet {
 public:
  AtomSet() = default;
  explicit AtomSet(int atom_count) : bits_(atom_count) {}

  static AtomSet of(int atom_count, const std::vector<int>& atoms);
  static AtomSet full(int atom_count);
  static AtomSet from_mask(int atom_count, unsigned long long mask);

  int atom_count() const { return static_cast<int>(bits_.size()); }
  bool empty() const { return bits_.none(); }
  bool test(int i) const { return bits_.test(i); }
  void set(int i, bool v = true) { bits_.set(i, v); }
  size_t popcount() const { return bits_.count(); }

  std::vector<int> atoms() const;
  AtomSet complement() const;

  const boost::dynamic_bitset<>& bits() const { return bits_; }
  boost::dynamic_bitset<>& bits() { return bits_; }

  bool operator==(const AtomSet& o) const { return bits_ == o.bits_; }

 private:
  boost::dynamic_bitset<> bits_;
};

Rational measure(const AtomSet& s, const WeightedAtomSpace& space);

AtomSet set_union(const AtomSet& a, const AtomSet& b);
AtomSet set_intersect(const AtomSet& a, const AtomSet& b);
AtomSet set_difference(const AtomSet& a, const AtomSet& b);
AtomSet set_symdiff(const AtomSet& a, const AtomSet& b);

inline bool is_subset(const AtomSet& a, const AtomSet& b) {
  return a.bits().is_subset_of(b.bits());
}

}  // namespace ergo
