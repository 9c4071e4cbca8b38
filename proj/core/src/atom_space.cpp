#include "ergo/atom_space.hpp"

#include "ergo/errors.hpp"

namespace ergo {

WeightedAtomSpace WeightedAtomSpace::uniform(int n) {
  if (n <= 0) throw InvalidModel("atom space needs a positive atom count");
  WeightedAtomSpace s;
  s.atom_count = n;
  s.weights.assign(n, Rational(1, n));
  return s;
}

WeightedAtomSpace WeightedAtomSpace::with_weights(std::vector<Rational> w) {
  if (w.empty()) throw InvalidModel("atom space needs a positive atom count");
  Rational sum = 0;
  for (const auto& x : w) {
    if (x <= 0) throw InvalidModel("atom weights must be positive");
    sum += x;
  }
  if (sum != 1) throw InvalidModel("atom weights must sum to 1, got " + format_rational(sum));
  WeightedAtomSpace s;
  s.atom_count = static_cast<int>(w.size());
  s.weights = std::move(w);
  return s;
}

bool WeightedAtomSpace::is_uniform() const {
  for (const auto& w : weights)
    if (w != weights[0]) return false;
  return true;
}

AtomSet AtomSet::of(int atom_count, const std::vector<int>& atoms) {
  AtomSet s(atom_count);
  for (int a : atoms) {
    if (a < 0 || a >= atom_count) throw InvalidModel("atom index out of range");
    s.bits_.set(a);
  }
  return s;
}

AtomSet AtomSet::full(int atom_count) {
  AtomSet s(atom_count);
  s.bits_.set();
  return s;
}

AtomSet AtomSet::from_mask(int atom_count, unsigned long long mask) {
  AtomSet s(atom_count);
  for (int i = 0; i < atom_count && i < 64; ++i)
    if (mask >> i & 1ULL) s.bits_.set(i);
  return s;
}

std::vector<int> AtomSet::atoms() const {
  std::vector<int> out;
  for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos; i = bits_.find_next(i))
    out.push_back(static_cast<int>(i));
  return out;
}

AtomSet AtomSet::complement() const {
  AtomSet s = *this;
  s.bits_.flip();
  return s;
}

Rational measure(const AtomSet& s, const WeightedAtomSpace& space) {
  if (s.atom_count() != space.atom_count)
    throw MixedSpaceKinds("atom set does not match the space");
  Rational m = 0;
  for (int a : s.atoms()) m += space.weights[a];
  return m;
}

static void check_same(const AtomSet& a, const AtomSet& b) {
  if (a.atom_count() != b.atom_count())
    throw MixedSpaceKinds("atom sets over different spaces");
}

AtomSet set_union(const AtomSet& a, const AtomSet& b) {
  check_same(a, b);
  AtomSet s = a;
  s.bits() |= b.bits();
  return s;
}

AtomSet set_intersect(const AtomSet& a, const AtomSet& b) {
  check_same(a, b);
  AtomSet s = a;
  s.bits() &= b.bits();
  return s;
}

AtomSet set_difference(const AtomSet& a, const AtomSet& b) {
  check_same(a, b);
  AtomSet s = a;
  s.bits() -= b.bits();
  return s;
}

AtomSet set_symdiff(const AtomSet& a, const AtomSet& b) {
  check_same(a, b);
  AtomSet s = a;
  s.bits() ^= b.bits();
  return s;
}

}  // namespace ergo
