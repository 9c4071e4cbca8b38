#include "ergo/measurable_set.hpp"

#include "ergo/errors.hpp"

namespace ergo {

Set Space::empty_set() const {
  if (kind == Kind::unit_interval) return IntervalSet{};
  return AtomSet(atom_space.atom_count);
}

Set Space::full_set() const {
  if (kind == Kind::unit_interval) return IntervalSet::full();
  return AtomSet::full(atom_space.atom_count);
}

Rational Space::measure_of(const Set& s) const {
  if (kind == Kind::unit_interval) {
    if (!std::holds_alternative<IntervalSet>(s))
      throw MixedSpaceKinds("atom set measured against the unit interval");
    return std::get<IntervalSet>(s).measure();
  }
  if (!std::holds_alternative<AtomSet>(s))
    throw MixedSpaceKinds("interval set measured against an atom space");
  return measure(std::get<AtomSet>(s), atom_space);
}

Set set_algebra(const Set& a, const Set& b, SetOp op) {
  switch (op) {
    case SetOp::unite: return set_union(a, b);
    case SetOp::intersect: return set_intersect(a, b);
    case SetOp::difference: return set_difference(a, b);
    case SetOp::symdiff: return set_symdiff(a, b);
  }
  throw InvalidRange("unknown set operation");
}

namespace {

template <class F>
Set binop(const Set& a, const Set& b, F f) {
  if (std::holds_alternative<IntervalSet>(a) && std::holds_alternative<IntervalSet>(b))
    return f(std::get<IntervalSet>(a), std::get<IntervalSet>(b));
  if (std::holds_alternative<AtomSet>(a) && std::holds_alternative<AtomSet>(b))
    return f(std::get<AtomSet>(a), std::get<AtomSet>(b));
  throw MixedSpaceKinds("set algebra over mixed space kinds");
}

}  // namespace

Set set_union(const Set& a, const Set& b) {
  return binop(a, b, [](const auto& x, const auto& y) -> Set { return set_union(x, y); });
}
Set set_intersect(const Set& a, const Set& b) {
  return binop(a, b, [](const auto& x, const auto& y) -> Set { return set_intersect(x, y); });
}
Set set_difference(const Set& a, const Set& b) {
  return binop(a, b, [](const auto& x, const auto& y) -> Set { return set_difference(x, y); });
}
Set set_symdiff(const Set& a, const Set& b) {
  return binop(a, b, [](const auto& x, const auto& y) -> Set { return set_symdiff(x, y); });
}

bool set_empty(const Set& s) {
  return std::visit([](const auto& x) { return x.empty(); }, s);
}

bool is_subset(const Set& a, const Set& b) {
  if (std::holds_alternative<IntervalSet>(a) && std::holds_alternative<IntervalSet>(b))
    return is_subset(std::get<IntervalSet>(a), std::get<IntervalSet>(b));
  if (std::holds_alternative<AtomSet>(a) && std::holds_alternative<AtomSet>(b))
    return is_subset(std::get<AtomSet>(a), std::get<AtomSet>(b));
  throw MixedSpaceKinds("subset test over mixed space kinds");
}

Set set_complement(const Set& s) {
  return std::visit([](const auto& x) -> Set { return x.complement(); }, s);
}

}  // namespace ergo
