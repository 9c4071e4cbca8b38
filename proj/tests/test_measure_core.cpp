#include <doctest.h>

#include <random>

#include "ergo/measurable_set.hpp"

using namespace ergo;

namespace {

IntervalSet iv(std::initializer_list<std::pair<long long, long long>> halves) {
  // pairs of (num, den) endpoints, consumed two at a time
  std::vector<std::pair<Rational, Rational>> raw;
  auto it = halves.begin();
  while (it != halves.end()) {
    Rational lo(it->first, it->second);
    ++it;
    Rational hi(it->first, it->second);
    ++it;
    raw.push_back({lo, hi});
  }
  return IntervalSet::from_raw(raw);
}

IntervalSet random_interval_set(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> den_d(2, 16), cnt_d(1, 4);
  std::vector<std::pair<Rational, Rational>> raw;
  int cnt = cnt_d(rng);
  for (int i = 0; i < cnt; ++i) {
    int den = den_d(rng);
    std::uniform_int_distribution<int> num_d(0, den - 1);
    int a = num_d(rng);
    int b = num_d(rng);
    if (a == b) b = a + 1;
    if (a > b) std::swap(a, b);
    raw.push_back({Rational(a, den), Rational(b, den)});
  }
  return IntervalSet::from_raw(raw);
}

}  // namespace

TEST_CASE("normalize merges adjacent and overlapping intervals") {
  CHECK(iv({{0, 1}, {1, 2}, {1, 2}, {1, 1}}) == iv({{0, 1}, {1, 1}}));
  CHECK(iv({{1, 4}, {3, 4}, {1, 2}, {1, 1}}) == iv({{1, 4}, {1, 1}}));
  IntervalSet third = iv({{1, 3}, {2, 3}});
  CHECK(third.parts().size() == 1);
  CHECK(third.measure() == Rational(1, 3));
}

TEST_CASE("normalize rejects malformed intervals") {
  CHECK_THROWS_AS(IntervalSet::from_raw({{Rational(1, 2), Rational(1, 2)}}), MalformedInterval);
  CHECK_THROWS_AS(IntervalSet::from_raw({{Rational(3, 4), Rational(1, 4)}}), MalformedInterval);
  CHECK_THROWS_AS(IntervalSet::from_raw({{Rational(-1, 4), Rational(1, 4)}}),
                  MalformedInterval);
  CHECK_THROWS_AS(IntervalSet::from_raw({{Rational(1, 2), Rational(5, 4)}}), MalformedInterval);
}

TEST_CASE("normalize is idempotent") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    IntervalSet a = random_interval_set(rng);
    std::vector<std::pair<Rational, Rational>> raw;
    for (const auto& p : a.parts()) raw.push_back({p.lo, p.hi});
    CHECK(IntervalSet::from_raw(raw) == a);
  }
}

TEST_CASE("symmetric difference of overlapping halves") {
  IntervalSet a = iv({{0, 1}, {1, 2}});
  IntervalSet b = iv({{1, 4}, {3, 4}});
  IntervalSet d = set_symdiff(a, b);
  CHECK(d == iv({{0, 1}, {1, 4}, {1, 2}, {3, 4}}));
  CHECK(d.measure() == Rational(1, 2));
}

TEST_CASE("symmetric difference identities") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 50; ++i) {
    IntervalSet a = random_interval_set(rng);
    IntervalSet b = random_interval_set(rng);
    CHECK(set_symdiff(a, a).empty());
    Rational lhs = set_symdiff(a, b).measure();
    Rational rhs = set_difference(a, b).measure() + set_difference(b, a).measure();
    CHECK(lhs == rhs);
  }
}

TEST_CASE("measure is additive: inclusion-exclusion on random sets") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    IntervalSet a = random_interval_set(rng);
    IntervalSet b = random_interval_set(rng);
    CHECK(set_union(a, b).measure() + set_intersect(a, b).measure() ==
          a.measure() + b.measure());
  }
}

TEST_CASE("complement measure") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    IntervalSet a = random_interval_set(rng);
    CHECK(a.complement().measure() == 1 - a.measure());
    CHECK(set_intersect(a, a.complement()).empty());
  }
}

TEST_CASE("atom sets and weighted measure") {
  WeightedAtomSpace space = WeightedAtomSpace::with_weights(
      {Rational(1, 2), Rational(1, 4), Rational(1, 4)});
  AtomSet s = AtomSet::of(3, {0, 1});
  CHECK(measure(s, space) == Rational(3, 4));
  CHECK(measure(AtomSet(3), space) == 0);

  AtomSet a = AtomSet::of(4, {0, 1});
  AtomSet b = AtomSet::of(4, {1, 2});
  CHECK(set_intersect(a, b) == AtomSet::of(4, {1}));
  CHECK(set_union(a, b) == AtomSet::of(4, {0, 1, 2}));
  CHECK(set_symdiff(a, b) == AtomSet::of(4, {0, 2}));
}

TEST_CASE("weighted atom space validation") {
  CHECK_THROWS_AS(WeightedAtomSpace::with_weights({Rational(1, 2), Rational(1, 4)}),
                  InvalidModel);
  CHECK_THROWS_AS(WeightedAtomSpace::with_weights({Rational(1, 2), Rational(-1, 2), Rational(1)}),
                  InvalidModel);
}

TEST_CASE("set algebra rejects mixed space kinds") {
  Set a = IntervalSet::full();
  Set b = AtomSet::of(4, {0});
  CHECK_THROWS_AS(set_algebra(a, b, SetOp::unite), MixedSpaceKinds);
  CHECK_THROWS_AS(set_algebra(b, a, SetOp::intersect), MixedSpaceKinds);
}

TEST_CASE("space measure dispatch") {
  Space interval = Space::unit_interval();
  CHECK(interval.measure_of(iv({{0, 1}, {1, 3}})) == Rational(1, 3));
  Space atoms = Space::atoms(WeightedAtomSpace::uniform(8));
  CHECK(atoms.measure_of(AtomSet::of(8, {0, 3, 5})) == Rational(3, 8));
  CHECK_THROWS_AS(atoms.measure_of(IntervalSet::full()), MixedSpaceKinds);
}
