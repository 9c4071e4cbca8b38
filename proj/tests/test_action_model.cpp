#include <doctest.h>

#include <random>

#include "ergo/scenario.hpp"
#include "support/models.hpp"
#include "support/oracles.hpp"

using namespace ergo;
using namespace ergo::testing;

namespace {

IntervalSet iv(const Rational& lo, const Rational& hi) {
  return IntervalSet::from_raw({{lo, hi}});
}

AtomSet random_atom_set(int n, std::mt19937_64& rng) {
  AtomSet s(n);
  for (int i = 0; i < n; ++i)
    if (rng() & 1) s.set(i);
  return s;
}

}  // namespace

TEST_CASE("rotation transports intervals exactly") {
  Scenario rot = scenario_build({.name = "rotation", .angle = Rational(1, 4)});
  GroupElement t = rot.action.group().generators()[0].element;
  Set img = rot.action.transport(t, iv(0, Rational(1, 4)));
  CHECK(std::get<IntervalSet>(img) == iv(Rational(1, 4), Rational(1, 2)));
}

TEST_CASE("atom permutation transport") {
  ActionModel act = cyclic_rotation(4);
  GroupElement g = act.group().generators()[0].element;
  Set img = act.transport(g, AtomSet::of(4, {0}));
  CHECK(std::get<AtomSet>(img) == AtomSet::of(4, {1}));
}

TEST_CASE("composed rotation: one third applied twice") {
  Scenario rot = scenario_build({.name = "rotation", .angle = Rational(1, 3)});
  GroupElement two{GroupKind::integer_lattice, {2}};
  Set img = rot.action.transport(two, iv(0, Rational(1, 3)));
  CHECK(std::get<IntervalSet>(img) == iv(Rational(2, 3), Rational(1)));
}

TEST_CASE("transport composes: g.(h.A) = (gh).A exactly") {
  ActionModel act = random_permutation_action(9, 2, 42);
  auto ball = act.group().ball(2);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<size_t> pick(0, ball.size() - 1);
  for (int trial = 0; trial < 40; ++trial) {
    const auto& g = ball[pick(rng)].first;
    const auto& h = ball[pick(rng)].first;
    Set a = random_atom_set(9, rng);
    Set lhs = act.transport(g, act.transport(h, a));
    Set rhs = act.transport(act.group().multiply(g, h), a);
    CHECK(lhs == rhs);
  }
  Set a = random_atom_set(9, rng);
  CHECK(act.transport(act.group().identity(), a) == a);
}

TEST_CASE("k-neighborhood on the cyclic model") {
  ActionModel act = cyclic_rotation(8);
  Set a = AtomSet::of(8, {3, 4, 5, 6});
  Set nb = act.k_neighborhood(1, a);
  CHECK(std::get<AtomSet>(nb) == AtomSet::of(8, {2, 3, 4, 5, 6, 7}));
  CHECK(act.space().measure_of(nb) == Rational(3, 4));
  CHECK(act.k_neighborhood(0, a) == a);
}

TEST_CASE("k-neighborhood of a half interval under the 1/8 rotation") {
  Scenario rot = scenario_build({.name = "rotation", .angle = Rational(1, 8)});
  Set a = iv(0, Rational(1, 2));
  Set nb = rot.action.k_neighborhood(1, a);
  CHECK(rot.action.space().measure_of(nb) == Rational(3, 4));
  IntervalSet expect = set_union(iv(0, Rational(5, 8)), iv(Rational(7, 8), 1));
  CHECK(std::get<IntervalSet>(nb) == expect);
}

TEST_CASE("k-neighborhood agrees with the ball-union oracle") {
  std::mt19937_64 rng(77);
  for (auto act : {cyclic_rotation(10), random_permutation_action(8, 2, 3),
                   dihedral_cycle(7)}) {
    for (int trial = 0; trial < 20; ++trial) {
      Set a = random_atom_set(act.space().atom_space.atom_count, rng);
      for (int k = 0; k <= 3; ++k)
        CHECK(act.k_neighborhood(k, a) == oracle_neighborhood(act, k, a));
    }
  }
}

TEST_CASE("boundary examples") {
  ActionModel act = cyclic_rotation(8);
  std::vector<GroupElement> s = generator_set(act);
  Set bd = act.boundary(s, AtomSet::of(8, {0, 1, 2}));
  CHECK(std::get<AtomSet>(bd) == AtomSet::of(8, {3, 7}));
  CHECK(act.space().measure_of(bd) == Rational(1, 4));
  // invariant full space has empty boundary
  CHECK(set_empty(act.boundary(s, act.space().full_set())));
}

TEST_CASE("boundary of an interval under quarter rotations") {
  Scenario rot = scenario_build({.name = "rotation", .angle = Rational(1, 4)});
  std::vector<GroupElement> s = generator_set(rot.action);
  Set bd = rot.action.boundary(s, iv(0, Rational(1, 4)));
  IntervalSet expect = set_union(iv(Rational(1, 4), Rational(1, 2)), iv(Rational(3, 4), 1));
  CHECK(std::get<IntervalSet>(bd) == expect);
  CHECK(rot.action.space().measure_of(bd) == Rational(1, 2));
}

TEST_CASE("boundary validates symmetry") {
  ActionModel act = cyclic_rotation(8);
  std::vector<GroupElement> s = {act.group().generators()[0].element};  // +1 only
  CHECK_THROWS_AS(act.boundary(s, AtomSet::of(8, {0})), AsymmetricGeneratingSet);
}

TEST_CASE("empty input set stays empty through every operation") {
  ActionModel act = cyclic_rotation(6);
  Set none = act.space().empty_set();
  CHECK(set_empty(act.k_neighborhood(2, none)));
  CHECK(set_empty(act.boundary(generator_set(act), none)));
  CHECK(set_empty(act.transport(act.group().generators()[0].element, none)));
}

TEST_CASE("transport ratios: measure-preserving models are constant 1") {
  ActionModel act = cyclic_rotation(8);
  CHECK(act.is_measure_preserving());
  for (const auto& [g, len] : act.group().ball(3)) {
    TransportRatio r = act.transport_ratio(g);
    CHECK(r.sup() == 1);
    for (const auto& x : r.per_atom) CHECK(x == 1);
  }
}

TEST_CASE("transport ratios are weight quotients on atoms") {
  // swap on weights (1/3, 2/3): mass moves 1/3 -> 2/3 and back
  GroupModel g = GroupModel::finite_cyclic(2);
  std::vector<GeneratorMap> maps(1);
  maps[0].perm = {1, 0};
  ActionModel act(std::move(g),
                  Space::atoms(WeightedAtomSpace::with_weights({Rational(1, 3), Rational(2, 3)})),
                  std::move(maps));
  TransportRatio r = act.transport_ratio(act.group().generators()[0].element);
  CHECK(r.at_atom(0) == Rational(2));
  CHECK(r.at_atom(1) == Rational(1, 2));
  CHECK(!act.is_measure_preserving());
}

TEST_CASE("transport ratios follow slopes on interval pieces") {
  // x -> x/2 on [0,1/2), x -> 3/2 x - 1/2 elsewhere: mass ratios 1/2 and 3/2
  PiecewiseAffine f = PiecewiseAffine::from_pieces(
      {{Rational(0), Rational(1, 2), Rational(1, 2), Rational(0)},
       {Rational(1, 2), Rational(1), Rational(3, 2), Rational(-1, 2)}});
  GroupModel g = GroupModel::integer_lattice(1);
  std::vector<GeneratorMap> maps(2);
  maps[0].interval_map = f;
  maps[1].interval_map = f.inverted();
  ActionModel act(std::move(g), Space::unit_interval(), std::move(maps));
  TransportRatio r = act.transport_ratio(act.group().generators()[0].element);
  REQUIRE(r.per_piece.size() == 2);
  CHECK(r.per_piece[0].second == Rational(1, 2));
  CHECK(r.per_piece[1].second == Rational(3, 2));
  CHECK(r.sup() == Rational(3, 2));
  CHECK(!act.is_measure_preserving());
}

TEST_CASE("cocycle identity for transport ratios on atoms") {
  ActionModel act = weighted_cycle(7, 99);
  auto ball = act.group().ball(2);
  for (const auto& [g, gl] : ball)
    for (const auto& [h, hl] : ball) {
      TransportRatio rg = act.transport_ratio(g);
      TransportRatio rh = act.transport_ratio(h);
      TransportRatio rgh = act.transport_ratio(act.group().multiply(g, h));
      std::vector<int> perm_h = act.element_permutation(h);
      for (int x = 0; x < 7; ++x)
        CHECK(rgh.at_atom(x) == rg.at_atom(perm_h[x]) * rh.at_atom(x));
    }
}

TEST_CASE("null sets transport to null sets, measure preserved on balls") {
  std::mt19937_64 rng(123);
  ActionModel act = cyclic_rotation(9);
  for (int trial = 0; trial < 100; ++trial) {
    Set a = random_atom_set(9, rng);
    Rational nu = act.space().measure_of(a);
    for (const auto& [g, len] : act.group().ball(3))
      CHECK(act.space().measure_of(act.transport(g, a)) == nu);
  }
}

TEST_CASE("lemma relation: complement boundary sits inside the set boundary") {
  // D = X \ B_k.A gives B_k.D \ D inside B_k.A \ A, checked exhaustively
  ActionModel act = random_permutation_action(12, 2, 8);
  for (int k = 1; k <= 2; ++k) {
    for (unsigned long long mask = 0; mask < (1ULL << 12); ++mask) {
      AtomSet a = AtomSet::from_mask(12, mask);
      Set nb = act.k_neighborhood(k, a);
      Set d = set_complement(nb);
      Set lhs = set_difference(act.k_neighborhood(k, d), d);
      Set rhs = set_difference(nb, Set{a});
      CHECK(is_subset(lhs, rhs));
    }
  }
}

TEST_CASE("interval maps validate bijectivity") {
  CHECK_THROWS_AS(PiecewiseAffine::from_pieces(
                      {{Rational(0), Rational(1, 2), Rational(1), Rational(0)}}),
                  InvalidModel);
  CHECK_THROWS_AS(PiecewiseAffine::from_pieces(
                      {{Rational(0), Rational(1), Rational(1, 2), Rational(0)}}),
                  InvalidModel);
}

TEST_CASE("generator maps validate against their inverse generator") {
  GroupModel g = GroupModel::finite_cyclic(4);
  std::vector<GeneratorMap> maps(2);
  maps[0].perm = {1, 2, 3, 0};
  maps[1].perm = {1, 2, 3, 0};  // not the inverse
  CHECK_THROWS_AS(
      ActionModel(std::move(g), Space::atoms(WeightedAtomSpace::uniform(4)), std::move(maps)),
      InvalidModel);
}
