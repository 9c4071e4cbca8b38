#include <doctest.h>

#include "ergo/folner.hpp"
#include "ergo/scenario.hpp"
#include "support/models.hpp"

using namespace ergo;
using namespace ergo::testing;

TEST_CASE("is_folner on the cyclic model") {
  ActionModel act = cyclic_rotation(8);
  Set y = act.space().full_set();
  Set none = act.space().empty_set();

  FolnerAudit run4 = is_folner(act, y, none, Rational(1, 2), StepSpec::ball(1),
                               AtomSet::of(8, {2, 3, 4, 5}));
  CHECK(run4.folner);
  CHECK(run4.boundary == Rational(1, 4));
  CHECK(run4.threshold == Rational(1, 4));

  FolnerAudit run2 = is_folner(act, y, none, Rational(1, 2), StepSpec::ball(1),
                               AtomSet::of(8, {2, 3}));
  CHECK(!run2.folner);
  CHECK(run2.boundary == Rational(1, 4));
  CHECK(run2.threshold == Rational(1, 8));

  FolnerAudit empty = is_folner(act, y, none, Rational(1, 2), StepSpec::ball(1), AtomSet(8));
  CHECK(empty.folner);
  CHECK(empty.boundary == 0);
}

TEST_CASE("is_folner validates containment") {
  ActionModel act = cyclic_rotation(8);
  Set z = AtomSet::of(8, {0});
  CHECK_THROWS_AS(is_folner(act, act.space().full_set(), z, Rational(1, 2), StepSpec::ball(1),
                            AtomSet::of(8, {0, 1})),
                  NotASubset);
}

TEST_CASE("maximal folner on Z/8 finds the half run") {
  ActionModel act = cyclic_rotation(8);
  FolnerCertificate cert = maximal_folner(act, act.space().full_set(),
                                          act.space().empty_set(), Rational(1, 2),
                                          StepSpec::ball(1));
  CHECK(cert.nu_f == Rational(1, 2));
  CHECK(cert.cells == std::vector<int>{0, 1, 2, 3});
  CHECK(cert.boundary_measure == Rational(1, 4));
  CHECK(cert.maximal);
  // certificate passes its own audit
  FolnerAudit audit = is_folner(act, cert.y, cert.z, cert.epsilon, cert.step, cert.f);
  CHECK(audit.folner);
}

TEST_CASE("generous epsilon lets the folner set reach half measure") {
  ActionModel act = cyclic_rotation(10);
  FolnerCertificate cert = maximal_folner(act, act.space().full_set(),
                                          act.space().empty_set(), Rational(2),
                                          StepSpec::ball(1));
  CHECK(cert.nu_f == Rational(1, 2));
  CHECK(cert.maximal);
}

TEST_CASE("epsilon zero on an ergodic block leaves only the empty set") {
  ScenarioSpec spec;
  spec.name = "sl2-torus";
  spec.p = 3;
  ActionModel act = scenario_build(spec).action;
  FolnerCertificate cert = maximal_folner(act, act.space().full_set(),
                                          act.space().empty_set(), Rational(0),
                                          StepSpec::ball(1));
  CHECK(cert.nu_f == 0);
  CHECK(cert.cells.empty());
  CHECK(cert.maximal);
}

TEST_CASE("epsilon zero on an invariant block returns the block") {
  ActionModel act = two_invariant_blocks(3, 5);
  FolnerCertificate cert = maximal_folner(act, act.space().full_set(),
                                          act.space().empty_set(), Rational(0),
                                          StepSpec::ball(1));
  CHECK(cert.nu_f == Rational(3, 8));
  CHECK(cert.cells == std::vector<int>{0, 1, 2});
}

TEST_CASE("maximal folner relative to an excluded set") {
  ActionModel act = cyclic_rotation(8);
  Set z = AtomSet::of(8, {0, 1});
  FolnerCertificate cert = maximal_folner(act, act.space().full_set(), z, Rational(1, 2),
                                          StepSpec::ball(1));
  CHECK(is_subset(cert.f, set_difference(act.space().full_set(), z)));
  FolnerAudit audit = is_folner(act, cert.y, cert.z, cert.epsilon, cert.step, cert.f);
  CHECK(audit.folner);
  CHECK(cert.maximal);
}

TEST_CASE("complement expansion holds for maximal certificates") {
  for (auto act : {cyclic_rotation(8), cyclic_rotation(12), dihedral_cycle(9),
                   random_permutation_action(10, 2, 31)}) {
    for (const Rational& eps : {Rational(1, 4), Rational(1, 2)}) {
      for (int k : {1, 2}) {
        FolnerCertificate cert = maximal_folner(act, act.space().full_set(),
                                                act.space().empty_set(), eps,
                                                StepSpec::ball(k));
        REQUIRE(cert.maximal);
        ComplementReport rep = complement_expansion_check(act, cert);
        CHECK(rep.pass);
      }
    }
  }
}

TEST_CASE("full-measure folner sets pass the complement check vacuously") {
  ActionModel act = cyclic_rotation(10);
  FolnerCertificate cert = maximal_folner(act, act.space().full_set(),
                                          act.space().empty_set(), Rational(2),
                                          StepSpec::ball(1));
  REQUIRE(cert.nu_f == Rational(1, 2));
  ComplementReport rep = complement_expansion_check(act, cert);
  CHECK(rep.pass);
  CHECK(rep.checked == 0);
}

TEST_CASE("a planted non-maximal set is reported with a witness") {
  ActionModel act = cyclic_rotation(8);
  FolnerCertificate fake;
  fake.f = AtomSet::of(8, {0, 2});
  fake.y = act.space().full_set();
  fake.z = act.space().empty_set();
  fake.epsilon = Rational(1, 2);
  fake.step = StepSpec::ball(1);
  fake.nu_f = Rational(1, 4);
  fake.cells = {0, 2};
  fake.maximal = false;
  CHECK_THROWS_AS(complement_expansion_check(act, fake), NotMaximal);
  fake.maximal = true;  // planted claim
  ComplementReport rep = complement_expansion_check(act, fake);
  CHECK(!rep.pass);
  REQUIRE(!rep.violations.empty());
  // atom 1 is fenced in by F = {0, 2}: its boundary leaves the window
  CHECK(rep.violations[0].cells == std::vector<int>{0});
}

TEST_CASE("explicit symmetric sets work as the step operator") {
  ActionModel act = cyclic_rotation(8);
  std::vector<GroupElement> s = generator_set(act);
  FolnerCertificate cert = maximal_folner(act, act.space().full_set(),
                                          act.space().empty_set(), Rational(1, 2),
                                          StepSpec::set(s));
  CHECK(cert.nu_f == Rational(1, 2));
  std::vector<GroupElement> asym = {act.group().generators()[0].element};
  CHECK_THROWS_AS(maximal_folner(act, act.space().full_set(), act.space().empty_set(),
                                 Rational(1, 2), StepSpec::set(asym)),
                  AsymmetricGeneratingSet);
}
