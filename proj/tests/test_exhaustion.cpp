#include <doctest.h>

#include "ergo/exhaustion.hpp"
#include "ergo/scenario.hpp"
#include "support/models.hpp"

using namespace ergo;
using namespace ergo::testing;

namespace {

Scenario default_schmidt() {
  ScenarioSpec spec;
  spec.name = "schmidt-composite";
  spec.block_sizes = {6, 6, 6};
  spec.block_ratio = Rational(1, 8);
  return scenario_build(spec);
}

}  // namespace

TEST_CASE("verify_domain on the cyclic model") {
  ActionModel act = cyclic_rotation(8);
  Set y = act.space().full_set();
  DomainCheck ok = verify_domain(act, y, Rational(2, 5), StepSpec::ball(1));
  CHECK(ok.ok);
  CHECK(ok.min_ratio == Rational(3, 2));
  DomainCheck bad = verify_domain(act, y, Rational(3, 5), StepSpec::ball(1));
  CHECK(!bad.ok);
  CHECK(bad.witness == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("verify_domain flags invariant obstructions") {
  ActionModel act = two_invariant_blocks(3, 5);
  DomainCheck check = verify_domain(act, act.space().full_set(), Rational(1, 10),
                                    StepSpec::ball(1));
  CHECK(!check.ok);
  CHECK(check.min_ratio == Rational(1));
  CHECK(check.witness == std::vector<int>{0, 1, 2});  // the smaller block
}

TEST_CASE("verify_domain respects the cell cap") {
  ActionModel act = cyclic_rotation(12);
  CHECK_THROWS_AS(verify_domain(act, act.space().full_set(), Rational(1, 2), StepSpec::ball(1),
                                nullptr, 8),
                  TooLarge);
}

TEST_CASE("build_exhaustion on the chained-block model verifies every stage") {
  Scenario scenario = default_schmidt();
  std::vector<Set> tails = schmidt_tails(scenario, {6, 6, 6});
  const Rational c(1, 2);
  ExhaustionReport report =
      build_exhaustion(scenario.action, scenario.action.space().full_set(), c, tails);
  CHECK(report.all_verified());
  CHECK(!report.stages.empty());
  Rational prev = -1;
  for (const auto& st : report.stages) {
    CHECK(st.f_bound_ok);
    CHECK(st.ybar_verified);
    CHECK(st.yn_verified);
    if (st.nu_z > 0) CHECK(st.folner.nu_f < Rational(2) / c * st.nu_z);
    CHECK(st.nu_yn >= prev);  // monotone union
    prev = st.nu_yn;
  }
  // the exhaustion reaches full measure once the tails empty out
  CHECK(report.stages.back().nu_yn == 1);
}

TEST_CASE("build_exhaustion with empty excisions reproduces the plain pipeline") {
  ScenarioSpec spec;
  spec.name = "sl2-torus";
  spec.p = 3;
  ActionModel act = scenario_build(spec).action;
  std::vector<Set> z = {act.space().empty_set()};
  ExhaustionReport report =
      build_exhaustion(act, act.space().full_set(), Rational(1, 5), z);
  CHECK(report.n0 == 0);
  REQUIRE(report.stages.size() == 1);
  CHECK(report.stages[0].folner.nu_f == 0);  // the sole excision is the folner set
  CHECK(report.all_verified());
  CHECK(report.stages[0].nu_yn == 1);
}

TEST_CASE("build_exhaustion rejects oversized thresholds") {
  ActionModel act = cyclic_rotation(8);
  std::vector<Set> z = {AtomSet::of(8, {4, 5, 6, 7})};  // nu = 1/2 above any threshold
  CHECK_THROWS_AS(
      build_exhaustion(act, act.space().full_set(), Rational(1, 2), z), NoValidStage);
}

TEST_CASE("build_exhaustion validates the Z sequence") {
  ActionModel act = cyclic_rotation(8);
  std::vector<Set> not_nested = {AtomSet::of(8, {7}), AtomSet::of(8, {6})};
  CHECK_THROWS_AS(
      build_exhaustion(act, act.space().full_set(), Rational(1, 2), not_nested), InvalidRange);
  CHECK_THROWS_AS(
      build_exhaustion(act, act.space().full_set(), Rational(3, 2), not_nested), InvalidRange);
}

TEST_CASE("union of large stage domains verifies at some radius") {
  Scenario scenario = default_schmidt();
  std::vector<Set> tails = schmidt_tails(scenario, {6, 6, 6});
  ExhaustionReport report = build_exhaustion(scenario.action,
                                             scenario.action.space().full_set(),
                                             Rational(1, 2), tails);
  const Rational t = 1;
  for (const auto& st : report.stages) {
    if (4 * st.nu_ybar > 3 * t) {
      CHECK(st.yn_verified);
      CHECK(st.k_union >= 1);
    }
  }
}

TEST_CASE("S-version exhaustion on the rotation with planted tails") {
  ActionModel act = cyclic_rotation(16);
  std::vector<GroupElement> s = generator_set(act);
  ProfileRequest req;
  req.alphas = {Rational(1, 2), Rational(1, 3), Rational(1, 4), Rational(1, 5), Rational(1, 6)};
  req.ks = {1};
  ExpansionProfile prof = expansion_profile(act, req);
  std::vector<Set> tails = {AtomSet::of(16, {13, 14, 15}), AtomSet::of(16, {14, 15}),
                            AtomSet::of(16, {15}), AtomSet(16)};
  ExhaustionReport report = build_exhaustion_s(act, act.space().full_set(), s, prof, tails,
                                               nullptr, /*validate_profile=*/true);
  CHECK(report.s_version);
  CHECK(report.all_verified());
  for (const auto& pc : report.profile_checks) CHECK(pc.valid);
  int prev_m = 0;
  for (const auto& st : report.stages) {
    CHECK(st.m_n >= prev_m);  // nondecreasing schedule
    prev_m = st.m_n;
    CHECK(st.c_union > 0);
  }
}

TEST_CASE("a planted overclaimed profile fails validation with a witness") {
  ActionModel act = cyclic_rotation(16);
  std::vector<GroupElement> s = generator_set(act);
  ExpansionProfile lie;
  lie.entries.push_back({Rational(1, 2), 1, Rational(10), {}});  // far above the truth
  lie.entries.push_back({Rational(1, 4), 1, Rational(10), {}});
  std::vector<Set> tails = {AtomSet::of(16, {15}), AtomSet(16)};
  ExhaustionReport report = build_exhaustion_s(act, act.space().full_set(), s, lie, tails,
                                               nullptr, /*validate_profile=*/true);
  bool any_invalid = false;
  for (const auto& pc : report.profile_checks) any_invalid = any_invalid || !pc.valid;
  CHECK(any_invalid);
  for (const auto& pc : report.profile_checks)
    if (!pc.valid) CHECK(!pc.witness.empty());
}
