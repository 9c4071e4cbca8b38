#include <doctest.h>

#include <cmath>

#include "ergo/expansion.hpp"
#include "ergo/spectral.hpp"
#include "support/models.hpp"

using namespace ergo;
using namespace ergo::testing;

TEST_CASE("Z/4 rotation has lambda2 = 4 over the full space") {
  ActionModel act = cyclic_rotation(4);
  SpectralReport rep = local_spectral_gap(act, act.space().full_set(), 1);
  CHECK(rep.lambda2 == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(rep.kappa_upper == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rep.method == "dense-eig");
  CHECK(rep.residual < 1e-10);
  CHECK(!rep.no_gap);
}

TEST_CASE("single-atom domain is degenerate") {
  ActionModel act = cyclic_rotation(4);
  SpectralReport rep = local_spectral_gap(act, AtomSet::of(4, {2}), 1);
  CHECK(rep.degenerate);
  CHECK(rep.no_gap);
}

TEST_CASE("invariant components kill the gap") {
  ActionModel act = two_invariant_blocks(4, 4);
  SpectralReport rep = local_spectral_gap(act, act.space().full_set(), 1);
  CHECK(rep.no_gap);
  CHECK(rep.lambda2 <= 1e-12);
  // restricting Y to atoms of both blocks keeps the kernel vector
  SpectralReport mixed = local_spectral_gap(act, AtomSet::of(8, {0, 1, 4, 5}), 2);
  CHECK(mixed.no_gap);
}

TEST_CASE("non-measure-preserving input is rejected") {
  ActionModel act = weighted_cycle(6, 11);
  CHECK_THROWS_AS(local_spectral_gap(act, act.space().full_set(), 1), NotMeasurePreserving);
}

TEST_CASE("restricting the domain eliminates the off-Y coordinates") {
  // Y = half of Z/8: choosing the free off-Y values optimally doubles the
  // four-point path form, so lambda2 = 2 (2 - sqrt 2)
  ActionModel act = cyclic_rotation(8);
  SpectralReport half = local_spectral_gap(act, AtomSet::of(8, {0, 1, 2, 3}), 1);
  CHECK(half.lambda2 == doctest::Approx(2.0 * (2.0 - std::sqrt(2.0))).epsilon(1e-12));
  CHECK(!half.no_gap);
}

TEST_CASE("larger balls only increase the form") {
  ActionModel act = cyclic_rotation(8);
  SpectralReport k1 = local_spectral_gap(act, act.space().full_set(), 1);
  SpectralReport k2 = local_spectral_gap(act, act.space().full_set(), 2);
  CHECK(k2.lambda2 >= k1.lambda2 - 1e-12);
}

TEST_CASE("normalized laplacian lambda2 on known graphs") {
  // C4: eigenvalues 0, 1, 1, 2
  std::vector<std::vector<int>> c4 = {
      {0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}};
  CHECK(normalized_laplacian_lambda2(c4) == doctest::Approx(1.0).epsilon(1e-12));
  // K4: eigenvalues 0, 4/3 three times
  std::vector<std::vector<int>> k4(4, std::vector<int>(4, 1));
  for (int i = 0; i < 4; ++i) k4[i][i] = 0;
  CHECK(normalized_laplacian_lambda2(k4) == doctest::Approx(4.0 / 3).epsilon(1e-12));
  // disconnected: lambda2 = 0
  std::vector<std::vector<int>> two = {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
  CHECK(normalized_laplacian_lambda2(two) == doctest::Approx(0.0).epsilon(1e-12));
}
