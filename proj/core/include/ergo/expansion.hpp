#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ergo/cells.hpp"

namespace ergo {

enum class ProfileScope { global, domain, measured_space };
enum class Strategy { exact, local_search };

struct ProfileEntry {
  Rational alpha;
  int k = 0;
  Rational c_star;
  std::vector<int> witness;  // minimizing cell indices, ascending
};

/// Tabulated c*(alpha, k) values with extremal witnesses. The target is
/// certified (c,k)-asymptotically expanding for any c below c_star
/// pointwise; local-search entries are upper bounds with locally minimal
/// witnesses.
struct ExpansionProfile {
  ProfileScope scope = ProfileScope::global;
  std::vector<ProfileEntry> entries;
  std::string strategy = "exact";
  std::string granularity = "atoms";
  uint64_t seed = 0;

  const ProfileEntry* find(const Rational& alpha, int k) const;
  /// Entry at the given alpha with the smallest k whose c_star is positive
  /// (falls back to the largest k at that alpha). Throws ProfileGap.
  const ProfileEntry& at_alpha(const Rational& alpha) const;
};

struct ProfileRequest {
  std::vector<Rational> alphas;  // within (0, 1/2]
  std::vector<int> ks;
  Strategy strategy = Strategy::exact;
  int max_exact_cells = 26;
  uint64_t seed = 0;
  int restarts = 64;
};

/// c*(alpha,k) = min over cell unions A with alpha*nu(X) <= nu(A) <= nu(X)/2
/// of nu(B_k.A)/nu(A) - 1. Throws EmptyAdmissibleRange when some alpha
/// admits no cell union.
ExpansionProfile expansion_profile(const ActionModel& action, const ProfileRequest& req,
                                   const std::vector<Set>* granularity_cells = nullptr);

/// Same minimization restricted to A inside Y, thresholds scaled by nu(Y)
/// and neighborhoods intersected back into Y. Degenerate alphas (no
/// admissible A) are skipped rather than raised. Throws EmptyDomain.
ExpansionProfile domain_profile(const ActionModel& action, const Set& domain,
                                const ProfileRequest& req,
                                const std::vector<Set>* granularity_cells = nullptr);

/// Measured-space variant: neighborhoods are closed metric k-balls.
ExpansionProfile expansion_profile(const MeasuredMetricSpace& space, const ProfileRequest& req);

struct CheegerResult {
  bool infinite = false;  // no admissible subset (single point)
  Rational value;         // exact value, or the local-search upper bound
  std::vector<int> witness;
  bool exact = true;
  double lambda2 = 0;         // bracket mode: normalized Laplacian lambda_2
  double lower_spectral = 0;  // bracket mode: certified lower bound
};

/// Vertex Cheeger constant of the unit-distance graph of `space`:
/// min |N_1(A) \ A| / |A| over 0 < |A| <= n/2. Exact mode enumerates all
/// subsets (TooLargeForExact past the cap); bracket mode pairs a
/// local-search upper bound with the spectral lower bound.
CheegerResult cheeger_constant(const MeasuredMetricSpace& space, bool exact,
                               int max_exact = 26, uint64_t seed = 0);

/// Minimum boundary-ratio witness over a basis: used by local search and
/// by the verification drivers. Returns nullopt when no admissible subset
/// exists.
struct RatioWitness {
  Rational nu_a;
  Rational nu_img;
  std::vector<int> cells;
  Rational ratio() const { return nu_img / nu_a; }
};

/// Exhaustive minimum of nu_img(A)/nu(A) over cell unions with
/// lo <= nu(A) <= hi (lo = 0 means any positive measure).
std::optional<RatioWitness> min_ratio_exhaustive(const CellBasis& basis,
                                                 const std::vector<Set>& images,
                                                 const Space& space, const Rational& lo,
                                                 const Rational& hi);

/// Deterministic local-search minimum of the same ratio (seeded restarts,
/// single-cell moves, greedy seeds).
std::optional<RatioWitness> min_ratio_local_search(const CellBasis& basis,
                                                   const std::vector<Set>& images,
                                                   const Space& space, const Rational& lo,
                                                   const Rational& hi, uint64_t seed,
                                                   int restarts);

/// Exhaustive minimum of (nu_img(A) - nu(img(A) inter A)) / nu(A): the
/// boundary-ratio variant used by the Folner machinery (nu_img in the
/// result holds the boundary measure).
std::optional<RatioWitness> min_boundary_ratio_exhaustive(const CellBasis& basis,
                                                          const std::vector<Set>& images,
                                                          const Space& space,
                                                          const Rational& lo,
                                                          const Rational& hi);

}  // namespace ergo
