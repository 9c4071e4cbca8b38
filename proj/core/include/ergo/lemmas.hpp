#pragma once

#include "ergo/expansion.hpp"

namespace ergo {

/// Extension of a profile to measure range [1/2, 1): for beta in that range,
/// h_bar(beta) = k(alpha_beta) and
/// b_bar(beta) = min{(1-beta)/(2 beta), c(alpha_beta) (1-beta)/(2 beta)}
/// with alpha_beta = (1-beta)/2. When the profile's k is constant, h_bar is
/// that constant.
struct BetaEntry {
  Rational beta;
  Rational b_bar;
  int h_bar = 0;
};

std::vector<BetaEntry> extend_profile_above_half(const ExpansionProfile& profile,
                                                 const std::vector<Rational>& betas);

/// Smallest k = m*h with (1+b)^m >= 1+c, m = ceil(log_{1+b}(1+c)).
/// Requires b > 0, c in (0,1), h >= 1.
int boost_to_constant(const Rational& b, int h, const Rational& c);

/// k = m0 * k0 with m0 the least integer such that (1+b)^m0 * alpha > beta.
int subset_domain_bound(const Rational& b, int k0, const Rational& alpha,
                        const Rational& beta);

/// One-step reduction on measure-class-preserving models:
/// c' = (c_alpha - eps/alpha) / (|S|^(k-1) D). Validates eps < alpha c_alpha
/// and nu(P_{k-1} . Z_D) < eps where P_{k-1} is the set of products of at
/// most k-1 factors from S and Z_D the set where some such product has
/// transport ratio >= D.
struct OneStepResult {
  Rational c_prime;
  Set z_set;
  Rational nu_z;
  Rational nu_pz;
};

OneStepResult one_step_reduction(const ActionModel& action, const Rational& c_alpha, int k,
                                 const std::vector<GroupElement>& s, const Rational& alpha,
                                 const Rational& d, const Rational& eps);

/// Product lower bound Phi = exp(-(1-delta)^-1 (1-C)^-1) with C = alpha0/2,
/// and the amplified uniform constant c_uniform = Phi * c.
/// Requires 0 < alpha0 <= 1/4 and 4 - 2 sqrt(3) < delta < 1.
struct Amplification {
  double phi = 0;
  double c_uniform = 0;
};

Amplification homogeneous_amplification(const Rational& c, const Rational& alpha0,
                                        const Rational& delta);

/// Exhaustive finite-model checks backing the formulas above. `ok` means
/// the strict inequality held for every admissible cell union.
struct CheckReport {
  bool ok = true;
  bool vacuous = false;  // no admissible subset
  std::vector<int> witness;
  Rational lhs, rhs;
};

/// For all cell unions A in Y with lo_frac*nu(Y) <= nu(A) <= hi_frac*nu(Y):
/// nu((B_k . A) inter Y) > (1+c) nu(A).
CheckReport check_expansion_range(const ActionModel& action, const Set& domain,
                                  const Rational& lo_frac, const Rational& hi_frac,
                                  const Rational& c, int k);

/// For all cell unions A in Y with nu(A) >= alpha_frac*nu(Y):
/// nu((B_k . A) inter Y) > beta_frac*nu(Y).
CheckReport check_escape_level(const ActionModel& action, const Set& domain,
                               const Rational& alpha_frac, const Rational& beta_frac, int k);

/// For all cell unions A in Y with alpha_frac*nu(Y) <= nu(A) <= nu(Y)/2:
/// nu(boundary_S(A) inter Y) > c_prime nu(A).
CheckReport check_boundary_expansion(const ActionModel& action, const Set& domain,
                                     const std::vector<GroupElement>& s,
                                     const Rational& alpha_frac, const Rational& c_prime);

}  // namespace ergo
