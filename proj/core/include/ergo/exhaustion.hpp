#pragma once

#include "ergo/folner.hpp"

namespace ergo {

struct DomainCheck {
  bool ok = false;
  bool vacuous = false;
  Rational min_ratio;  // min nu((step.A) inter Y)/nu(A) over admissible A
  std::vector<int> witness;
};

/// Exhaustive check that Y is a domain of (c, step)-expansion: every cell
/// union A in Y with alpha_floor*nu(Y) < ... nu(A) <= nu(Y)/2 satisfies
/// nu((step.A) inter Y) > (1+c) nu(A). alpha_floor = 0 admits every
/// positive-measure A. Throws TooLarge past the cell cap.
DomainCheck verify_domain(const ActionModel& action, const Set& domain, const Rational& c,
                          const StepSpec& step, const std::vector<Set>* granularity = nullptr,
                          int max_cells = 26, const Rational& alpha_floor = Rational(0));

struct ExhaustionStage {
  int n = 0;
  Set z;
  Rational nu_z;
  Rational alpha_n;
  StepSpec step;          // ball(k_n) or the fixed S
  Rational folner_eps;    // c/2 resp. c_{m(n)}/2
  FolnerCertificate folner;
  bool f_bound_ok = false;
  Rational f_bound;       // (2/c) nu(Z_n), or alpha_n nu(Y) for empty Z_n
  Set ybar;
  Rational nu_ybar;
  Rational c_ybar;        // certified constant for Ybar (c/2 resp. exact)
  bool ybar_verified = false;
  std::vector<int> ybar_witness;
  Set yn;
  Rational nu_yn;
  int k_union = 0;        // k-version: radius that certifies the union
  Rational c_union;
  bool yn_verified = false;
  std::vector<int> yn_witness;
  int m_n = 0;            // S-version schedule
};

struct ProfileValidation {
  Rational alpha;
  Rational claimed_c;
  bool valid = true;
  std::vector<int> witness;
};

struct ExhaustionReport {
  Set y;
  Rational c;  // target constant (k-version); c_2 anchor for the S-version
  int n0 = 0;
  std::vector<ExhaustionStage> stages;
  std::vector<ProfileValidation> profile_checks;
  bool s_version = false;

  bool all_verified() const;
};

/// Stagewise construction of an exhaustion of Y by domains of expansion:
/// per stage n > N0, k_n from a linear scan, a maximal (c/2, k_n)-Folner
/// set F_n relative to Z_n, Ybar_n = Y \ (Z_n u F_n) verified as a domain
/// of (c/2, k_n)-expansion, and nested unions Y_n verified at (c, k'_n).
ExhaustionReport build_exhaustion(const ActionModel& action, const Set& domain,
                                  const Rational& c, const std::vector<Set>& z_sequence,
                                  const std::vector<Set>* granularity = nullptr,
                                  int k_cap = 0);

/// Fixed-generating-set variant: stage constants c_m = cbar(1/m) from the
/// supplied profile, Folner parameter (c_{m(n)}/2, S), and the
/// nondecreasing schedule m(n) chosen from nu(Z_n) <= c_m/(2m).
ExhaustionReport build_exhaustion_s(const ActionModel& action, const Set& domain,
                                    const std::vector<GroupElement>& s,
                                    const ExpansionProfile& profile,
                                    const std::vector<Set>& z_sequence,
                                    const std::vector<Set>* granularity = nullptr,
                                    bool validate_profile = false);

}  // namespace ergo
