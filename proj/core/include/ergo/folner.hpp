#pragma once

#include "ergo/expansion.hpp"

namespace ergo {

/// Step operator of the boundary: a ball B_k or an explicit symmetric set.
struct StepSpec {
  bool use_ball = true;
  int k = 1;
  std::vector<GroupElement> s;

  static StepSpec ball(int k) {
    StepSpec st;
    st.k = k;
    return st;
  }
  static StepSpec set(std::vector<GroupElement> s) {
    StepSpec st;
    st.use_ball = false;
    st.s = std::move(s);
    return st;
  }
};

/// Closed step neighborhood: B_k . A for balls (identity included), and
/// A u S . A for explicit sets. The boundary S . A \ A is unchanged by the
/// closure; using the closed form keeps every (1+c)-ratio check coherent
/// with the boundary statements (a bare S . A can even lose mass, e.g. the
/// alternating set on an even cycle).
Set step_closed_neighborhood(const ActionModel& action, const StepSpec& step, const Set& a);

struct FolnerAudit {
  bool folner = false;
  bool half_ok = false;
  Rational nu_a;
  Rational boundary;   // nu((step-boundary of A inter Y) \ Z)
  Rational threshold;  // eps * nu(A)
};

/// Tests the (eps, step)-Folner condition for A in Y relative to Z.
/// Throws NotASubset unless A is contained in Y \ Z.
FolnerAudit is_folner(const ActionModel& action, const Set& domain, const Set& z,
                      const Rational& eps, const StepSpec& step, const Set& a);

struct FolnerCertificate {
  Set f, y, z;
  Rational epsilon;
  StepSpec step;
  Rational nu_f;
  Rational boundary_measure;
  bool maximal = false;
  std::vector<int> cells;  // F as basis indices in the documented search order's basis
  std::string search_order = "greedy-min-boundary-increment,lowest-index-ties,superset-closure";
};

/// Builds a maximal Folner set at cell granularity: greedy growth by
/// smallest boundary increment, then exhaustive superset closure when the
/// cell count is within the cap, so no Folner cell-union strictly contains
/// the result.
FolnerCertificate maximal_folner(const ActionModel& action, const Set& domain, const Set& z,
                                 const Rational& eps, const StepSpec& step,
                                 const std::vector<Set>* granularity = nullptr,
                                 int exhaustive_cap = 26);

struct ComplementViolation {
  std::vector<int> cells;
  Rational lhs, rhs;
};

struct ComplementReport {
  bool pass = true;
  long long checked = 0;
  std::vector<ComplementViolation> violations;
};

/// Verifies the complement-expansion inequality of a maximal certificate:
/// every cell union A in Y \ (F u Z) with 0 < nu(A) <= nu(Y)/2 - nu(F)
/// satisfies nu((step-boundary of A inter Y) \ (F u Z)) > eps nu(A).
/// A violation falsifies maximality at the chosen granularity.
ComplementReport complement_expansion_check(const ActionModel& action,
                                            const FolnerCertificate& cert,
                                            const std::vector<Set>* granularity = nullptr);

}  // namespace ergo
