#pragma once

#include <optional>

#include "ergo/action.hpp"
#include "ergo/metric_space.hpp"

// Test-side oracles, deliberately naive and independent of the library's
// enumeration and closure paths: neighborhoods by literal union over ball
// elements, minima by a full loop over all bitmask subsets with no pruning.

namespace ergo::testing {

inline Set oracle_neighborhood(const ActionModel& action, int k, const Set& a) {
  Set out = a;
  for (const auto& [g, len] : action.group().ball(k))
    out = set_union(out, action.transport(g, a));
  return out;
}

struct OracleMin {
  Rational c_star;
  std::vector<int> witness;
};

inline bool oracle_lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/// Minimum of nu((B_k . A) inter Y)/nu(A) over atom subsets A of Y with
/// alpha nu(Y) <= nu(A) <= nu(Y)/2, by direct enumeration of every subset.
inline std::optional<OracleMin> oracle_action_c_star(const ActionModel& action, const Set& y,
                                                     const Rational& alpha, int k) {
  const Space& space = action.space();
  std::vector<int> atoms = std::get<AtomSet>(y).atoms();
  const int m = static_cast<int>(atoms.size());
  const int total_atoms = space.atom_space.atom_count;
  Rational t = space.measure_of(y);
  std::optional<OracleMin> best;
  Rational best_num, best_den;
  for (unsigned long long mask = 1; mask < (1ULL << m); ++mask) {
    AtomSet a(total_atoms);
    std::vector<int> cells;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1ULL) {
        a.set(atoms[i]);
        cells.push_back(i);
      }
    Rational nu = space.measure_of(a);
    if (nu < alpha * t || 2 * nu > t) continue;
    Set nb = oracle_neighborhood(action, k, a);
    Rational nu_nb = space.measure_of(set_intersect(nb, y));
    if (!best || nu_nb * best_den < best_num * nu ||
        (nu_nb * best_den == best_num * nu && oracle_lex_less(cells, best->witness))) {
      best = OracleMin{nu_nb / nu - 1, cells};
      best_num = nu_nb;
      best_den = nu;
    }
  }
  return best;
}

/// Same minimum over point subsets of a metric space with closed
/// k-neighborhoods.
inline std::optional<OracleMin> oracle_space_c_star(const MeasuredMetricSpace& space,
                                                    const Rational& alpha, int k) {
  const int n = space.n;
  std::optional<OracleMin> best;
  Rational best_num, best_den;
  for (unsigned long long mask = 1; mask < (1ULL << n); ++mask) {
    std::vector<int> pts;
    Rational nu = 0;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1ULL) {
        pts.push_back(i);
        nu += space.weights[i];
      }
    if (nu < alpha || 2 * nu > 1) continue;
    Rational nu_nb = 0;
    for (int j : space.neighborhood(pts, k)) nu_nb += space.weights[j];
    if (!best || nu_nb * best_den < best_num * nu ||
        (nu_nb * best_den == best_num * nu && oracle_lex_less(pts, best->witness))) {
      best = OracleMin{nu_nb / nu - 1, pts};
      best_num = nu_nb;
      best_den = nu;
    }
  }
  return best;
}

/// Vertex Cheeger constant by direct enumeration.
inline std::optional<OracleMin> oracle_cheeger(const MeasuredMetricSpace& space) {
  const int n = space.n;
  std::optional<OracleMin> best;
  long long best_bd = 0, best_sz = 1;
  for (unsigned long long mask = 1; mask < (1ULL << n); ++mask) {
    std::vector<int> pts;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1ULL) pts.push_back(i);
    if (2 * pts.size() > static_cast<size_t>(n)) continue;
    auto nb = space.neighborhood(pts, 1);
    long long bd = 0;
    for (int j : nb) bd += (mask >> j & 1ULL) ? 0 : 1;
    long long sz = static_cast<long long>(pts.size());
    if (!best || bd * best_sz < best_bd * sz ||
        (bd * best_sz == best_bd * sz && oracle_lex_less(pts, best->witness))) {
      best = OracleMin{Rational(bd, sz), pts};
      best_bd = bd;
      best_sz = sz;
    }
  }
  return best;
}

}  // namespace ergo::testing
