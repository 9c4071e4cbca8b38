#pragma once

#include "ergo/action.hpp"
#include "ergo/metric_space.hpp"
#include "ergo/partition.hpp"

namespace ergo {

/// Single-hop structure under group elements of length at most K:
/// hop[i][j] is the least l(g) with nu(g.R_i inter R_j) > 0, or -1.
/// Symmetric as a weighted relation via g^-1.
struct OverlapGraph {
  int m = 0;
  int cutoff_k = 0;
  std::vector<std::vector<int>> hop;
};

OverlapGraph overlap_graph(const ActionModel& action, const Partition& partition, int k,
                           size_t ball_cap = 1'000'000);

/// The measured approximating space: partition cells with the shortest-
/// chain metric over single hops of length <= K and cell masses as
/// weights. Unreachable pairs get the infinite distance; finiteness is the
/// ergodic case. d computed with cutoff K dominates the true d_P, with
/// equality once K covers the true hop weights.
MeasuredMetricSpace approximating_space(const ActionModel& action, const Partition& partition,
                                        int k, size_t ball_cap = 1'000'000);

struct AdmissibilityCell {
  Rational delta;  // max over words of nu(iterated saturation symdiff true image)
};

struct AdmissibilityReport {
  int k = 0;
  Rational tolerance;
  std::vector<std::string> sample_names;
  // delta[sample][partition index]
  std::vector<std::vector<Rational>> delta;
  int word_count = 0;
  bool monotone = true;       // per-sample nonincreasing trend
  bool supported = false;     // final deltas all within tolerance

  const char* verdict() const { return supported ? "supported" : "refuted"; }
};

/// Empirical admissibility test over supplied samples and a truncated
/// partition sequence: iterated saturations along all words of total
/// length <= k against the true images. Refutes but never proves.
AdmissibilityReport admissibility_test(const ActionModel& action,
                                       const std::vector<Partition>& partitions, int k,
                                       const std::vector<Set>& samples,
                                       const Rational& tolerance,
                                       std::vector<std::string> sample_names = {});

}  // namespace ergo
