#pragma once

#include <limits>
#include <string>
#include <vector>

#include "ergo/rational.hpp"

namespace ergo {

/// Distance value standing for an unreachable pair.
inline constexpr int kInfDist = std::numeric_limits<int>::max();

/// A finite probability metric space: integer distances (kInfDist allowed),
/// positive rational weights summing to 1.
struct MeasuredMetricSpace {
  int n = 0;
  std::vector<std::vector<int>> dist;
  std::vector<Rational> weights;
  std::vector<std::string> labels;

  static MeasuredMetricSpace create(std::vector<std::vector<int>> dist,
                                    std::vector<Rational> weights,
                                    std::vector<std::string> labels = {});

  /// Cycle graph metric with uniform weights.
  static MeasuredMetricSpace cycle(int n);
  /// Complete graph metric with uniform weights.
  static MeasuredMetricSpace complete(int n);

  bool has_infinite_pairs() const;
  bool uniform_weights() const;
  int diameter() const;  // ignores infinite pairs; 0 for singletons

  /// Points within distance k of the points in `pts`.
  std::vector<int> neighborhood(const std::vector<int>& pts, int k) const;

  void validate() const;  // symmetry, zero diagonal, triangle inequality
};

}  // namespace ergo
