#include "ergo/metric_space.hpp"

#include <algorithm>

#include "ergo/errors.hpp"

namespace ergo {

MeasuredMetricSpace MeasuredMetricSpace::create(std::vector<std::vector<int>> dist,
                                                std::vector<Rational> weights,
                                                std::vector<std::string> labels) {
  MeasuredMetricSpace s;
  s.n = static_cast<int>(dist.size());
  s.dist = std::move(dist);
  s.weights = std::move(weights);
  if (labels.empty())
    for (int i = 0; i < s.n; ++i) labels.push_back("R" + std::to_string(i));
  s.labels = std::move(labels);
  s.validate();
  return s;
}

MeasuredMetricSpace MeasuredMetricSpace::cycle(int n) {
  std::vector<std::vector<int>> d(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int fwd = std::abs(i - j);
      d[i][j] = std::min(fwd, n - fwd);
    }
  return create(std::move(d), std::vector<Rational>(n, Rational(1, n)));
}

MeasuredMetricSpace MeasuredMetricSpace::complete(int n) {
  std::vector<std::vector<int>> d(n, std::vector<int>(n, 1));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  return create(std::move(d), std::vector<Rational>(n, Rational(1, n)));
}

bool MeasuredMetricSpace::has_infinite_pairs() const {
  for (const auto& row : dist)
    for (int v : row)
      if (v == kInfDist) return true;
  return false;
}

bool MeasuredMetricSpace::uniform_weights() const {
  for (const auto& w : weights)
    if (w != weights[0]) return false;
  return true;
}

int MeasuredMetricSpace::diameter() const {
  int d = 0;
  for (const auto& row : dist)
    for (int v : row)
      if (v != kInfDist) d = std::max(d, v);
  return d;
}

std::vector<int> MeasuredMetricSpace::neighborhood(const std::vector<int>& pts, int k) const {
  std::vector<bool> in(n, false);
  for (int p : pts)
    for (int j = 0; j < n; ++j)
      if (dist[p][j] != kInfDist && dist[p][j] <= k) in[j] = true;
  std::vector<int> out;
  for (int j = 0; j < n; ++j)
    if (in[j]) out.push_back(j);
  return out;
}

void MeasuredMetricSpace::validate() const {
  if (n <= 0) throw InvalidModel("metric space needs at least one point");
  if (static_cast<int>(weights.size()) != n || static_cast<int>(dist.size()) != n)
    throw InvalidModel("metric space field sizes disagree");
  Rational sum = 0;
  for (const auto& w : weights) {
    if (w <= 0) throw InvalidModel("metric space weights must be positive");
    sum += w;
  }
  if (sum != 1) throw InvalidModel("metric space weights must sum to 1");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(dist[i].size()) != n) throw InvalidModel("distance matrix not square");
    if (dist[i][i] != 0) throw InvalidModel("nonzero diagonal distance");
    for (int j = 0; j < n; ++j) {
      if (dist[i][j] != dist[j][i]) throw InvalidModel("asymmetric distance matrix");
      if (i != j && dist[i][j] <= 0) throw InvalidModel("nonpositive off-diagonal distance");
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        if (dist[i][j] == kInfDist || dist[j][l] == kInfDist) continue;
        long long via = static_cast<long long>(dist[i][j]) + dist[j][l];
        if (dist[i][l] != kInfDist && dist[i][l] > via)
          throw InvalidModel("triangle inequality violated");
        if (dist[i][l] == kInfDist)
          throw InvalidModel("triangle inequality violated (finite chain, infinite direct)");
      }
}

}  // namespace ergo
