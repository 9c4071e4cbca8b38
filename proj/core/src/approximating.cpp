#include "ergo/approximating.hpp"

#include <algorithm>
#include <functional>

namespace ergo {

OverlapGraph overlap_graph(const ActionModel& action, const Partition& partition, int k,
                           size_t ball_cap) {
  validate_partition(action.space(), partition);
  const Space& space = action.space();
  const int m = partition.size();
  OverlapGraph graph;
  graph.m = m;
  graph.cutoff_k = k;
  graph.hop.assign(m, std::vector<int>(m, -1));

  auto ball = action.group().ball(k, ball_cap);  // sorted by length
  for (const auto& [g, len] : ball) {
    std::vector<Set> images(m);
    for (int i = 0; i < m; ++i) images[i] = action.transport(g, partition.cells[i]);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        if (graph.hop[i][j] >= 0) continue;  // earlier = shorter
        if (space.measure_of(set_intersect(images[i], partition.cells[j])) > 0)
          graph.hop[i][j] = len;
      }
  }
  return graph;
}

MeasuredMetricSpace approximating_space(const ActionModel& action, const Partition& partition,
                                        int k, size_t ball_cap) {
  OverlapGraph graph = overlap_graph(action, partition, k, ball_cap);
  const int m = graph.m;
  std::vector<std::vector<int>> dist(m, std::vector<int>(m, kInfDist));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (graph.hop[i][j] >= 0) dist[i][j] = graph.hop[i][j];
  for (int i = 0; i < m; ++i) dist[i][i] = 0;
  for (int via = 0; via < m; ++via)
    for (int i = 0; i < m; ++i) {
      if (dist[i][via] == kInfDist) continue;
      for (int j = 0; j < m; ++j) {
        if (dist[via][j] == kInfDist) continue;
        int d = dist[i][via] + dist[via][j];
        if (d < dist[i][j]) dist[i][j] = d;
      }
    }
  std::vector<Rational> weights(m);
  for (int i = 0; i < m; ++i) weights[i] = action.space().measure_of(partition.cells[i]);
  return MeasuredMetricSpace::create(std::move(dist), std::move(weights), partition.labels);
}

namespace {

// all tuples (g_1, ..., g_q) of nonidentity elements with sum of lengths
// <= k, ordered deterministically; includes the empty tuple
void enumerate_words(const std::vector<std::pair<GroupElement, int>>& ball, int budget,
                     std::vector<const GroupElement*>& word,
                     const std::function<void(const std::vector<const GroupElement*>&)>& emit) {
  emit(word);
  for (const auto& [g, len] : ball) {
    if (g.is_identity() || len > budget) continue;
    word.push_back(&g);
    enumerate_words(ball, budget - len, word, emit);
    word.pop_back();
  }
}

}  // namespace

AdmissibilityReport admissibility_test(const ActionModel& action,
                                       const std::vector<Partition>& partitions, int k,
                                       const std::vector<Set>& samples,
                                       const Rational& tolerance,
                                       std::vector<std::string> sample_names) {
  if (partitions.empty()) throw BadSpec("admissibility test needs partitions");
  const Space& space = action.space();
  AdmissibilityReport report;
  report.k = k;
  report.tolerance = tolerance;
  if (sample_names.empty())
    for (size_t i = 0; i < samples.size(); ++i)
      sample_names.push_back("A" + std::to_string(i));
  report.sample_names = std::move(sample_names);

  auto ball = action.group().ball(k);
  std::vector<std::vector<const GroupElement*>> words;
  {
    std::vector<const GroupElement*> scratch;
    enumerate_words(ball, k, scratch,
                    [&](const std::vector<const GroupElement*>& w) { words.push_back(w); });
  }
  report.word_count = static_cast<int>(words.size());

  for (size_t si = 0; si < samples.size(); ++si) {
    std::vector<Rational> row;
    for (const auto& part : partitions) {
      Rational worst = 0;
      for (const auto& word : words) {
        Set approx = saturate(space, part, samples[si]);
        Set exact = samples[si];
        for (const GroupElement* g : word) {
          approx = saturate(space, part, action.transport(*g, approx));
          exact = action.transport(*g, exact);
        }
        Rational delta = space.measure_of(set_symdiff(approx, exact));
        worst = std::max(worst, delta);
      }
      row.push_back(worst);
    }
    for (size_t i = 1; i < row.size(); ++i)
      if (row[i] > row[i - 1]) report.monotone = false;
    report.delta.push_back(std::move(row));
  }

  report.supported = true;
  for (const auto& row : report.delta)
    if (!row.empty() && row.back() > tolerance) report.supported = false;
  return report;
}

}  // namespace ergo
