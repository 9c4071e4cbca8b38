#pragma once

#include <string>

#include "ergo/scenario.hpp"
#include "support/models.hpp"

// The fixed verification corpus: 50 deterministic models with at most 14
// atoms each, mixing rotations, weighted cycles, dihedral actions, seeded
// random permutation actions, small matrix actions and chained blocks.

namespace ergo::testing {

struct CorpusModel {
  std::string name;
  ActionModel action;
};

inline std::vector<CorpusModel> fixed_corpus() {
  std::vector<CorpusModel> out;
  for (int n = 4; n <= 11; ++n)
    out.push_back({"rotation-Z" + std::to_string(n), cyclic_rotation(n)});
  for (int n = 6; n <= 11; ++n)
    out.push_back({"weighted-cycle-" + std::to_string(n), weighted_cycle(n, 1000 + n)});
  for (int n = 5; n <= 10; ++n)
    out.push_back({"dihedral-" + std::to_string(n), dihedral_cycle(n)});
  for (int i = 0; i < 14; ++i) {
    int n = 6 + (i % 8);
    out.push_back({"random2-" + std::to_string(i), random_permutation_action(n, 2, 2000 + i)});
  }
  {
    ScenarioSpec spec;
    spec.name = "sl2-torus";
    spec.p = 3;
    out.push_back({"sl2-torus-3", scenario_build(spec).action});
  }
  {
    ScenarioSpec spec;
    spec.name = "odometer";
    spec.depth = 3;
    out.push_back({"odometer-3", scenario_build(spec).action});
  }
  {
    const std::vector<std::pair<std::vector<int>, Rational>> blocks = {
        {{4, 4}, Rational(1, 8)},
        {{5, 5}, Rational(1, 8)},
        {{6, 6}, Rational(1, 2)},
        {{4, 4, 4}, Rational(1, 8)},
        {{5, 4}, Rational(1, 4)},
    };
    for (size_t i = 0; i < blocks.size(); ++i) {
      ScenarioSpec spec;
      spec.name = "schmidt-composite";
      spec.block_sizes = blocks[i].first;
      spec.block_ratio = blocks[i].second;
      out.push_back({"schmidt-" + std::to_string(i), scenario_build(spec).action});
    }
  }
  for (int i = 0; i < 9; ++i) {
    int n = 6 + i;
    out.push_back({"random3-" + std::to_string(i), random_permutation_action(n, 3, 3000 + i)});
  }
  return out;
}

}  // namespace ergo::testing
