#pragma once

#include <cstdint>
#include <string>

#include "ergo/serialize.hpp"

namespace ergo {

/// One pipeline invocation: a subcommand plus its validated config.
/// Unknown config keys are errors (fail-closed) and every output records
/// the seed. Exit codes: 0 all verifications pass, 1 a verification
/// failed, 2 usage/config error (raised as ConfigError).
struct RunConfig {
  std::string subcommand;  // profile|cheeger|approx|folner|exhaust|admissible|scenario|export
  Json config;
  std::string out_dir = ".";
  std::string strategy = "exact";
  uint64_t seed = 0;
  int max_exact_cells = 26;
};

int run_pipeline(const RunConfig& run);

/// Shared config translators (also used by tests).
ScenarioSpec scenario_from_json(const Json& j);
void check_keys(const Json& obj, const std::string& where,
                std::initializer_list<const char*> allowed);

}  // namespace ergo
