// Command-line front end: every subcommand reads a JSON config document,
// writes reports under --out-dir and exits 0 (pass), 1 (verification
// failure) or 2 (usage/config error).

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>

#include "ergo/pipeline.hpp"

namespace {

int dispatch(const std::string& sub, const std::string& config_path,
             const std::string& out_dir, const std::string& strategy, uint64_t seed,
             int max_exact_cells) {
  ergo::RunConfig run;
  run.subcommand = sub;
  run.out_dir = out_dir;
  run.strategy = strategy;
  run.seed = seed;
  run.max_exact_cells = max_exact_cells;
  try {
    run.config = nlohmann::json::parse(ergo::read_file(config_path));
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: cannot parse config " << config_path << ": " << e.what() << "\n";
    return 2;
  } catch (const ergo::IOError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  try {
    return ergo::run_pipeline(run);
  } catch (const ergo::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ergo::BadParams& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ergo::BadSpec& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ergo::Error& e) {
    std::cerr << "error in '" << sub << "': " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact finite models of group actions: expansion profiles, Cheeger\n"
               "constants, Folner sets, exhaustions and approximating spaces"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  std::string strategy = "exact";
  uint64_t seed = 0;
  int max_exact_cells = 26;
  app.add_option("--config", config_path, "JSON config document")->required();
  app.add_option("--out-dir", out_dir, "output directory");
  app.add_option("--strategy", strategy, "exact | local-search")
      ->check(CLI::IsMember({"exact", "local-search"}));
  app.add_option("--seed", seed, "seed for local-search restarts");
  app.add_option("--max-exact-cells", max_exact_cells, "cap for exhaustive enumerations");

  for (const char* sub : {"profile", "cheeger", "approx", "folner", "exhaust", "admissible",
                          "scenario", "export"})
    app.add_subcommand(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return dispatch(app.get_subcommands().front()->get_name(), config_path, out_dir, strategy,
                  seed, max_exact_cells);
}
