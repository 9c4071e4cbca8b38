#include "ergo/pipeline.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <iostream>

namespace ergo {

void check_keys(const Json& obj, const std::string& where,
                std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

namespace {

Rational rat_field(const Json& j, const char* key, const Rational& fallback) {
  if (!j.contains(key)) return fallback;
  if (j.at(key).is_number_integer()) return Rational(j.at(key).get<long long>());
  return parse_rational(j.at(key).get<std::string>());
}

std::vector<Rational> rat_list(const Json& j) {
  std::vector<Rational> out;
  for (const auto& x : j) {
    if (x.is_number_integer())
      out.push_back(Rational(x.get<long long>()));
    else
      out.push_back(parse_rational(x.get<std::string>()));
  }
  return out;
}

PartitionSpec partition_spec_from_json(const Json& j) {
  check_keys(j, "partition", {"kind", "n", "assignment"});
  PartitionSpec spec;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "uniform-arcs")
    spec.kind = PartitionSpec::Kind::uniform_arcs;
  else if (kind == "dyadic")
    spec.kind = PartitionSpec::Kind::dyadic;
  else if (kind == "atom-blocks")
    spec.kind = PartitionSpec::Kind::atom_blocks;
  else
    throw ConfigError("unknown partition kind '" + kind + "'");
  spec.n = j.value("n", 1);
  if (j.contains("assignment")) spec.assignment = j.at("assignment").get<std::vector<int>>();
  return spec;
}

std::string out_path(const RunConfig& run, const std::string& name) {
  std::filesystem::create_directories(run.out_dir);
  return (std::filesystem::path(run.out_dir) / name).string();
}

Scenario scenario_of(const RunConfig& run) {
  if (!run.config.contains("scenario"))
    throw ConfigError("config needs a 'scenario' section");
  return scenario_build(scenario_from_json(run.config.at("scenario")));
}

ProfileRequest profile_request(const RunConfig& run, const Json& j) {
  ProfileRequest req;
  req.alphas = rat_list(j.at("alphas"));
  req.ks = j.at("ks").get<std::vector<int>>();
  req.strategy = run.strategy == "local-search" ? Strategy::local_search : Strategy::exact;
  req.max_exact_cells = run.max_exact_cells;
  req.seed = run.seed;
  return req;
}

int run_profile(const RunConfig& run) {
  const Json& j = run.config.at("profile");
  check_keys(j, "profile", {"alphas", "ks", "domain", "use_partition"});
  Scenario scenario = scenario_of(run);
  ProfileRequest req = profile_request(run, j);
  ExpansionProfile profile;
  const Partition* part = nullptr;
  if (j.value("use_partition", -1) >= 0) {
    size_t idx = static_cast<size_t>(j.at("use_partition").get<int>());
    if (idx >= scenario.partitions.size())
      throw ConfigError("use_partition index out of range");
    part = &scenario.partitions[idx];
  }
  if (j.contains("domain")) {
    Set y = set_from_json(j.at("domain"), scenario.action.space());
    profile = domain_profile(scenario.action, y, req, part ? &part->cells : nullptr);
  } else {
    profile = expansion_profile(scenario.action, req, part ? &part->cells : nullptr);
  }
  write_file(out_path(run, "profile.csv"), profile_to_csv(profile));
  write_file(out_path(run, "profile.json"), profile_to_json(profile).dump(2) + "\n");
  return 0;
}

int run_cheeger(const RunConfig& run) {
  const Json& j = run.config.at("cheeger");
  check_keys(j, "cheeger", {"partition", "K", "exact"});
  Scenario scenario = scenario_of(run);
  Partition part =
      build_partition(scenario.action.space(), partition_spec_from_json(j.at("partition")));
  MeasuredMetricSpace space =
      approximating_space(scenario.action, part, j.value("K", 1));
  CheegerResult res =
      cheeger_constant(space, j.value("exact", true), run.max_exact_cells, run.seed);
  write_file(out_path(run, "cheeger.json"), cheeger_to_json(res).dump(2) + "\n");
  return 0;
}

int run_approx(const RunConfig& run) {
  const Json& j = run.config.at("approx");
  check_keys(j, "approx", {"partition", "K", "use_partition"});
  Scenario scenario = scenario_of(run);
  Partition part;
  if (j.contains("use_partition")) {
    size_t idx = static_cast<size_t>(j.at("use_partition").get<int>());
    if (idx >= scenario.partitions.size())
      throw ConfigError("use_partition index out of range");
    part = scenario.partitions[idx];
  } else {
    part = build_partition(scenario.action.space(), partition_spec_from_json(j.at("partition")));
  }
  int k = j.value("K", 1);
  MeasuredMetricSpace space = approximating_space(scenario.action, part, k);
  write_file(out_path(run, "space.dot"), space_to_dot(space));
  write_file(out_path(run, "space.csv"), space_to_csv(space));
  Json meta;
  meta["schema"] = "v1";
  meta["K"] = k;
  meta["cells"] = space.n;
  meta["Q"] = format_rational(measure_ratio_Q(scenario.action.space(), part));
  meta["infinite_pairs"] = space.has_infinite_pairs();
  if (part.mesh) meta["mesh"] = format_rational(*part.mesh);
  meta["seed"] = run.seed;
  write_file(out_path(run, "space.json"), meta.dump(2) + "\n");
  return 0;
}

int run_folner(const RunConfig& run) {
  const Json& j = run.config.at("folner");
  check_keys(j, "folner", {"eps", "k", "z", "check_complement"});
  Scenario scenario = scenario_of(run);
  const Space& space = scenario.action.space();
  Rational eps = rat_field(j, "eps", Rational(1, 2));
  int k = j.value("k", 1);
  Set z = j.contains("z") ? set_from_json(j.at("z"), space) : space.empty_set();
  FolnerCertificate cert = maximal_folner(scenario.action, space.full_set(), z, eps,
                                          StepSpec::ball(k), nullptr, run.max_exact_cells);
  write_file(out_path(run, "folner.json"), folner_to_json(space, cert).dump(2) + "\n");
  int code = 0;
  if (j.value("check_complement", true)) {
    ComplementReport rep = complement_expansion_check(scenario.action, cert);
    write_file(out_path(run, "complement.json"), complement_to_json(rep).dump(2) + "\n");
    if (!rep.pass) code = 1;
  }
  return code;
}

int run_exhaust(const RunConfig& run) {
  const Json& j = run.config.at("exhaust");
  check_keys(j, "exhaust", {"c", "z_sets", "schmidt_tails", "s_version", "profile_alphas"});
  Scenario scenario = scenario_of(run);
  const Space& space = scenario.action.space();
  std::vector<Set> z;
  if (j.value("schmidt_tails", false)) {
    const Json& sc = run.config.at("scenario");
    std::vector<int> sizes = sc.at("block_sizes").get<std::vector<int>>();
    z = schmidt_tails(scenario, sizes);
  } else if (j.contains("z_sets")) {
    for (const auto& js : j.at("z_sets")) z.push_back(set_from_json(js, space));
  } else {
    throw ConfigError("exhaust needs z_sets or schmidt_tails");
  }
  ExhaustionReport report;
  if (j.value("s_version", false)) {
    std::vector<GroupElement> s;
    for (const auto& g : scenario.action.group().generators()) s.push_back(g.element);
    ProfileRequest req;
    req.alphas = j.contains("profile_alphas") ? rat_list(j.at("profile_alphas"))
                                              : std::vector<Rational>{{Rational(1, 2)},
                                                                      {Rational(1, 4)}};
    req.ks = {1};
    req.max_exact_cells = run.max_exact_cells;
    ExpansionProfile prof = expansion_profile(scenario.action, req);
    // the S-profile at alpha is the k=1 profile for word metrics; recompute
    // c values against S directly
    report = build_exhaustion_s(scenario.action, space.full_set(), s, prof, z, nullptr,
                                /*validate_profile=*/true);
  } else {
    Rational c = rat_field(j, "c", Rational(1, 2));
    report = build_exhaustion(scenario.action, space.full_set(), c, z);
  }
  write_file(out_path(run, "exhaustion.json"),
             exhaustion_to_json(space, report).dump(2) + "\n");
  write_file(out_path(run, "exhaustion.txt"), exhaustion_to_table(space, report));
  return report.all_verified() ? 0 : 1;
}

int run_admissible(const RunConfig& run) {
  const Json& j = run.config.at("admissible");
  check_keys(j, "admissible", {"k", "tolerance", "samples", "partition_range"});
  Scenario scenario = scenario_of(run);
  const Space& space = scenario.action.space();
  int k = j.value("k", 2);
  Rational tol = rat_field(j, "tolerance", Rational(1, 20));
  std::vector<Set> samples;
  for (const auto& js : j.at("samples")) samples.push_back(set_from_json(js, space));
  std::vector<Partition> parts = scenario.partitions;
  if (j.contains("partition_range")) {
    auto range = j.at("partition_range").get<std::vector<int>>();
    if (range.size() != 2 || range[0] < 0 || range[1] > static_cast<int>(parts.size()) ||
        range[0] >= range[1])
      throw ConfigError("partition_range must be [lo, hi) within the scenario partitions");
    parts = std::vector<Partition>(parts.begin() + range[0], parts.begin() + range[1]);
  }
  if (parts.empty()) throw ConfigError("scenario carries no partition family");
  AdmissibilityReport report = admissibility_test(scenario.action, parts, k, samples, tol);
  write_file(out_path(run, "admissibility.json"),
             admissibility_to_json(report).dump(2) + "\n");
  return report.supported ? 0 : 1;
}

int run_scenario(const RunConfig& run) {
  Scenario scenario = scenario_of(run);
  Json j = action_to_json(scenario.action);
  j["description"] = scenario.description;
  if (scenario.mass_defect > 0) j["mass_defect"] = format_rational(scenario.mass_defect);
  j["partitions"] = scenario.partitions.size();
  write_file(out_path(run, "model.json"), j.dump(2) + "\n");
  return 0;
}

int run_export(const RunConfig& run) {
  const Json& j = run.config.at("export");
  check_keys(j, "export", {"space_csv", "format"});
  MeasuredMetricSpace space = space_from_csv(read_file(j.at("space_csv").get<std::string>()));
  std::string format = j.value("format", "dot");
  if (format == "dot")
    write_file(out_path(run, "exported.dot"), space_to_dot(space));
  else if (format == "csv")
    write_file(out_path(run, "exported.csv"), space_to_csv(space));
  else
    throw ConfigError("unknown export format '" + format + "'");
  return 0;
}

}  // namespace

ScenarioSpec scenario_from_json(const Json& j) {
  check_keys(j, "scenario",
             {"name", "angle", "depth", "p", "block_sizes", "block_ratio", "truncation"});
  ScenarioSpec spec;
  spec.name = j.at("name").get<std::string>();
  spec.angle = rat_field(j, "angle", Rational(0));
  spec.depth = j.value("depth", 3);
  spec.p = j.value("p", 3);
  if (j.contains("block_sizes"))
    spec.block_sizes = j.at("block_sizes").get<std::vector<int>>();
  spec.block_ratio = rat_field(j, "block_ratio", Rational(1, 8));
  spec.truncation = j.value("truncation", 6);
  return spec;
}

int run_pipeline(const RunConfig& run) {
  try {
    check_keys(run.config, "config",
               {"scenario", "profile", "cheeger", "approx", "folner", "exhaust", "admissible",
                "export"});
    if (run.subcommand == "profile") return run_profile(run);
    if (run.subcommand == "cheeger") return run_cheeger(run);
    if (run.subcommand == "approx") return run_approx(run);
    if (run.subcommand == "folner") return run_folner(run);
    if (run.subcommand == "exhaust") return run_exhaust(run);
    if (run.subcommand == "admissible") return run_admissible(run);
    if (run.subcommand == "scenario") return run_scenario(run);
    if (run.subcommand == "export") return run_export(run);
    throw ConfigError("unknown subcommand '" + run.subcommand + "'");
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config error in '") + run.subcommand + "': " + e.what());
  }
}

}  // namespace ergo
