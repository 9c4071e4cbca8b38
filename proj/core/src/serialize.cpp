#include "ergo/serialize.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace ergo {

namespace {

std::string join_cells(const std::vector<int>& cells) {
  std::string out;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(cells[i]);
  }
  return out;
}

Json rational_json(const Rational& r) { return format_rational(r); }

}  // namespace

std::string profile_to_csv(const ExpansionProfile& profile) {
  std::ostringstream os;
  os << "alpha,k,c_star,witness_cells\n";
  for (const auto& e : profile.entries)
    os << format_rational(e.alpha) << "," << e.k << "," << format_rational(e.c_star) << ","
       << join_cells(e.witness) << "\n";
  return os.str();
}

Json profile_to_json(const ExpansionProfile& profile) {
  Json j;
  j["schema"] = "v1";
  j["scope"] = profile.scope == ProfileScope::global
                   ? "global"
                   : profile.scope == ProfileScope::domain ? "domain" : "measured-space";
  j["strategy"] = profile.strategy;
  j["granularity"] = profile.granularity;
  j["seed"] = profile.seed;
  Json entries = Json::array();
  for (const auto& e : profile.entries) {
    Json je;
    je["alpha"] = rational_json(e.alpha);
    je["k"] = e.k;
    je["c_star"] = rational_json(e.c_star);
    je["witness"] = e.witness;
    entries.push_back(je);
  }
  j["entries"] = entries;
  return j;
}

Json cheeger_to_json(const CheegerResult& result) {
  Json j;
  j["schema"] = "v1";
  if (result.infinite) {
    j["value"] = "inf";
    return j;
  }
  j["value"] = rational_json(result.value);
  j["witness"] = result.witness;
  j["exact"] = result.exact;
  if (!result.exact) {
    j["lambda2"] = result.lambda2;
    j["lower_spectral"] = result.lower_spectral;
  }
  return j;
}

Json spectral_to_json(const SpectralReport& report) {
  Json j;
  j["schema"] = "v1";
  j["lambda2"] = report.lambda2;
  j["kappa_upper"] = report.no_gap ? Json("inf") : Json(report.kappa_upper);
  j["degenerate"] = report.degenerate;
  j["no_gap"] = report.no_gap;
  j["method"] = report.method;
  j["residual"] = report.residual;
  if (report.no_gap) j["note"] = "no local spectral gap certificate";
  return j;
}

Json set_to_json(const Set& s) {
  Json j;
  if (std::holds_alternative<IntervalSet>(s)) {
    j["kind"] = "intervals";
    Json parts = Json::array();
    for (const auto& p : std::get<IntervalSet>(s).parts())
      parts.push_back({rational_json(p.lo), rational_json(p.hi)});
    j["parts"] = parts;
  } else {
    j["kind"] = "atoms";
    j["atoms"] = std::get<AtomSet>(s).atoms();
    j["atom_count"] = std::get<AtomSet>(s).atom_count();
  }
  return j;
}

Set set_from_json(const Json& j, const Space& space) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "intervals") {
    std::vector<std::pair<Rational, Rational>> raw;
    for (const auto& p : j.at("parts"))
      raw.push_back({parse_rational(p.at(0).get<std::string>()),
                     parse_rational(p.at(1).get<std::string>())});
    return IntervalSet::from_raw(raw);
  }
  if (kind == "atoms") {
    int n = space.kind == Space::Kind::atoms ? space.atom_space.atom_count
                                             : j.at("atom_count").get<int>();
    return AtomSet::of(n, j.at("atoms").get<std::vector<int>>());
  }
  throw ConfigError("unknown set kind '" + kind + "'");
}

Json folner_to_json(const Space& space, const FolnerCertificate& cert) {
  Json j;
  j["schema"] = "v1";
  j["F"] = set_to_json(cert.f);
  j["Y"] = set_to_json(cert.y);
  j["Z"] = set_to_json(cert.z);
  j["epsilon"] = rational_json(cert.epsilon);
  if (cert.step.use_ball)
    j["k"] = cert.step.k;
  else
    j["S_size"] = cert.step.s.size();
  j["nu_F"] = rational_json(cert.nu_f);
  j["boundary_measure"] = rational_json(cert.boundary_measure);
  j["maximal"] = cert.maximal;
  j["cells"] = cert.cells;
  j["search_order"] = cert.search_order;
  j["nu_Y"] = rational_json(space.measure_of(cert.y));
  return j;
}

Json complement_to_json(const ComplementReport& report) {
  Json j;
  j["schema"] = "v1";
  j["pass"] = report.pass;
  j["checked"] = report.checked;
  Json v = Json::array();
  for (const auto& viol : report.violations)
    v.push_back({{"cells", viol.cells},
                 {"lhs", rational_json(viol.lhs)},
                 {"rhs", rational_json(viol.rhs)}});
  j["violations"] = v;
  return j;
}

Json exhaustion_to_json(const Space& space, const ExhaustionReport& report) {
  Json j;
  j["schema"] = "v1";
  j["c"] = rational_json(report.c);
  j["N0"] = report.n0;
  j["s_version"] = report.s_version;
  j["all_verified"] = report.all_verified();
  Json stages = Json::array();
  for (const auto& st : report.stages) {
    Json js;
    js["n"] = st.n;
    js["nu_Z"] = rational_json(st.nu_z);
    js["alpha_n"] = rational_json(st.alpha_n);
    if (st.step.use_ball) js["k_n"] = st.step.k;
    if (st.m_n > 0) js["m_n"] = st.m_n;
    js["folner_eps"] = rational_json(st.folner_eps);
    js["nu_F"] = rational_json(st.folner.nu_f);
    js["F_cells"] = st.folner.cells;
    js["f_bound"] = rational_json(st.f_bound);
    js["f_bound_ok"] = st.f_bound_ok;
    js["nu_Ybar"] = rational_json(st.nu_ybar);
    js["c_Ybar"] = rational_json(st.c_ybar);
    js["Ybar_verified"] = st.ybar_verified;
    if (!st.ybar_witness.empty()) js["Ybar_witness"] = st.ybar_witness;
    js["nu_Yn"] = rational_json(st.nu_yn);
    js["Yn_verified"] = st.yn_verified;
    if (st.k_union > 0) js["k_union"] = st.k_union;
    js["c_union"] = rational_json(st.c_union);
    if (!st.yn_witness.empty()) js["Yn_witness"] = st.yn_witness;
    stages.push_back(js);
  }
  j["stages"] = stages;
  j["nu_Y"] = rational_json(space.measure_of(report.y));
  Json checks = Json::array();
  for (const auto& pc : report.profile_checks)
    checks.push_back({{"alpha", rational_json(pc.alpha)},
                      {"claimed_c", rational_json(pc.claimed_c)},
                      {"valid", pc.valid},
                      {"witness", pc.witness}});
  j["profile_checks"] = checks;
  return j;
}

std::string exhaustion_to_table(const Space& space, const ExhaustionReport& report) {
  (void)space;
  std::ostringstream os;
  os << "stage  nu(Z)        alpha_n      k/m   nu(F)        nu(Ybar)     nu(Yn)       verified\n";
  for (const auto& st : report.stages) {
    os << "  " << st.n << "    " << format_rational(st.nu_z) << "  "
       << format_rational(st.alpha_n) << "  "
       << (st.step.use_ball ? "k=" + std::to_string(st.step.k) : "m=" + std::to_string(st.m_n))
       << "  " << format_rational(st.folner.nu_f) << "  " << format_rational(st.nu_ybar)
       << "  " << format_rational(st.nu_yn) << "  "
       << (st.ybar_verified && st.yn_verified && st.f_bound_ok ? "yes" : "NO") << "\n";
  }
  return os.str();
}

Json admissibility_to_json(const AdmissibilityReport& report) {
  Json j;
  j["schema"] = "v1";
  j["k"] = report.k;
  j["tolerance"] = rational_json(report.tolerance);
  j["word_count"] = report.word_count;
  j["monotone"] = report.monotone;
  j["verdict"] = report.verdict();
  Json rows = Json::array();
  for (size_t i = 0; i < report.delta.size(); ++i) {
    Json row;
    row["sample"] = report.sample_names[i];
    Json ds = Json::array();
    for (const auto& d : report.delta[i]) ds.push_back(rational_json(d));
    row["delta"] = ds;
    rows.push_back(row);
  }
  j["discrepancies"] = rows;
  return j;
}

Json action_to_json(const ActionModel& action) {
  Json j;
  j["schema"] = "v1";
  const auto& g = action.group();
  switch (g.kind()) {
    case GroupKind::free_group: j["group"] = {{"kind", "free"}, {"rank", g.rank()}}; break;
    case GroupKind::integer_lattice:
      j["group"] = {{"kind", "lattice"}, {"dim", g.rank()}};
      break;
    case GroupKind::matrix_mod_n:
      j["group"] = {{"kind", "matrix-mod-n"}, {"modulus", g.modulus()}};
      break;
    case GroupKind::finite_cyclic:
      j["group"] = {{"kind", "cyclic"}, {"order", g.modulus()}};
      break;
  }
  Json gens = Json::array();
  for (const auto& gen : g.generators()) {
    Json jg;
    jg["label"] = gen.label;
    jg["length"] = gen.length;
    jg["element"] = gen.element.data;
    gens.push_back(jg);
  }
  j["generators"] = gens;
  if (action.space().kind == Space::Kind::atoms) {
    Json w = Json::array();
    for (const auto& x : action.space().atom_space.weights) w.push_back(format_rational(x));
    j["space"] = {{"kind", "atoms"}, {"weights", w}};
    Json maps = Json::array();
    for (const auto& m : action.generator_maps()) maps.push_back(m.perm);
    j["maps"] = maps;
  } else {
    j["space"] = {{"kind", "unit-interval"}};
    Json maps = Json::array();
    for (const auto& m : action.generator_maps()) {
      Json pieces = Json::array();
      for (const auto& p : m.interval_map.pieces())
        pieces.push_back({format_rational(p.lo), format_rational(p.hi),
                          format_rational(p.slope), format_rational(p.intercept)});
      maps.push_back(pieces);
    }
    j["maps"] = maps;
  }
  return j;
}

std::string space_to_dot(const MeasuredMetricSpace& space) {
  std::ostringstream os;
  os << "graph approximating_space {\n";
  for (int i = 0; i < space.n; ++i)
    os << "  n" << i << " [label=\"" << space.labels[i] << "\", weight=\""
       << format_rational(space.weights[i]) << "\"];\n";
  for (int i = 0; i < space.n; ++i)
    for (int j = i + 1; j < space.n; ++j)
      if (space.dist[i][j] == 1) os << "  n" << i << " -- n" << j << " [label=\"1\"];\n";
  os << "}\n";
  return os.str();
}

std::string space_to_csv(const MeasuredMetricSpace& space) {
  std::ostringstream os;
  os << "label,weight";
  for (int j = 0; j < space.n; ++j) os << ",d" << j;
  os << "\n";
  for (int i = 0; i < space.n; ++i) {
    os << space.labels[i] << "," << format_rational(space.weights[i]);
    for (int j = 0; j < space.n; ++j) {
      os << ",";
      if (space.dist[i][j] == kInfDist)
        os << "inf";
      else
        os << space.dist[i][j];
    }
    os << "\n";
  }
  return os.str();
}

MeasuredMetricSpace space_from_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw IOError("empty space CSV");
  std::vector<std::string> labels;
  std::vector<Rational> weights;
  std::vector<std::vector<int>> dist;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::string fld;
    std::istringstream ls(line);
    while (std::getline(ls, fld, ',')) fields.push_back(fld);
    if (fields.size() < 3) throw IOError("malformed space CSV row: " + line);
    labels.push_back(fields[0]);
    weights.push_back(parse_rational(fields[1]));
    std::vector<int> row;
    for (size_t i = 2; i < fields.size(); ++i)
      row.push_back(fields[i] == "inf" ? kInfDist : std::stoi(fields[i]));
    dist.push_back(std::move(row));
  }
  return MeasuredMetricSpace::create(std::move(dist), std::move(weights), std::move(labels));
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IOError("cannot open " + path + " for writing");
  f << content;
  if (!f) throw IOError("write failed for " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IOError("cannot open " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace ergo
