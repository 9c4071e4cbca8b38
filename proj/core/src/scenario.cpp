#include "ergo/scenario.hpp"

#include <array>
#include <map>
#include <numeric>

namespace ergo {

namespace {

Scenario build_rotation(const ScenarioSpec& spec) {
  Rational angle = spec.angle;
  while (angle < 0) angle += 1;
  while (angle >= 1) angle -= 1;
  if (angle == 0) throw BadParams("rotation angle must be nonzero mod 1");
  GroupModel group = GroupModel::integer_lattice(1);
  std::vector<GeneratorMap> maps(2);
  maps[0].interval_map = PiecewiseAffine::rotation(angle);
  maps[1].interval_map = PiecewiseAffine::rotation(1 - angle);
  Scenario s{ActionModel(std::move(group), Space::unit_interval(), std::move(maps)),
             {},
             "rotation by " + format_rational(angle)};
  return s;
}

Scenario build_odometer(const ScenarioSpec& spec) {
  if (spec.depth < 1 || spec.depth > 20) throw BadParams("odometer depth out of range");
  const int n = 1 << spec.depth;
  GroupModel group = GroupModel::integer_lattice(1);
  std::vector<GeneratorMap> maps(2);
  maps[0].perm.resize(n);
  maps[1].perm.resize(n);
  for (int i = 0; i < n; ++i) {
    maps[0].perm[i] = (i + 1) & (n - 1);  // add one with carry
    maps[1].perm[i] = (i + n - 1) & (n - 1);
  }
  Scenario s{ActionModel(std::move(group), Space::atoms(WeightedAtomSpace::uniform(n)),
                         std::move(maps)),
             {},
             "dyadic odometer, depth " + std::to_string(spec.depth)};
  return s;
}

int64_t mod_p(int64_t v, int64_t p) {
  int64_t r = v % p;
  return r < 0 ? r + p : r;
}

Scenario build_sl2_torus(const ScenarioSpec& spec) {
  const int64_t p = spec.p;
  if (p < 3) throw BadParams("sl2-torus needs p >= 3");
  GroupModel group = GroupModel::matrix_mod_n(
      p, {{"a", {1, 2, 0, 1}}, {"b", {1, 0, 2, 1}}});
  // atoms: (x, y) != (0, 0), index (x * p + y) compacted
  const int n = static_cast<int>(p * p - 1);
  auto index_of = [&](int64_t x, int64_t y) {
    int64_t flat = x * p + y;
    return static_cast<int>(flat - 1);  // skip (0,0)
  };
  std::vector<GeneratorMap> maps(group.generators().size());
  for (size_t gi = 0; gi < group.generators().size(); ++gi) {
    const auto& mat = group.generators()[gi].element.data;
    maps[gi].perm.resize(n);
    for (int64_t x = 0; x < p; ++x)
      for (int64_t y = 0; y < p; ++y) {
        if (x == 0 && y == 0) continue;
        int64_t nx = mod_p(mat[0] * x + mat[1] * y, p);
        int64_t ny = mod_p(mat[2] * x + mat[3] * y, p);
        maps[gi].perm[index_of(x, y)] = index_of(nx, ny);
      }
  }
  Scenario s{ActionModel(std::move(group), Space::atoms(WeightedAtomSpace::uniform(n)),
                         std::move(maps)),
             {},
             "SL(2,Z/" + std::to_string(p) + ") on the punctured torus"};
  return s;
}

Scenario build_schreier(const ScenarioSpec& spec) {
  const int64_t p = spec.p;
  if (p < 3) throw BadParams("schreier-sl2p needs p >= 3");
  GroupModel group = GroupModel::matrix_mod_n(
      p, {{"a", {1, 2, 0, 1}}, {"b", {1, 0, 2, 1}}});
  // enumerate SL(2, Z/p) in lexicographic order
  std::vector<std::array<int64_t, 4>> elems;
  std::map<std::array<int64_t, 4>, int> index;
  for (int64_t a = 0; a < p; ++a)
    for (int64_t b = 0; b < p; ++b)
      for (int64_t c = 0; c < p; ++c)
        for (int64_t d = 0; d < p; ++d)
          if (mod_p(a * d - b * c, p) == 1) {
            index[{a, b, c, d}] = static_cast<int>(elems.size());
            elems.push_back({a, b, c, d});
          }
  const int n = static_cast<int>(elems.size());
  std::vector<GeneratorMap> maps(group.generators().size());
  for (size_t gi = 0; gi < group.generators().size(); ++gi) {
    const auto& g = group.generators()[gi].element.data;
    maps[gi].perm.resize(n);
    for (int i = 0; i < n; ++i) {
      const auto& m = elems[i];
      std::array<int64_t, 4> gm = {
          mod_p(g[0] * m[0] + g[1] * m[2], p), mod_p(g[0] * m[1] + g[1] * m[3], p),
          mod_p(g[2] * m[0] + g[3] * m[2], p), mod_p(g[2] * m[1] + g[3] * m[3], p)};
      maps[gi].perm[i] = index.at(gm);
    }
  }
  Scenario s{ActionModel(std::move(group), Space::atoms(WeightedAtomSpace::uniform(n)),
                         std::move(maps)),
             {},
             "Schreier action on SL(2,Z/" + std::to_string(p) + ")"};
  return s;
}

Scenario build_schmidt(const ScenarioSpec& spec) {
  const auto& sizes = spec.block_sizes;
  if (sizes.size() < 2) throw BadParams("schmidt-composite needs at least two blocks");
  for (int s : sizes)
    if (s < 2) throw BadParams("schmidt-composite blocks need at least two atoms");
  if (spec.block_ratio <= 0 || spec.block_ratio >= 1)
    throw BadParams("schmidt-composite block ratio must lie in (0,1)");

  const int blocks = static_cast<int>(sizes.size());
  int n = std::accumulate(sizes.begin(), sizes.end(), 0);
  std::vector<int> offset(blocks, 0);
  for (int b = 1; b < blocks; ++b) offset[b] = offset[b - 1] + sizes[b - 1];

  // block masses proportional to ratio^b, atoms uniform within a block
  Rational norm = 0;
  Rational pw = 1;
  std::vector<Rational> block_mass(blocks);
  for (int b = 0; b < blocks; ++b) {
    block_mass[b] = pw;
    norm += pw;
    pw *= spec.block_ratio;
  }
  std::vector<Rational> weights(n);
  for (int b = 0; b < blocks; ++b)
    for (int i = 0; i < sizes[b]; ++i)
      weights[offset[b] + i] = block_mass[b] / norm / sizes[b];

  GroupModel group = GroupModel::free_group(3);  // a: cycle, b: reversal, c: chain swap
  std::vector<GeneratorMap> maps(group.generators().size());
  std::vector<int> cycle(n), rev(n), chain(n);
  for (int b = 0; b < blocks; ++b)
    for (int i = 0; i < sizes[b]; ++i) {
      cycle[offset[b] + i] = offset[b] + (i + 1) % sizes[b];
      rev[offset[b] + i] = offset[b] + (sizes[b] - 1 - i);
    }
  for (int i = 0; i < n; ++i) chain[i] = i;
  for (int b = 0; b + 1 < blocks; ++b) {
    int last = offset[b] + sizes[b] - 1;
    int first = offset[b + 1];
    chain[last] = first;
    chain[first] = last;
  }
  std::vector<int> cycle_inv(n);
  for (int i = 0; i < n; ++i) cycle_inv[cycle[i]] = i;
  maps[0].perm = cycle;      // a
  maps[1].perm = cycle_inv;  // a^-1
  maps[2].perm = rev;        // b (involution)
  maps[3].perm = rev;        // b^-1
  maps[4].perm = chain;      // c (involution)
  maps[5].perm = chain;      // c^-1

  Scenario s{ActionModel(std::move(group),
                         Space::atoms(WeightedAtomSpace::with_weights(std::move(weights))),
                         std::move(maps)),
             {},
             "expander blocks with shrinking tails, " + std::to_string(blocks) + " blocks"};
  return s;
}

Scenario build_nasty_z(const ScenarioSpec& spec) {
  const int m = spec.truncation;
  if (m < 2 || m > 10) throw BadParams("nasty-z truncation out of range (2..10)");

  // A_n: n intervals of length 4^-n at the left ends of [(j-1)/n, j/n)
  std::vector<IntervalSet> a_sets(m + 1);
  a_sets[0] = IntervalSet::full();
  for (int n = 1; n <= m; ++n) {
    Rational len = 1;
    for (int i = 0; i < n; ++i) len /= 4;
    std::vector<Interval> parts;
    for (int j = 0; j < n; ++j)
      parts.push_back({Rational(j, n), Rational(j, n) + len});
    a_sets[n] = IntervalSet::from_intervals(std::move(parts));
  }
  // B_n = A_n minus the higher levels; partitions [0,1) exactly
  std::vector<IntervalSet> b_sets(m + 1);
  for (int n = 0; n <= m; ++n) {
    IntervalSet b = a_sets[n];
    for (int h = n + 1; h <= m; ++h) b = set_difference(b, a_sets[h]);
    b_sets[n] = b;
  }
  // monotone rearrangement: B_0, B_1, ... stacked left to right by
  // piecewise translations
  std::vector<AffinePiece> pieces;
  Rational cursor = 0;
  for (int n = 0; n <= m; ++n)
    for (const auto& iv : b_sets[n].parts()) {
      pieces.push_back({iv.lo, iv.hi, Rational(1), cursor - iv.lo});
      cursor += iv.hi - iv.lo;
    }
  if (cursor != 1) throw BadParams("nasty-z rearrangement does not fill [0,1)");
  PiecewiseAffine f = PiecewiseAffine::from_pieces(std::move(pieces));

  GroupModel group = GroupModel::integer_lattice(1);
  std::vector<GeneratorMap> maps(2);
  maps[0].interval_map = f;
  maps[1].interval_map = f.inverted();
  Scenario s{ActionModel(std::move(group), Space::unit_interval(), std::move(maps)),
             {},
             "measured-expander example, truncation M=" + std::to_string(m)};
  for (int n = 1; n <= m; ++n) {
    PartitionSpec ps;
    ps.kind = PartitionSpec::Kind::uniform_arcs;
    ps.n = n;
    s.partitions.push_back(build_partition(s.action.space(), ps));
  }
  // discarded tail mass sum_{n > M} n 4^-n = x^(M+1)((M+1) - M x)/(1-x)^2
  Rational x(1, 4);
  Rational xp = 1;
  for (int i = 0; i < m + 1; ++i) xp *= x;
  s.mass_defect = xp * ((m + 1) - m * x) / ((1 - x) * (1 - x));
  return s;
}

}  // namespace

Scenario scenario_build(const ScenarioSpec& spec) {
  if (spec.name == "rotation") return build_rotation(spec);
  if (spec.name == "odometer") return build_odometer(spec);
  if (spec.name == "sl2-torus") return build_sl2_torus(spec);
  if (spec.name == "schreier-sl2p") return build_schreier(spec);
  if (spec.name == "schmidt-composite") return build_schmidt(spec);
  if (spec.name == "nasty-z") return build_nasty_z(spec);
  throw BadParams("unknown scenario '" + spec.name + "'");
}

std::vector<Set> schmidt_tails(const Scenario& scenario, const std::vector<int>& block_sizes) {
  const Space& space = scenario.action.space();
  if (space.kind != Space::Kind::atoms) throw BadParams("schmidt tails need an atom model");
  const int n = space.atom_space.atom_count;
  std::vector<Set> tails;
  int offset = 0;
  for (size_t b = 0; b < block_sizes.size(); ++b) {
    offset += block_sizes[b];
    AtomSet tail(n);
    for (int i = offset; i < n; ++i) tail.set(i);
    tails.push_back(tail);
  }
  return tails;
}

}  // namespace ergo
