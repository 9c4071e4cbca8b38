#include "ergo/action.hpp"

#include <algorithm>

namespace ergo {

Interval AffinePiece::image() const {
  Rational a = slope * lo + intercept;
  Rational b = slope * hi + intercept;
  if (a > b) std::swap(a, b);
  return {a, b};
}

PiecewiseAffine PiecewiseAffine::from_pieces(std::vector<AffinePiece> pieces) {
  if (pieces.empty()) throw InvalidModel("interval map needs at least one piece");
  std::sort(pieces.begin(), pieces.end(),
            [](const AffinePiece& a, const AffinePiece& b) { return a.lo < b.lo; });
  Rational cursor = 0;
  std::vector<Interval> images;
  for (const auto& p : pieces) {
    if (p.slope == 0) throw InvalidModel("interval map pieces must have nonzero slope");
    if (p.lo != cursor)
      throw InvalidModel("interval map domain pieces must partition [0,1)");
    if (p.hi <= p.lo) throw InvalidModel("empty interval map piece");
    cursor = p.hi;
    Interval im = p.image();
    if (im.lo < 0 || im.hi > 1) throw InvalidModel("interval map image leaves [0,1)");
    images.push_back(im);
  }
  if (cursor != 1) throw InvalidModel("interval map domain pieces must partition [0,1)");
  std::vector<Interval> sorted = images;
  std::sort(sorted.begin(), sorted.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  Rational icursor = 0;
  for (const auto& im : sorted) {
    if (im.lo != icursor) throw InvalidModel("interval map images must partition [0,1)");
    icursor = im.hi;
  }
  if (icursor != 1) throw InvalidModel("interval map images must partition [0,1)");
  PiecewiseAffine f;
  f.pieces_ = std::move(pieces);
  return f;
}

PiecewiseAffine PiecewiseAffine::identity() {
  PiecewiseAffine f;
  f.pieces_ = {{Rational(0), Rational(1), Rational(1), Rational(0)}};
  return f;
}

PiecewiseAffine PiecewiseAffine::rotation(const Rational& angle) {
  Rational r = angle;
  while (r < 0) r += 1;
  while (r >= 1) r -= 1;
  if (r == 0) return identity();
  return from_pieces({{Rational(0), 1 - r, Rational(1), r},
                      {1 - r, Rational(1), Rational(1), r - 1}});
}

IntervalSet PiecewiseAffine::apply(const IntervalSet& a) const {
  std::vector<Interval> out;
  for (const auto& p : pieces_) {
    IntervalSet dom = IntervalSet::from_intervals({{p.lo, p.hi}});
    IntervalSet clipped = set_intersect(a, dom);
    for (const auto& iv : clipped.parts()) {
      Rational x = p.slope * iv.lo + p.intercept;
      Rational y = p.slope * iv.hi + p.intercept;
      if (x > y) std::swap(x, y);
      out.push_back({x, y});
    }
  }
  return IntervalSet::from_intervals(std::move(out));
}

PiecewiseAffine PiecewiseAffine::inverted() const {
  std::vector<AffinePiece> inv;
  for (const auto& p : pieces_) {
    Interval im = p.image();
    // y = s x + t  =>  x = y/s - t/s
    inv.push_back({im.lo, im.hi, 1 / p.slope, -p.intercept / p.slope});
  }
  return from_pieces(std::move(inv));
}

PiecewiseAffine PiecewiseAffine::compose_after(const PiecewiseAffine& inner) const {
  std::vector<AffinePiece> out;
  for (const auto& p : inner.pieces_) {
    for (const auto& q : pieces_) {
      // source x in p.domain with inner(x) in q.domain
      Rational a = (q.lo - p.intercept) / p.slope;
      Rational b = (q.hi - p.intercept) / p.slope;
      if (a > b) std::swap(a, b);
      Rational lo = std::max(a, p.lo);
      Rational hi = std::min(b, p.hi);
      if (lo >= hi) continue;
      out.push_back({lo, hi, q.slope * p.slope, q.slope * p.intercept + q.intercept});
    }
  }
  return from_pieces(std::move(out));
}

bool PiecewiseAffine::unit_slopes() const {
  for (const auto& p : pieces_)
    if (p.slope != 1 && p.slope != -1) return false;
  return true;
}

Rational TransportRatio::sup() const {
  Rational m = 0;
  for (const auto& r : per_atom) m = std::max(m, r);
  for (const auto& [iv, r] : per_piece) m = std::max(m, r);
  return m;
}

ActionModel::ActionModel(GroupModel group, Space space, std::vector<GeneratorMap> maps)
    : group_(std::move(group)), space_(std::move(space)), maps_(std::move(maps)) {
  validate();
}

void ActionModel::validate() const {
  if (maps_.size() != group_.generators().size())
    throw InvalidModel("one map per generator required");
  const bool atoms = space_.kind == Space::Kind::atoms;
  for (size_t i = 0; i < maps_.size(); ++i) {
    if (atoms) {
      const auto& perm = maps_[i].perm;
      int n = space_.atom_space.atom_count;
      if (static_cast<int>(perm.size()) != n)
        throw InvalidModel("permutation size does not match the atom count");
      std::vector<bool> hit(n, false);
      for (int v : perm) {
        if (v < 0 || v >= n || hit[v]) throw InvalidModel("generator map is not a bijection");
        hit[v] = true;
      }
      // inverse generator's map must be the exact inverse permutation
      int j = group_.inverse_generator(static_cast<int>(i));
      const auto& iperm = maps_[j].perm;
      for (int x = 0; x < n; ++x)
        if (iperm[perm[x]] != x)
          throw InvalidModel("inverse generator's map is not the inverse bijection");
    } else {
      if (!maps_[i].perm.empty()) throw InvalidModel("atom map on an interval model");
      int j = group_.inverse_generator(static_cast<int>(i));
      PiecewiseAffine inv = maps_[i].interval_map.inverted();
      if (!(inv.pieces() == maps_[j].interval_map.pieces()))
        throw InvalidModel("inverse generator's map is not the inverse bijection");
    }
  }
}

Set ActionModel::apply_generator(int gen_index, const Set& a) const {
  const GeneratorMap& m = maps_.at(gen_index);
  if (space_.kind == Space::Kind::atoms) {
    const AtomSet& s = std::get<AtomSet>(a);
    AtomSet out(s.atom_count());
    for (int i : s.atoms()) out.set(m.perm[i]);
    return out;
  }
  return m.interval_map.apply(std::get<IntervalSet>(a));
}

Set ActionModel::transport(const GroupElement& g, const Set& a) const {
  std::vector<int> word = group_.factor(g);
  Set cur = a;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    cur = apply_generator(*it, cur);
  return cur;
}

Set ActionModel::k_neighborhood(int k, const Set& a) const {
  if (k < 0) throw InvalidRange("k must be >= 0");
  // U[d] = union of g.A over l(g) <= d; closure layer by layer over the
  // weighted generator lengths.
  std::vector<Set> u(k + 1, a);
  for (int d = 1; d <= k; ++d) {
    u[d] = u[d - 1];
    for (size_t i = 0; i < maps_.size(); ++i) {
      int len = group_.generators()[i].length;
      if (len > d) continue;
      u[d] = set_union(u[d], apply_generator(static_cast<int>(i), u[d - len]));
    }
  }
  return u[k];
}

Set ActionModel::s_neighborhood(const std::vector<GroupElement>& s, const Set& a) const {
  Set out = space_.empty_set();
  for (const auto& g : s) out = set_union(out, transport(g, a));
  return out;
}

void ActionModel::require_symmetric(const std::vector<GroupElement>& s) const {
  for (const auto& g : s) {
    GroupElement gi = group_.inverse(g);
    if (std::find(s.begin(), s.end(), gi) == s.end())
      throw AsymmetricGeneratingSet("generating set is not closed under inverses");
  }
}

Set ActionModel::boundary(const std::vector<GroupElement>& s, const Set& a) const {
  require_symmetric(s);
  return set_difference(s_neighborhood(s, a), a);
}

Set ActionModel::boundary_k(int k, const Set& a) const {
  return set_difference(k_neighborhood(k, a), a);
}

std::vector<int> ActionModel::word_permutation(const std::vector<int>& word) const {
  int n = space_.atom_space.atom_count;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  // word applies right to left: g = w0 w1 ... wm acts as w0(w1(...(x)))
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const auto& p = maps_.at(*it).perm;
    for (int i = 0; i < n; ++i) perm[i] = p[perm[i]];
  }
  return perm;
}

std::vector<int> ActionModel::element_permutation(const GroupElement& g) const {
  if (space_.kind != Space::Kind::atoms)
    throw InvalidModel("permutations exist only for atom models");
  return word_permutation(group_.factor(g));
}

TransportRatio ActionModel::transport_ratio(const GroupElement& g) const {
  TransportRatio r;
  if (space_.kind == Space::Kind::atoms) {
    const auto& w = space_.atom_space.weights;
    std::vector<int> perm = element_permutation(g);
    r.per_atom.resize(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) r.per_atom[i] = w[perm[i]] / w[i];
    return r;
  }
  std::vector<int> word = group_.factor(g);
  PiecewiseAffine f = PiecewiseAffine::identity();
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    f = maps_.at(*it).interval_map.compose_after(f);
  for (const auto& p : f.pieces()) {
    Rational ratio = p.slope < 0 ? -p.slope : p.slope;
    r.per_piece.push_back({{p.lo, p.hi}, ratio});
  }
  return r;
}

bool ActionModel::is_measure_preserving() const {
  if (space_.kind == Space::Kind::atoms) {
    const auto& w = space_.atom_space.weights;
    for (const auto& m : maps_)
      for (size_t i = 0; i < m.perm.size(); ++i)
        if (w[m.perm[i]] != w[i]) return false;
    return true;
  }
  for (const auto& m : maps_)
    if (!m.interval_map.unit_slopes()) return false;
  return true;
}

}  // namespace ergo
