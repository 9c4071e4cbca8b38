#include "ergo/group.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace ergo {

bool GroupElement::is_identity() const {
  switch (kind) {
    case GroupKind::free_group: return data.empty();
    case GroupKind::integer_lattice:
      return std::all_of(data.begin(), data.end(), [](int64_t v) { return v == 0; });
    case GroupKind::matrix_mod_n: return data[0] == 1 && data[1] == 0 && data[2] == 0 && data[3] == 1;
    case GroupKind::finite_cyclic: return data[0] == 0;
  }
  return false;
}

namespace {

int64_t mod_reduce(int64_t v, int64_t n) {
  int64_t r = v % n;
  return r < 0 ? r + n : r;
}

// extended euclid; throws when a is not invertible mod n
int64_t mod_inverse(int64_t a, int64_t n) {
  int64_t t = 0, new_t = 1, r = n, new_r = mod_reduce(a, n);
  while (new_r != 0) {
    int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_tuple(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_tuple(new_r, r - q * new_r);
  }
  if (r != 1) throw InvalidModel("matrix determinant not invertible mod n");
  return mod_reduce(t, n);
}

std::vector<int64_t> reduce_word(const std::vector<int64_t>& a, const std::vector<int64_t>& b) {
  std::vector<int64_t> out = a;
  for (int64_t letter : b) {
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

}  // namespace

GroupModel GroupModel::free_group(int rank, const std::vector<int>& lengths) {
  if (rank <= 0) throw InvalidModel("free group needs positive rank");
  GroupModel m;
  m.kind_ = GroupKind::free_group;
  m.rank_ = rank;
  for (int i = 0; i < rank; ++i) {
    int len = lengths.empty() ? 1 : lengths.at(i);
    std::string base = rank <= 26 ? std::string(1, static_cast<char>('a' + i))
                                  : "a" + std::to_string(i);
    GroupElement g{GroupKind::free_group, {i + 1}};
    GroupElement gi{GroupKind::free_group, {-(i + 1)}};
    m.generators_.push_back({base, g, len});
    m.generators_.push_back({base + "^-1", gi, len});
  }
  m.validate();
  return m;
}

GroupModel GroupModel::integer_lattice(int dim, const std::vector<int>& lengths) {
  if (dim <= 0) throw InvalidModel("lattice needs positive dimension");
  GroupModel m;
  m.kind_ = GroupKind::integer_lattice;
  m.rank_ = dim;
  for (int i = 0; i < dim; ++i) {
    int len = lengths.empty() ? 1 : lengths.at(i);
    std::vector<int64_t> e(dim, 0), ei(dim, 0);
    e[i] = 1;
    ei[i] = -1;
    std::string base = dim == 1 ? "t" : "e" + std::to_string(i + 1);
    m.generators_.push_back({base, {GroupKind::integer_lattice, e}, len});
    m.generators_.push_back({base + "^-1", {GroupKind::integer_lattice, ei}, len});
  }
  m.validate();
  return m;
}

GroupModel GroupModel::matrix_mod_n(
    int64_t modulus, const std::vector<std::pair<std::string, std::array<int64_t, 4>>>& gens,
    const std::vector<int>& lengths) {
  if (modulus < 2) throw InvalidModel("matrix modulus must be at least 2");
  GroupModel m;
  m.kind_ = GroupKind::matrix_mod_n;
  m.modulus_ = modulus;
  for (size_t i = 0; i < gens.size(); ++i) {
    int len = lengths.empty() ? 1 : lengths.at(i);
    std::vector<int64_t> e(4);
    for (int j = 0; j < 4; ++j) e[j] = mod_reduce(gens[i].second[j], modulus);
    GroupElement g{GroupKind::matrix_mod_n, e};
    if (g.is_identity()) throw InvalidModel("identity listed as a generator");
    m.generators_.push_back({gens[i].first, g, len});
    GroupElement gi = m.inverse(g);
    if (!(gi == g)) m.generators_.push_back({gens[i].first + "^-1", gi, len});
  }
  // dedup while keeping first labels
  std::vector<Generator> uniq;
  for (auto& g : m.generators_) {
    bool seen = false;
    for (auto& u : uniq) seen = seen || u.element == g.element;
    if (!seen) uniq.push_back(g);
  }
  m.generators_ = std::move(uniq);
  m.validate();
  return m;
}

GroupModel GroupModel::finite_cyclic(int64_t order, int step_length) {
  if (order < 1) throw InvalidModel("cyclic order must be positive");
  GroupModel m;
  m.kind_ = GroupKind::finite_cyclic;
  m.modulus_ = order;
  if (order >= 2) {
    GroupElement s{GroupKind::finite_cyclic, {1}};
    m.generators_.push_back({"s", s, step_length});
    if (order > 2)
      m.generators_.push_back({"s^-1", {GroupKind::finite_cyclic, {order - 1}}, step_length});
  }
  m.validate();
  return m;
}

GroupElement GroupModel::identity() const {
  switch (kind_) {
    case GroupKind::free_group: return {kind_, {}};
    case GroupKind::integer_lattice: return {kind_, std::vector<int64_t>(rank_, 0)};
    case GroupKind::matrix_mod_n: return {kind_, {1, 0, 0, 1}};
    case GroupKind::finite_cyclic: return {kind_, {0}};
  }
  throw InvalidModel("unknown group kind");
}

GroupElement GroupModel::multiply(const GroupElement& g, const GroupElement& h) const {
  if (g.kind != kind_ || h.kind != kind_) throw ModelMismatch("elements from a different model");
  switch (kind_) {
    case GroupKind::free_group:
      return {kind_, reduce_word(g.data, h.data)};
    case GroupKind::integer_lattice: {
      std::vector<int64_t> v(rank_);
      for (int i = 0; i < rank_; ++i) v[i] = g.data[i] + h.data[i];
      return {kind_, v};
    }
    case GroupKind::matrix_mod_n: {
      const auto& a = g.data;
      const auto& b = h.data;
      std::vector<int64_t> c(4);
      c[0] = mod_reduce(a[0] * b[0] + a[1] * b[2], modulus_);
      c[1] = mod_reduce(a[0] * b[1] + a[1] * b[3], modulus_);
      c[2] = mod_reduce(a[2] * b[0] + a[3] * b[2], modulus_);
      c[3] = mod_reduce(a[2] * b[1] + a[3] * b[3], modulus_);
      return {kind_, c};
    }
    case GroupKind::finite_cyclic:
      return {kind_, {mod_reduce(g.data[0] + h.data[0], modulus_)}};
  }
  throw InvalidModel("unknown group kind");
}

GroupElement GroupModel::inverse(const GroupElement& g) const {
  if (g.kind != kind_) throw ModelMismatch("element from a different model");
  switch (kind_) {
    case GroupKind::free_group: {
      std::vector<int64_t> w(g.data.rbegin(), g.data.rend());
      for (auto& l : w) l = -l;
      return {kind_, w};
    }
    case GroupKind::integer_lattice: {
      std::vector<int64_t> v = g.data;
      for (auto& x : v) x = -x;
      return {kind_, v};
    }
    case GroupKind::matrix_mod_n: {
      int64_t det = mod_reduce(g.data[0] * g.data[3] - g.data[1] * g.data[2], modulus_);
      int64_t inv = mod_inverse(det, modulus_);
      std::vector<int64_t> c(4);
      c[0] = mod_reduce(inv * g.data[3], modulus_);
      c[1] = mod_reduce(-inv * g.data[1], modulus_);
      c[2] = mod_reduce(-inv * g.data[2], modulus_);
      c[3] = mod_reduce(inv * g.data[0], modulus_);
      return {kind_, c};
    }
    case GroupKind::finite_cyclic:
      return {kind_, {mod_reduce(-g.data[0], modulus_)}};
  }
  throw InvalidModel("unknown group kind");
}

int GroupModel::generator_index(const GroupElement& g) const {
  for (size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].element == g) return static_cast<int>(i);
  return -1;
}

int GroupModel::inverse_generator(int i) const {
  int j = generator_index(inverse(generators_.at(i).element));
  if (j < 0) throw InvalidModel("generator list not closed under inverse");
  return j;
}

void GroupModel::validate() const {
  for (const auto& g : generators_) {
    if (g.length < 1) throw InvalidModel("generator length must be >= 1");
    if (g.element.is_identity()) throw InvalidModel("identity listed as a generator");
    if (g.element.kind != kind_) throw ModelMismatch("generator from a different model");
    if (kind_ == GroupKind::free_group && g.element.data.size() != 1)
      throw InvalidModel("free-group generators must be basis letters");
    if (kind_ == GroupKind::integer_lattice) {
      int units = 0;
      bool bad = false;
      for (int64_t v : g.element.data) {
        if (v == 0) continue;
        if (v == 1 || v == -1)
          ++units;
        else
          bad = true;
      }
      if (bad || units != 1) throw InvalidModel("lattice generators must be unit vectors");
    }
    int j = generator_index(inverse(g.element));
    if (j < 0) throw InvalidModel("generator list not closed under inverse");
    if (generators_[j].length != g.length)
      throw InvalidModel("inverse generator must carry the same length");
  }
}

std::vector<std::pair<GroupElement, int>> GroupModel::ball(int k, size_t cap) const {
  if (k < 0) throw InvalidRange("ball radius must be >= 0");
  std::map<GroupElement, int> dist;
  GroupElement id = identity();
  dist[id] = 0;
  std::vector<std::set<GroupElement>> buckets(k + 1);
  buckets[0].insert(id);
  for (int d = 0; d <= k; ++d) {
    for (const auto& g : buckets[d]) {
      auto it = dist.find(g);
      if (it == dist.end() || it->second != d) continue;  // stale entry
      for (const auto& gen : generators_) {
        int nd = d + gen.length;
        if (nd > k) continue;
        GroupElement h = multiply(gen.element, g);
        auto hit = dist.find(h);
        if (hit == dist.end() || hit->second > nd) {
          dist[h] = nd;
          buckets[nd].insert(h);
          if (dist.size() > cap)
            throw BallTooLarge("ball(" + std::to_string(k) + ") exceeds cap " + std::to_string(cap));
        }
      }
    }
  }
  std::vector<std::pair<GroupElement, int>> out(dist.begin(), dist.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second < b.second : a.first < b.first;
  });
  return out;
}

std::vector<int> GroupModel::factor(const GroupElement& g) const {
  if (g.kind != kind_) throw ModelMismatch("element from a different model");
  std::vector<int> word;
  switch (kind_) {
    case GroupKind::free_group: {
      for (int64_t letter : g.data) {
        GroupElement l{kind_, {letter}};
        int i = generator_index(l);
        if (i < 0) throw InvalidModel("letter without a listed generator");
        word.push_back(i);
      }
      return word;
    }
    case GroupKind::integer_lattice: {
      for (int axis = 0; axis < rank_; ++axis) {
        std::vector<int64_t> e(rank_, 0);
        e[axis] = g.data[axis] > 0 ? 1 : -1;
        int i = generator_index({kind_, e});
        if (i < 0) throw InvalidModel("lattice axis without a listed generator");
        for (int64_t c = 0; c < std::abs(g.data[axis]); ++c) word.push_back(i);
      }
      return word;
    }
    case GroupKind::finite_cyclic: {
      if (g.data[0] == 0) return word;
      int64_t fwd = g.data[0], bwd = modulus_ - g.data[0];
      int plus = generator_index({kind_, {1}});
      int minus = modulus_ == 2 ? plus : generator_index({kind_, {modulus_ - 1}});
      if (fwd <= bwd)
        word.assign(fwd, plus);
      else
        word.assign(bwd, minus);
      return word;
    }
    case GroupKind::matrix_mod_n: {
      // dijkstra with parent pointers until g is reached
      std::map<GroupElement, std::pair<int, std::pair<GroupElement, int>>> info;  // dist, (parent, gen)
      GroupElement id = identity();
      info[id] = {0, {id, -1}};
      std::map<int, std::set<GroupElement>> buckets;
      buckets[0].insert(id);
      const size_t cap = 1'000'000;
      while (!buckets.empty()) {
        auto bit = buckets.begin();
        int d = bit->first;
        std::set<GroupElement> layer = std::move(bit->second);
        buckets.erase(bit);
        for (const auto& cur : layer) {
          if (info[cur].first != d) continue;
          if (cur == g) {
            // unwind: cur = s_{i1} ... s_{im}; collect left-to-right
            std::vector<int> rev;
            GroupElement walk = cur;
            while (!(walk == id)) {
              auto& par = info[walk].second;
              rev.push_back(par.second);
              walk = par.first;
            }
            return rev;  // product order: g = gen[rev[0]] * gen[rev[1]] * ...
          }
          for (size_t gi = 0; gi < generators_.size(); ++gi) {
            int nd = d + generators_[gi].length;
            GroupElement h = multiply(generators_[gi].element, cur);
            auto hit = info.find(h);
            if (hit == info.end() || hit->second.first > nd) {
              info[h] = {nd, {cur, static_cast<int>(gi)}};
              buckets[nd].insert(h);
              if (info.size() > cap) throw BallTooLarge("factorization search exceeds cap");
            }
          }
        }
      }
      throw ModelMismatch("element not generated by the listed generators");
    }
  }
  throw InvalidModel("unknown group kind");
}

}  // namespace ergo
