#include "ergo/expansion.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "ergo/spectral.hpp"

namespace ergo {

namespace {

bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct Best {
  bool set = false;
  long long img_n = 0, a_n = 0;
  Rational img_r, a_r;
  std::vector<int> witness;

  void offer_fast(long long img, long long a, const std::vector<int>& w) {
    if (set) {
      long long lhs = img * a_n, rhs = img_n * a;
      if (lhs > rhs || (lhs == rhs && !lex_less(w, witness))) return;
    }
    set = true;
    img_n = img;
    a_n = a;
    witness = w;
  }

  void offer_rat(const Rational& img, const Rational& a, const std::vector<int>& w) {
    if (set) {
      Rational lhs = img * a_r, rhs = img_r * a;
      if (lhs > rhs || (lhs == rhs && !lex_less(w, witness))) return;
    }
    set = true;
    img_r = img;
    a_r = a;
    witness = w;
  }

  // merge another best into this one (suffix-min combine)
  void absorb_fast(const Best& o) {
    if (o.set) offer_fast(o.img_n, o.a_n, o.witness);
  }
  void absorb_rat(const Best& o) {
    if (o.set) offer_rat(o.img_r, o.a_r, o.witness);
  }

  Rational c_star_fast() const { return Rational(img_n, a_n) - 1; }
  Rational c_star_rat() const { return img_r / a_r - 1; }
};

// Exact minimization of nu(img(A))/nu(A) bucketed over an ascending alpha
// grid; returns one Best per alpha (admissible range [alpha*T, T/2]).
std::vector<Best> exact_profile_mins(const CellBasis& basis, const std::vector<Set>& images,
                                     const Space& space, const std::vector<Rational>& alphas) {
  SubsetAccumulator acc(basis, images, space);
  const Rational hi = basis.total / 2;
  const size_t na = alphas.size();
  std::vector<Best> buckets(na);
  if (acc.fast()) {
    // bucket i accepts nu_a >= alpha_i * T: num_a * den(alpha_i) >= num(alpha_i) * T_num
    const long long t_num = numerator(Rational(basis.total * acc.den())).convert_to<long long>();
    std::vector<long long> a_den(na), rhs(na);
    for (size_t i = 0; i < na; ++i) {
      a_den[i] = denominator(alphas[i]).convert_to<long long>();
      rhs[i] = numerator(alphas[i]).convert_to<long long>() * t_num;
    }
    enumerate_subsets(basis, acc, hi, [&](const std::vector<int>& chosen) {
      long long numa = acc.num_a();
      for (size_t i = na; i-- > 0;) {
        if (numa * a_den[i] >= rhs[i]) {
          buckets[i].offer_fast(acc.num_img(), numa, chosen);
          return;
        }
      }
    });
  } else {
    std::vector<Rational> floors(na);
    for (size_t i = 0; i < na; ++i) floors[i] = alphas[i] * basis.total;
    enumerate_subsets(basis, acc, hi, [&](const std::vector<int>& chosen) {
      Rational nu = acc.nu_a();
      for (size_t i = na; i-- > 0;) {
        if (nu >= floors[i]) {
          buckets[i].offer_rat(acc.nu_img(), nu, chosen);
          return;
        }
      }
    });
  }
  // c*(alpha_i) ranges over all subsets with nu >= alpha_i*T: fold the
  // higher buckets down
  bool fast = acc.fast();
  for (size_t i = na - 1; i-- > 0;) {
    if (fast)
      buckets[i].absorb_fast(buckets[i + 1]);
    else
      buckets[i].absorb_rat(buckets[i + 1]);
  }
  if (fast)
    for (auto& b : buckets)
      if (b.set) {
        b.img_r = Rational(b.img_n, 1);
        b.a_r = Rational(b.a_n, 1);
      }
  return buckets;
}

struct Evaluator {
  const CellBasis* basis;
  const std::vector<Set>* images;
  const Space* space;
  bool fast = false;
  long long den = 1;
  std::vector<uint64_t> img_masks;
  std::vector<long long> atom_w;
  std::vector<long long> cell_num;

  explicit Evaluator(const CellBasis& b, const std::vector<Set>& im, const Space& sp)
      : basis(&b), images(&im), space(&sp) {
    SubsetAccumulator probe(b, im, sp);
    fast = probe.fast();
    if (fast) {
      den = probe.den();
      for (const auto& s : im) {
        uint64_t m = 0;
        for (int a : std::get<AtomSet>(s).atoms()) m |= 1ULL << a;
        img_masks.push_back(m);
      }
      const auto& w = sp.atom_space.weights;
      for (const auto& x : w)
        atom_w.push_back(numerator(Rational(x * den)).convert_to<long long>());
      for (const auto& x : b.nu)
        cell_num.push_back(numerator(Rational(x * den)).convert_to<long long>());
    }
  }

  std::pair<Rational, Rational> ratio_parts(const std::vector<char>& in) const {
    if (fast) {
      uint64_t img = 0;
      long long a = 0;
      for (int c = 0; c < basis->size(); ++c)
        if (in[c]) {
          img |= img_masks[c];
          a += cell_num[c];
        }
      long long s = 0;
      while (img) {
        s += atom_w[std::countr_zero(img)];
        img &= img - 1;
      }
      return {Rational(s, den), Rational(a, den)};
    }
    Set img = space->empty_set();
    Rational a = 0;
    for (int c = 0; c < basis->size(); ++c)
      if (in[c]) {
        img = set_union(img, (*images)[c]);
        a += basis->nu[c];
      }
    return {space->measure_of(img), a};
  }
};

}  // namespace

const ProfileEntry* ExpansionProfile::find(const Rational& alpha, int k) const {
  for (const auto& e : entries)
    if (e.alpha == alpha && e.k == k) return &e;
  return nullptr;
}

const ProfileEntry& ExpansionProfile::at_alpha(const Rational& alpha) const {
  const ProfileEntry* fallback = nullptr;
  for (const auto& e : entries) {
    if (e.alpha != alpha) continue;
    if (e.c_star > 0) return e;  // entries sorted by k: first positive wins
    fallback = &e;
  }
  if (fallback) return *fallback;
  throw ProfileGap("profile has no entry at alpha = " + format_rational(alpha));
}

namespace {

void validate_request(const ProfileRequest& req) {
  if (req.alphas.empty() || req.ks.empty())
    throw InvalidRange("profile request needs alphas and ks");
  for (const auto& a : req.alphas)
    if (a <= 0 || a > Rational(1, 2))
      throw InvalidRange("alpha grid must lie in (0, 1/2]");
  for (int k : req.ks)
    if (k < 0) throw InvalidRange("k must be >= 0");
}

ExpansionProfile profile_over_cells(const ActionModel& action, const Set& domain,
                                    const ProfileRequest& req,
                                    const std::vector<Set>* granularity_cells,
                                    ProfileScope scope, bool throw_on_empty) {
  validate_request(req);
  CellBasis basis = granularity_cells
                        ? partition_cells(*granularity_cells, action.space(), domain)
                        : atom_cells(action, domain);
  if (basis.size() == 0 || basis.total == 0) throw EmptyDomain("domain has measure zero");
  std::vector<Rational> alphas = req.alphas;
  std::sort(alphas.begin(), alphas.end());
  alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());

  ExpansionProfile profile;
  profile.scope = scope;
  profile.strategy = req.strategy == Strategy::exact ? "exact" : "local-search";
  profile.granularity = granularity_cells ? "partition" : "atoms";
  profile.seed = req.seed;

  std::vector<int> ks = req.ks;
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

  for (int k : ks) {
    std::vector<Set> images = cell_images_k(action, basis, k, domain);
    if (req.strategy == Strategy::exact) {
      if (basis.size() > req.max_exact_cells)
        throw TooLargeForExact("exact profile capped at " +
                               std::to_string(req.max_exact_cells) + " cells");
      std::vector<Best> mins = exact_profile_mins(basis, images, action.space(), alphas);
      for (size_t i = 0; i < alphas.size(); ++i) {
        if (!mins[i].set) {
          if (throw_on_empty)
            throw EmptyAdmissibleRange("no cell union with measure in [" +
                                       format_rational(alphas[i] * basis.total) + ", " +
                                       format_rational(basis.total / 2) + "]");
          continue;
        }
        Rational c = mins[i].img_r / mins[i].a_r - 1;
        profile.entries.push_back({alphas[i], k, c, mins[i].witness});
      }
    } else {
      for (const auto& alpha : alphas) {
        auto w = min_ratio_local_search(basis, images, action.space(), alpha * basis.total,
                                        basis.total / 2, req.seed, req.restarts);
        if (!w) {
          if (throw_on_empty) throw EmptyAdmissibleRange("no admissible cell union");
          continue;
        }
        profile.entries.push_back({alpha, k, w->ratio() - 1, w->cells});
      }
    }
  }
  std::sort(profile.entries.begin(), profile.entries.end(),
            [](const ProfileEntry& a, const ProfileEntry& b) {
              return a.alpha != b.alpha ? a.alpha < b.alpha : a.k < b.k;
            });
  return profile;
}

}  // namespace

ExpansionProfile expansion_profile(const ActionModel& action, const ProfileRequest& req,
                                   const std::vector<Set>* granularity_cells) {
  return profile_over_cells(action, action.space().full_set(), req, granularity_cells,
                            ProfileScope::global, /*throw_on_empty=*/true);
}

ExpansionProfile domain_profile(const ActionModel& action, const Set& domain,
                                const ProfileRequest& req,
                                const std::vector<Set>* granularity_cells) {
  if (action.space().measure_of(domain) == 0) throw EmptyDomain("domain has measure zero");
  return profile_over_cells(action, domain, req, granularity_cells, ProfileScope::domain,
                            /*throw_on_empty=*/false);
}

ExpansionProfile expansion_profile(const MeasuredMetricSpace& space, const ProfileRequest& req) {
  validate_request(req);
  CellBasis basis = point_cells(space);
  Space phantom = Space::atoms(WeightedAtomSpace::with_weights(space.weights));
  std::vector<Rational> alphas = req.alphas;
  std::sort(alphas.begin(), alphas.end());
  alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());

  ExpansionProfile profile;
  profile.scope = ProfileScope::measured_space;
  profile.strategy = req.strategy == Strategy::exact ? "exact" : "local-search";
  profile.granularity = "points";
  profile.seed = req.seed;
  for (int k : req.ks) {
    std::vector<Set> images = metric_images(space, k);
    if (req.strategy == Strategy::exact) {
      if (basis.size() > req.max_exact_cells)
        throw TooLargeForExact("exact profile capped at " +
                               std::to_string(req.max_exact_cells) + " points");
      std::vector<Best> mins = exact_profile_mins(basis, images, phantom, alphas);
      for (size_t i = 0; i < alphas.size(); ++i) {
        if (!mins[i].set) throw EmptyAdmissibleRange("no admissible point set");
        profile.entries.push_back({alphas[i], k, mins[i].img_r / mins[i].a_r - 1,
                                   mins[i].witness});
      }
    } else {
      for (const auto& alpha : alphas) {
        auto w = min_ratio_local_search(basis, images, phantom, alpha * basis.total,
                                        basis.total / 2, req.seed, req.restarts);
        if (!w) throw EmptyAdmissibleRange("no admissible point set");
        profile.entries.push_back({alpha, k, w->ratio() - 1, w->cells});
      }
    }
  }
  std::sort(profile.entries.begin(), profile.entries.end(),
            [](const ProfileEntry& a, const ProfileEntry& b) {
              return a.alpha != b.alpha ? a.alpha < b.alpha : a.k < b.k;
            });
  return profile;
}

std::optional<RatioWitness> min_ratio_exhaustive(const CellBasis& basis,
                                                 const std::vector<Set>& images,
                                                 const Space& space, const Rational& lo,
                                                 const Rational& hi) {
  SubsetAccumulator acc(basis, images, space);
  Best best;
  if (acc.fast()) {
    const long long lo_den = denominator(lo).convert_to<long long>();
    const long long lo_rhs =
        numerator(lo).convert_to<long long>() * acc.den();
    enumerate_subsets(basis, acc, hi, [&](const std::vector<int>& chosen) {
      if (acc.num_a() * lo_den < lo_rhs) return;
      best.offer_fast(acc.num_img(), acc.num_a(), chosen);
    });
    if (!best.set) return std::nullopt;
    return RatioWitness{Rational(best.a_n, acc.den()), Rational(best.img_n, acc.den()),
                        best.witness};
  }
  enumerate_subsets(basis, acc, hi, [&](const std::vector<int>& chosen) {
    if (acc.nu_a() < lo) return;
    best.offer_rat(acc.nu_img(), acc.nu_a(), chosen);
  });
  if (!best.set) return std::nullopt;
  return RatioWitness{best.a_r, best.img_r, best.witness};
}

std::optional<RatioWitness> min_boundary_ratio_exhaustive(const CellBasis& basis,
                                                          const std::vector<Set>& images,
                                                          const Space& space,
                                                          const Rational& lo,
                                                          const Rational& hi) {
  SubsetAccumulator acc(basis, images, space);
  Best best;
  if (acc.fast()) {
    const long long lo_den = denominator(lo).convert_to<long long>();
    const long long lo_rhs = numerator(lo).convert_to<long long>() * acc.den();
    enumerate_subsets(basis, acc, hi, [&](const std::vector<int>& chosen) {
      if (acc.num_a() * lo_den < lo_rhs) return;
      best.offer_fast(acc.num_img() - acc.num_inter(), acc.num_a(), chosen);
    });
    if (!best.set) return std::nullopt;
    return RatioWitness{Rational(best.a_n, acc.den()), Rational(best.img_n, acc.den()),
                        best.witness};
  }
  enumerate_subsets(basis, acc, hi, [&](const std::vector<int>& chosen) {
    if (acc.nu_a() < lo) return;
    best.offer_rat(acc.nu_img() - acc.nu_img_inter_a(), acc.nu_a(), chosen);
  });
  if (!best.set) return std::nullopt;
  return RatioWitness{best.a_r, best.img_r, best.witness};
}

std::optional<RatioWitness> min_ratio_local_search(const CellBasis& basis,
                                                   const std::vector<Set>& images,
                                                   const Space& space, const Rational& lo,
                                                   const Rational& hi, uint64_t seed,
                                                   int restarts) {
  const int m = basis.size();
  if (m == 0) return std::nullopt;
  Evaluator ev(basis, images, space);

  auto nu_of = [&](const std::vector<char>& in) {
    Rational s = 0;
    for (int c = 0; c < m; ++c)
      if (in[c]) s += basis.nu[c];
    return s;
  };
  auto admissible = [&](const Rational& nu) { return nu >= lo && nu <= hi && nu > 0; };

  std::optional<RatioWitness> best;
  auto offer = [&](const std::vector<char>& in) {
    auto [img, a] = ev.ratio_parts(in);
    std::vector<int> cells;
    for (int c = 0; c < m; ++c)
      if (in[c]) cells.push_back(c);
    if (!best || ratio_less(img, a, best->nu_img, best->nu_a) ||
        (img * best->nu_a == best->nu_img * a && lex_less(cells, best->cells)))
      best = RatioWitness{a, img, cells};
  };

  auto climb = [&](std::vector<char> in) {
    Rational nu = nu_of(in);
    if (!admissible(nu)) return;
    offer(in);
    bool improved = true;
    while (improved) {
      improved = false;
      auto [cur_img, cur_a] = ev.ratio_parts(in);
      int best_move = -1;
      Rational bm_img, bm_a;
      for (int c = 0; c < m; ++c) {
        Rational nnu = in[c] ? Rational(nu - basis.nu[c]) : Rational(nu + basis.nu[c]);
        if (!admissible(nnu)) continue;
        in[c] ^= 1;
        auto [img, a] = ev.ratio_parts(in);
        in[c] ^= 1;
        bool better = best_move < 0 ? ratio_less(img, a, cur_img, cur_a)
                                    : ratio_less(img, a, bm_img, bm_a);
        if (better) {
          best_move = c;
          bm_img = img;
          bm_a = a;
        }
      }
      if (best_move >= 0) {
        in[best_move] ^= 1;
        nu = nu_of(in);
        offer(in);
        improved = true;
      }
    }
  };

  // greedy ball-growth seeds from every cell
  for (int s0 = 0; s0 < m; ++s0) {
    std::vector<char> in(m, 0);
    in[s0] = 1;
    Rational nu = basis.nu[s0];
    while (nu < lo) {
      int pick = -1;
      Rational p_img, p_a;
      for (int c = 0; c < m; ++c) {
        if (in[c] || nu + basis.nu[c] > hi) continue;
        in[c] = 1;
        auto [img, a] = ev.ratio_parts(in);
        in[c] = 0;
        if (pick < 0 || ratio_less(img, a, p_img, p_a)) {
          pick = c;
          p_img = img;
          p_a = a;
        }
      }
      if (pick < 0) break;
      in[pick] = 1;
      nu += basis.nu[pick];
    }
    if (nu >= lo && nu <= hi) climb(in);
  }

  // seeded random restarts
  std::mt19937_64 rng(seed);
  for (int r = 0; r < restarts; ++r) {
    std::vector<char> in(m, 0);
    for (int c = 0; c < m; ++c) in[c] = static_cast<char>(rng() & 1);
    Rational nu = nu_of(in);
    for (int c = m - 1; c >= 0 && nu > hi; --c)
      if (in[c]) {
        in[c] = 0;
        nu -= basis.nu[c];
      }
    for (int c = 0; c < m && nu < lo; ++c)
      if (!in[c] && nu + basis.nu[c] <= hi) {
        in[c] = 1;
        nu += basis.nu[c];
      }
    if (admissible(nu)) climb(in);
  }
  return best;
}

CheegerResult cheeger_constant(const MeasuredMetricSpace& space, bool exact, int max_exact,
                               uint64_t seed) {
  CheegerResult res;
  const int n = space.n;
  if (n == 1) {
    res.infinite = true;
    return res;
  }
  if (exact) {
    if (n > max_exact)
      throw TooLargeForExact("exact Cheeger capped at " + std::to_string(max_exact) +
                             " points");
    std::vector<uint64_t> nb(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (space.dist[i][j] != kInfDist && space.dist[i][j] <= 1) nb[i] |= 1ULL << j;
    long long best_bd = -1, best_sz = 1;
    std::vector<int> witness, chosen;
    uint64_t amask = 0, nmask = 0;
    std::vector<uint64_t> nstack;
    std::function<void(int)> rec = [&](int start) {
      for (int c = start; c < n; ++c) {
        if (2 * (static_cast<int>(chosen.size()) + 1) > n) break;
        nstack.push_back(nmask);
        amask |= 1ULL << c;
        nmask |= nb[c];
        chosen.push_back(c);
        long long bd = std::popcount(nmask & ~amask);
        long long sz = static_cast<long long>(chosen.size());
        if (best_bd < 0 || bd * best_sz < best_bd * sz ||
            (bd * best_sz == best_bd * sz && lex_less(chosen, witness))) {
          best_bd = bd;
          best_sz = sz;
          witness = chosen;
        }
        rec(c + 1);
        chosen.pop_back();
        amask &= ~(1ULL << c);
        nmask = nstack.back();
        nstack.pop_back();
      }
    };
    rec(0);
    res.value = Rational(best_bd, best_sz);
    res.witness = witness;
    res.exact = true;
    return res;
  }

  // bracket mode: local-search upper bound over the counting objective
  MeasuredMetricSpace uniform = space;
  uniform.weights.assign(n, Rational(1, n));
  CellBasis basis = point_cells(uniform);
  Space phantom = Space::atoms(WeightedAtomSpace::uniform(n));
  std::vector<Set> images = metric_images(space, 1);
  auto w = min_ratio_local_search(basis, images, phantom, Rational(1, n), Rational(1, 2),
                                  seed, 64);
  if (!w) {
    res.infinite = true;
    return res;
  }
  // boundary ratio = |N1(A)|/|A| - 1 for the counting objective
  res.value = w->ratio() - 1;
  res.witness = w->cells;
  res.exact = false;

  std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
  int dmin = n, dmax = 0;
  for (int i = 0; i < n; ++i) {
    int deg = 0;
    for (int j = 0; j < n; ++j)
      if (i != j && space.dist[i][j] == 1) {
        adj[i][j] = 1;
        ++deg;
      }
    dmin = std::min(dmin, deg);
    dmax = std::max(dmax, deg);
  }
  res.lambda2 = normalized_laplacian_lambda2(adj);
  res.lower_spectral = dmax > 0 ? res.lambda2 / 2.0 * dmin / dmax : 0.0;
  return res;
}

}  // namespace ergo
