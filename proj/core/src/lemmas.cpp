#include "ergo/lemmas.hpp"

#include <cmath>

namespace ergo {

std::vector<BetaEntry> extend_profile_above_half(const ExpansionProfile& profile,
                                                 const std::vector<Rational>& betas) {
  std::vector<BetaEntry> out;
  for (const auto& beta : betas) {
    if (beta < Rational(1, 2) || beta >= 1)
      throw InvalidRange("beta must lie in [1/2, 1)");
    Rational alpha = (1 - beta) / 2;
    const ProfileEntry* entry = nullptr;
    for (const auto& e : profile.entries)
      if (e.alpha == alpha && (entry == nullptr || (entry->c_star <= 0 && e.c_star > 0)))
        entry = &e;
    if (!entry)
      throw ProfileGap("profile missing alpha = " + format_rational(alpha) + " for beta = " +
                       format_rational(beta));
    Rational half_gap = (1 - beta) / (2 * beta);
    Rational b_bar = std::min(half_gap, Rational(entry->c_star * half_gap));
    out.push_back({beta, b_bar, entry->k});
  }
  return out;
}

int boost_to_constant(const Rational& b, int h, const Rational& c) {
  if (b <= 0) throw InvalidConstant("b must be positive");
  if (c <= 0 || c >= 1) throw InvalidConstant("c must lie in (0,1)");
  if (h < 1) throw InvalidRange("h must be >= 1");
  Rational pow = 1;
  const Rational base = 1 + b;
  const Rational target = 1 + c;
  int m = 0;
  while (pow < target) {
    pow *= base;
    ++m;
  }
  return m * h;
}

int subset_domain_bound(const Rational& b, int k0, const Rational& alpha,
                        const Rational& beta) {
  if (b <= 0) throw InvalidConstant("b must be positive");
  if (k0 < 1) throw InvalidRange("k0 must be >= 1");
  if (!(0 < alpha && alpha < beta && beta < 1))
    throw InvalidRange("need 0 < alpha < beta < 1");
  Rational level = alpha;
  const Rational base = 1 + b;
  int m0 = 0;
  while (level <= beta) {
    level *= base;
    ++m0;
  }
  return m0 * k0;
}

OneStepResult one_step_reduction(const ActionModel& action, const Rational& c_alpha, int k,
                                 const std::vector<GroupElement>& s, const Rational& alpha,
                                 const Rational& d, const Rational& eps) {
  if (k < 1) throw InvalidRange("k must be >= 1");
  if (alpha <= 0 || c_alpha <= 0) throw InvalidConstant("alpha and c_alpha must be positive");
  if (d <= 0) throw InvalidConstant("D must be positive");
  if (eps >= alpha * c_alpha)
    throw EpsilonTooLarge("need eps < alpha * c_alpha = " + format_rational(alpha * c_alpha));
  action.require_symmetric(s);

  // P_{k-1}: products of at most k-1 factors from S (identity included)
  std::vector<GroupElement> products{action.group().identity()};
  {
    std::vector<GroupElement> frontier = products;
    for (int step = 0; step < k - 1; ++step) {
      std::vector<GroupElement> next;
      for (const auto& g : frontier)
        for (const auto& si : s) {
          GroupElement h = action.group().multiply(si, g);
          if (std::find(products.begin(), products.end(), h) == products.end()) {
            products.push_back(h);
            next.push_back(h);
          }
        }
      frontier = std::move(next);
    }
  }

  // Z_D: points whose transport ratio reaches D under some product
  Set z = action.space().empty_set();
  for (const auto& g : products) {
    TransportRatio tr = action.transport_ratio(g);
    if (action.space().kind == Space::Kind::atoms) {
      AtomSet za(action.space().atom_space.atom_count);
      for (size_t i = 0; i < tr.per_atom.size(); ++i)
        if (tr.per_atom[i] >= d) za.set(static_cast<int>(i));
      z = set_union(z, Set{za});
    } else {
      std::vector<Interval> parts;
      for (const auto& [iv, ratio] : tr.per_piece)
        if (ratio >= d) parts.push_back(iv);
      z = set_union(z, Set{IntervalSet::from_intervals(std::move(parts))});
    }
  }
  Set pz = z;
  for (const auto& g : products) pz = set_union(pz, action.transport(g, z));

  OneStepResult res;
  res.z_set = z;
  res.nu_z = action.space().measure_of(z);
  res.nu_pz = action.space().measure_of(pz);
  if (res.nu_pz >= eps)
    throw NoValidD("nu(P_{k-1} . Z_D) = " + format_rational(res.nu_pz) +
                   " is not below eps = " + format_rational(eps));
  Rational s_pow = 1;
  for (int i = 0; i < k - 1; ++i) s_pow *= static_cast<int>(s.size());
  res.c_prime = (c_alpha - eps / alpha) / (s_pow * d);
  return res;
}

Amplification homogeneous_amplification(const Rational& c, const Rational& alpha0,
                                        const Rational& delta) {
  if (alpha0 <= 0 || alpha0 > Rational(1, 4))
    throw InvalidRange("alpha0 must lie in (0, 1/4]");
  // 4 - 2 sqrt(3) < delta  <=>  (4 - delta)^2 < 12, given delta < 4
  if (delta >= 1 || (4 - delta) * (4 - delta) >= 12)
    throw DeltaOutOfRange("delta must lie in (4 - 2 sqrt(3), 1)");
  double dd = to_double(delta);
  double cc = to_double(alpha0) / 2.0;
  Amplification amp;
  amp.phi = std::exp(-1.0 / ((1.0 - dd) * (1.0 - cc)));
  amp.c_uniform = amp.phi * to_double(c);
  return amp;
}

CheckReport check_expansion_range(const ActionModel& action, const Set& domain,
                                  const Rational& lo_frac, const Rational& hi_frac,
                                  const Rational& c, int k) {
  CellBasis basis = atom_cells(action, domain);
  std::vector<Set> images = cell_images_k(action, basis, k, domain);
  auto w = min_ratio_exhaustive(basis, images, action.space(), lo_frac * basis.total,
                                hi_frac * basis.total);
  CheckReport rep;
  if (!w) {
    rep.vacuous = true;
    return rep;
  }
  rep.lhs = w->nu_img;
  rep.rhs = (1 + c) * w->nu_a;
  rep.ok = rep.lhs > rep.rhs;
  rep.witness = w->cells;
  return rep;
}

CheckReport check_escape_level(const ActionModel& action, const Set& domain,
                               const Rational& alpha_frac, const Rational& beta_frac, int k) {
  CellBasis basis = atom_cells(action, domain);
  std::vector<Set> images = cell_images_k(action, basis, k, domain);
  SubsetAccumulator acc(basis, images, action.space());
  const Rational level = beta_frac * basis.total;
  const Rational floor_nu = alpha_frac * basis.total;
  CheckReport rep;
  bool seen = false;
  enumerate_subsets(basis, acc, basis.total, [&](const std::vector<int>& chosen) {
    if (!rep.ok || acc.nu_a() < floor_nu) return;
    seen = true;
    if (acc.nu_img() <= level) {
      rep.ok = false;
      rep.witness = chosen;
      rep.lhs = acc.nu_img();
      rep.rhs = level;
    }
  });
  rep.vacuous = !seen && rep.ok;
  return rep;
}

CheckReport check_boundary_expansion(const ActionModel& action, const Set& domain,
                                     const std::vector<GroupElement>& s,
                                     const Rational& alpha_frac, const Rational& c_prime) {
  CellBasis basis = atom_cells(action, domain);
  std::vector<Set> images = cell_images_s(action, basis, s, domain);
  auto w = min_boundary_ratio_exhaustive(basis, images, action.space(),
                                         alpha_frac * basis.total, basis.total / 2);
  CheckReport rep;
  if (!w) {
    rep.vacuous = true;
    return rep;
  }
  rep.lhs = w->nu_img;  // boundary measure of the minimizer
  rep.rhs = c_prime * w->nu_a;
  rep.ok = rep.lhs > rep.rhs;
  rep.witness = w->cells;
  return rep;
}

}  // namespace ergo
