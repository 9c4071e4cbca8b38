#include "ergo/folner.hpp"

#include <algorithm>

namespace ergo {

Set step_closed_neighborhood(const ActionModel& action, const StepSpec& step, const Set& a) {
  if (step.use_ball) return action.k_neighborhood(step.k, a);
  action.require_symmetric(step.s);
  return set_union(a, action.s_neighborhood(step.s, a));
}

namespace {

std::vector<Set> step_images(const ActionModel& action, const CellBasis& basis,
                             const StepSpec& step, const Set& window) {
  std::vector<Set> images;
  images.reserve(basis.cells.size());
  for (const auto& cell : basis.cells)
    images.push_back(set_intersect(step_closed_neighborhood(action, step, cell), window));
  return images;
}

CellBasis basis_over(const ActionModel& action, const Set& domain,
                     const std::vector<Set>* granularity) {
  if (granularity) return partition_cells(*granularity, action.space(), domain);
  return atom_cells(action, domain);
}

}  // namespace

FolnerAudit is_folner(const ActionModel& action, const Set& domain, const Set& z,
                      const Rational& eps, const StepSpec& step, const Set& a) {
  Set allowed = set_difference(domain, z);
  if (!is_subset(a, allowed))
    throw NotASubset("Folner candidate must be contained in Y \\ Z");
  const Space& space = action.space();
  FolnerAudit audit;
  audit.nu_a = space.measure_of(a);
  Set bd = set_difference(step_closed_neighborhood(action, step, a), a);
  audit.boundary = space.measure_of(set_difference(set_intersect(bd, domain), z));
  audit.threshold = eps * audit.nu_a;
  audit.half_ok = 2 * audit.nu_a <= space.measure_of(domain);
  audit.folner = audit.half_ok && audit.boundary <= audit.threshold;
  return audit;
}

FolnerCertificate maximal_folner(const ActionModel& action, const Set& domain, const Set& z,
                                 const Rational& eps, const StepSpec& step,
                                 const std::vector<Set>* granularity, int exhaustive_cap) {
  const Space& space = action.space();
  Set allowed = set_difference(domain, z);
  CellBasis basis = basis_over(action, allowed, granularity);
  // boundary of F inside Y relative to Z: images clipped to Y \ Z; the
  // accumulated image minus its intersection with F is exactly
  // ((step.F \ F) inter Y) \ Z since F avoids Z
  std::vector<Set> images = step_images(action, basis, step, allowed);
  const Rational half = space.measure_of(domain) / 2;
  const int m = basis.size();

  auto boundary_of = [&](const std::vector<char>& in) {
    Set img = space.empty_set();
    Set f = space.empty_set();
    Rational nu = 0;
    for (int c = 0; c < m; ++c)
      if (in[c]) {
        img = set_union(img, images[c]);
        f = set_union(f, basis.cells[c]);
        nu += basis.nu[c];
      }
    Rational bd = space.measure_of(set_difference(img, f));
    return std::pair<Rational, Rational>(bd, nu);
  };

  std::vector<char> in(m, 0);
  std::vector<char> best_in(m, 0);
  Rational best_nu = 0;
  Rational nu = 0;

  // greedy growth by smallest resulting boundary, lowest index on ties;
  // infeasible intermediate states are allowed, the best feasible prefix
  // is kept
  while (true) {
    int pick = -1;
    Rational pick_bd;
    for (int c = 0; c < m; ++c) {
      if (in[c] || nu + basis.nu[c] > half) continue;
      in[c] = 1;
      Rational bd = boundary_of(in).first;
      in[c] = 0;
      if (pick < 0 || bd < pick_bd) {
        pick = c;
        pick_bd = bd;
      }
    }
    if (pick < 0) break;
    in[pick] = 1;
    nu += basis.nu[pick];
    if (pick_bd <= eps * nu && nu > best_nu) {
      best_in = in;
      best_nu = nu;
    }
  }
  in = best_in;
  nu = best_nu;

  // superset closure: take the largest Folner superset when exhaustive
  // search is feasible, else extend cell by cell until cell-maximal
  if (m <= exhaustive_cap) {
    SubsetAccumulator acc(basis, images, space);
    std::vector<int> seed;
    for (int c = 0; c < m; ++c)
      if (in[c]) seed.push_back(c);
    Rational best_ext_nu = nu;
    std::vector<int> best_ext;
    enumerate_supersets(basis, acc, seed, half, [&](const std::vector<int>& added) {
      Rational total_nu = acc.nu_a();
      if (total_nu <= best_ext_nu) return;
      Rational bd = acc.nu_img() - acc.nu_img_inter_a();
      if (bd <= eps * total_nu) {
        best_ext_nu = total_nu;
        best_ext = added;
      }
    });
    for (int c : best_ext) in[c] = 1;
    nu = best_ext_nu;
  } else {
    bool extended = true;
    while (extended) {
      extended = false;
      for (int c = 0; c < m; ++c) {
        if (in[c] || nu + basis.nu[c] > half) continue;
        in[c] = 1;
        auto [bd, nnu] = boundary_of(in);
        if (bd <= eps * nnu) {
          nu = nnu;
          extended = true;
          break;
        }
        in[c] = 0;
      }
    }
  }

  // cell-maximality audit
  bool maximal = true;
  for (int c = 0; c < m && maximal; ++c) {
    if (in[c]) continue;
    if (nu + basis.nu[c] > half) continue;
    in[c] = 1;
    auto [bd, nnu] = boundary_of(in);
    in[c] = 0;
    if (bd <= eps * nnu) maximal = false;
  }

  FolnerCertificate cert;
  cert.y = domain;
  cert.z = z;
  cert.epsilon = eps;
  cert.step = step;
  Set f = space.empty_set();
  for (int c = 0; c < m; ++c)
    if (in[c]) {
      f = set_union(f, basis.cells[c]);
      cert.cells.push_back(c);
    }
  cert.f = f;
  cert.nu_f = nu;
  cert.boundary_measure = boundary_of(in).first;
  cert.maximal = maximal;
  return cert;
}

ComplementReport complement_expansion_check(const ActionModel& action,
                                            const FolnerCertificate& cert,
                                            const std::vector<Set>* granularity) {
  if (!cert.maximal)
    throw NotMaximal("complement expansion requires a maximal certificate");
  const Space& space = action.space();
  Set excluded = set_union(cert.f, cert.z);
  Set window = set_difference(cert.y, excluded);
  CellBasis basis = basis_over(action, window, granularity);
  ComplementReport report;
  Rational cap = space.measure_of(cert.y) / 2 - cert.nu_f;
  if (cap <= 0 || basis.size() == 0) return report;  // admissible range empty
  std::vector<Set> images = step_images(action, basis, cert.step, window);
  SubsetAccumulator acc(basis, images, space);
  enumerate_subsets(basis, acc, cap, [&](const std::vector<int>& chosen) {
    ++report.checked;
    Rational bd = acc.nu_img() - acc.nu_img_inter_a();
    Rational rhs = cert.epsilon * acc.nu_a();
    if (!(bd > rhs)) {
      report.pass = false;
      if (report.violations.size() < 16) report.violations.push_back({chosen, bd, rhs});
    }
  });
  return report;
}

}  // namespace ergo
