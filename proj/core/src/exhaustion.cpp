#include "ergo/exhaustion.hpp"

#include <algorithm>

namespace ergo {

namespace {

CellBasis basis_over(const ActionModel& action, const Set& domain,
                     const std::vector<Set>* granularity) {
  if (granularity) return partition_cells(*granularity, action.space(), domain);
  return atom_cells(action, domain);
}

std::vector<Set> step_images(const ActionModel& action, const CellBasis& basis,
                             const StepSpec& step, const Set& window) {
  std::vector<Set> images;
  images.reserve(basis.cells.size());
  for (const auto& cell : basis.cells)
    images.push_back(set_intersect(step_closed_neighborhood(action, step, cell), window));
  return images;
}

Rational min_cell_measure(const CellBasis& basis) {
  Rational m = 0;
  for (const auto& nu : basis.nu)
    if (m == 0 || nu < m) m = nu;
  return m;
}

void validate_z_sequence(const Space& space, const Set& domain,
                         const std::vector<Set>& z_sequence) {
  Rational prev = -1;
  for (size_t i = 0; i < z_sequence.size(); ++i) {
    if (!is_subset(z_sequence[i], domain))
      throw InvalidRange("Z_" + std::to_string(i + 1) + " is not contained in Y");
    if (i + 1 < z_sequence.size() && !is_subset(z_sequence[i + 1], z_sequence[i]))
      throw InvalidRange("Z sequence is not nested");
    Rational nu = space.measure_of(z_sequence[i]);
    if (prev >= 0 && nu > prev) throw InvalidRange("Z measures are not monotone");
    prev = nu;
  }
}

}  // namespace

bool ExhaustionReport::all_verified() const {
  if (stages.empty()) return false;
  for (const auto& st : stages)
    if (!st.ybar_verified || !st.yn_verified || !st.f_bound_ok) return false;
  return true;
}

DomainCheck verify_domain(const ActionModel& action, const Set& domain, const Rational& c,
                          const StepSpec& step, const std::vector<Set>* granularity,
                          int max_cells, const Rational& alpha_floor) {
  const Space& space = action.space();
  CellBasis basis = basis_over(action, domain, granularity);
  if (basis.size() > max_cells)
    throw TooLarge("exhaustive domain verification capped at " + std::to_string(max_cells) +
                   " cells");
  DomainCheck check;
  if (basis.size() == 0) {
    check.vacuous = true;
    check.ok = true;
    return check;
  }
  std::vector<Set> images = step_images(action, basis, step, domain);
  auto w = min_ratio_exhaustive(basis, images, space, alpha_floor * basis.total,
                                basis.total / 2);
  if (!w) {
    check.vacuous = true;
    check.ok = true;
    return check;
  }
  check.min_ratio = w->ratio();
  check.witness = w->cells;
  check.ok = check.min_ratio > 1 + c;
  return check;
}

ExhaustionReport build_exhaustion(const ActionModel& action, const Set& domain,
                                  const Rational& c, const std::vector<Set>& z_sequence,
                                  const std::vector<Set>* granularity, int k_cap) {
  if (c <= 0 || c >= 1) throw InvalidRange("c must lie in (0,1)");
  const Space& space = action.space();
  validate_z_sequence(space, domain, z_sequence);

  ExhaustionReport report;
  report.y = domain;
  report.c = c;
  CellBasis full_basis = basis_over(action, domain, granularity);
  const Rational t = full_basis.total;
  if (t == 0) throw EmptyDomain("exhaustion over a null domain");
  if (k_cap <= 0) k_cap = 2 * full_basis.size();

  // stage threshold nu(Z_n) < c^2/(8(c+1)) nu(Y)
  const Rational z_threshold = c * c / (8 * (c + 1)) * t;
  int n0 = 0;
  for (size_t i = 0; i < z_sequence.size(); ++i)
    if (space.measure_of(z_sequence[i]) >= z_threshold) n0 = static_cast<int>(i) + 1;
  if (n0 >= static_cast<int>(z_sequence.size()))
    throw NoValidStage("no Z_n below the threshold " + format_rational(z_threshold));
  report.n0 = n0;

  Set y_union = space.empty_set();
  bool union_started = false;
  for (int n = n0 + 1; n <= static_cast<int>(z_sequence.size()); ++n) {
    ExhaustionStage stage;
    stage.n = n;
    stage.z = z_sequence[n - 1];
    stage.nu_z = space.measure_of(stage.z);
    stage.alpha_n =
        stage.nu_z > 0 ? stage.nu_z / (c * t) : min_cell_measure(full_basis) / (2 * t);
    stage.folner_eps = c / 2;

    // k_n: smallest k certifying (c, k)-expansion down to alpha_n
    int kn = 0;
    DomainCheck kn_check;
    for (int k = 1; k <= k_cap && kn == 0; ++k) {
      kn_check = verify_domain(action, domain, c, StepSpec::ball(k), granularity,
                               full_basis.size(), stage.alpha_n);
      if (kn_check.ok) kn = k;
    }
    if (kn == 0)
      throw VerificationFailed("no k <= " + std::to_string(k_cap) +
                               " certifies (c,k)-expansion at stage " + std::to_string(n));
    stage.step = StepSpec::ball(kn);

    stage.folner = maximal_folner(action, domain, stage.z, stage.folner_eps, stage.step,
                                  granularity, full_basis.size());
    Rational nu_f = stage.folner.nu_f;
    stage.f_bound = stage.nu_z > 0 ? Rational(2) / c * stage.nu_z : stage.alpha_n * t;
    stage.f_bound_ok = nu_f < stage.f_bound;

    stage.ybar = set_difference(domain, set_union(stage.z, stage.folner.f));
    stage.nu_ybar = space.measure_of(stage.ybar);
    stage.c_ybar = c / 2;
    DomainCheck ybar_check = verify_domain(action, stage.ybar, stage.c_ybar, stage.step,
                                           granularity, full_basis.size());
    stage.ybar_verified = ybar_check.ok;
    stage.ybar_witness = ybar_check.witness;

    // nested union, certified at the full constant c by a radius scan
    if (!union_started || stage.nu_ybar > 0) {
      y_union = union_started ? set_union(y_union, stage.ybar) : stage.ybar;
      union_started = true;
    }
    stage.yn = y_union;
    stage.nu_yn = space.measure_of(stage.yn);
    stage.c_union = c;
    for (int k = kn; k <= k_cap && !stage.yn_verified; ++k) {
      DomainCheck un = verify_domain(action, stage.yn, c, StepSpec::ball(k), granularity,
                                     full_basis.size());
      if (un.ok) {
        stage.yn_verified = true;
        stage.k_union = k;
      } else {
        stage.yn_witness = un.witness;
      }
    }
    report.stages.push_back(std::move(stage));
  }
  return report;
}

ExhaustionReport build_exhaustion_s(const ActionModel& action, const Set& domain,
                                    const std::vector<GroupElement>& s,
                                    const ExpansionProfile& profile,
                                    const std::vector<Set>& z_sequence,
                                    const std::vector<Set>* granularity,
                                    bool validate_profile) {
  action.require_symmetric(s);
  const Space& space = action.space();
  validate_z_sequence(space, domain, z_sequence);

  CellBasis full_basis = basis_over(action, domain, granularity);
  const Rational t = full_basis.total;
  if (t == 0) throw EmptyDomain("exhaustion over a null domain");

  // stage constants c_m = cbar(1/m) from the profile's alpha = 1/m entries
  std::vector<std::pair<int, Rational>> cm;  // (m, c_m), m >= 2
  for (int m = 2; m <= 2 * full_basis.size(); ++m) {
    const ProfileEntry* e = nullptr;
    Rational alpha(1, m);
    if (alpha > Rational(1, 2)) continue;
    for (const auto& entry : profile.entries)
      if (entry.alpha == alpha && (e == nullptr || (e->c_star <= 0 && entry.c_star > 0)))
        e = &entry;
    if (e) cm.push_back({m, e->c_star});
  }
  if (cm.empty()) throw ProfileGap("profile carries no alpha = 1/m entries with m >= 2");

  ExhaustionReport report;
  report.s_version = true;
  report.y = domain;
  report.c = cm.front().second;  // c_2 anchor

  if (validate_profile) {
    for (const auto& [m, cval] : cm) {
      std::vector<Set> images =
          step_images(action, full_basis, StepSpec::set(s), domain);
      auto w = min_ratio_exhaustive(full_basis, images, space, Rational(1, m) * t, t / 2);
      ProfileValidation pv;
      pv.alpha = Rational(1, m);
      pv.claimed_c = cval;
      // the claim certifies every c below c_m, so the minimum may attain it
      if (w && !(w->ratio() >= 1 + cval)) {
        pv.valid = false;
        pv.witness = w->cells;
      }
      report.profile_checks.push_back(pv);
    }
  }

  const Rational c2 = cm.front().second;
  int n0 = 0;
  for (size_t i = 0; i < z_sequence.size(); ++i)
    if (space.measure_of(z_sequence[i]) > c2 / 4 * t) n0 = static_cast<int>(i) + 1;
  if (n0 >= static_cast<int>(z_sequence.size()))
    throw NoValidStage("no Z_n below the c_2/4 threshold");
  report.n0 = n0;

  Set y_union = space.empty_set();
  bool union_started = false;
  int prev_m = 2;
  for (int n = n0 + 1; n <= static_cast<int>(z_sequence.size()); ++n) {
    ExhaustionStage stage;
    stage.n = n;
    stage.z = z_sequence[n - 1];
    stage.nu_z = space.measure_of(stage.z);
    // largest m with nu(Z_n) <= c_m/(2m) nu(Y), nondecreasing in n
    int mn = 0;
    Rational cmn;
    for (const auto& [m, cval] : cm)
      if (stage.nu_z <= cval / (2 * m) * t && m >= prev_m && m > mn) {
        mn = m;
        cmn = cval;
      }
    if (mn == 0) {
      // keep the previous schedule value if it still satisfies the bound
      for (const auto& [m, cval] : cm)
        if (m == prev_m && stage.nu_z <= cval / (2 * m) * t) {
          mn = m;
          cmn = cval;
        }
    }
    if (mn == 0)
      throw NoValidStage("no schedule value m(n) fits stage " + std::to_string(n));
    prev_m = mn;
    stage.m_n = mn;
    stage.alpha_n = Rational(1, mn);
    stage.step = StepSpec::set(s);
    stage.folner_eps = cmn / 2;

    stage.folner = maximal_folner(action, domain, stage.z, stage.folner_eps, stage.step,
                                  granularity, full_basis.size());
    stage.f_bound = Rational(1, mn) * t;
    stage.f_bound_ok = stage.folner.nu_f < stage.f_bound;

    stage.ybar = set_difference(domain, set_union(stage.z, stage.folner.f));
    stage.nu_ybar = space.measure_of(stage.ybar);
    // certified stage constant: exact minimum over the stage domain
    {
      CellBasis bb = basis_over(action, stage.ybar, granularity);
      if (bb.size() > 0) {
        std::vector<Set> images = step_images(action, bb, StepSpec::set(s), stage.ybar);
        auto w = min_ratio_exhaustive(bb, images, space, Rational(0), bb.total / 2);
        if (w) {
          stage.c_ybar = w->ratio() - 1;
          stage.ybar_verified = stage.c_ybar > 0;
          if (!stage.ybar_verified) stage.ybar_witness = w->cells;
        } else {
          stage.ybar_verified = true;  // no admissible subset: vacuous
        }
      }
    }

    if (!union_started || stage.nu_ybar > 0) {
      y_union = union_started ? set_union(y_union, stage.ybar) : stage.ybar;
      union_started = true;
    }
    stage.yn = y_union;
    stage.nu_yn = space.measure_of(stage.yn);
    {
      CellBasis bb = basis_over(action, stage.yn, granularity);
      std::vector<Set> images = step_images(action, bb, StepSpec::set(s), stage.yn);
      auto w = min_ratio_exhaustive(bb, images, space, Rational(0), bb.total / 2);
      if (w) {
        stage.c_union = w->ratio() - 1;
        stage.yn_verified = stage.c_union > 0;
        if (!stage.yn_verified) stage.yn_witness = w->cells;
      } else {
        stage.yn_verified = true;
      }
    }
    report.stages.push_back(std::move(stage));
  }
  return report;
}

}  // namespace ergo
