#include "ergo/cells.hpp"

#include <bit>

namespace ergo {

namespace {

bool fits_mask(const Set& s) {
  return std::holds_alternative<AtomSet>(s) && std::get<AtomSet>(s).atom_count() <= 64;
}

uint64_t to_mask(const Set& s) {
  uint64_t m = 0;
  for (int a : std::get<AtomSet>(s).atoms()) m |= 1ULL << a;
  return m;
}

constexpr long long kDenCap = 1 << 20;

}  // namespace

CellBasis atom_cells(const ActionModel& action, const Set& domain) {
  if (action.space().kind != Space::Kind::atoms)
    throw BadSpec("atom granularity requires an atom model");
  const auto& space = action.space().atom_space;
  const AtomSet& dom = std::get<AtomSet>(domain);
  CellBasis basis;
  for (int a : dom.atoms()) {
    basis.cells.push_back(AtomSet::of(space.atom_count, {a}));
    basis.nu.push_back(space.weights[a]);
    basis.total += space.weights[a];
  }
  return basis;
}

CellBasis partition_cells(const std::vector<Set>& partition_cells_in, const Space& space,
                          const Set& domain) {
  CellBasis basis;
  for (const auto& cell : partition_cells_in) {
    Set inter = set_intersect(cell, domain);
    Rational m_inter = space.measure_of(inter);
    if (m_inter == 0) continue;
    Rational m_cell = space.measure_of(cell);
    if (m_inter != m_cell)
      throw BadSpec("domain is not a cell union at this granularity");
    basis.cells.push_back(cell);
    basis.nu.push_back(m_cell);
    basis.total += m_cell;
  }
  return basis;
}

CellBasis point_cells(const MeasuredMetricSpace& space) {
  CellBasis basis;
  for (int i = 0; i < space.n; ++i) {
    basis.cells.push_back(AtomSet::of(space.n, {i}));
    basis.nu.push_back(space.weights[i]);
    basis.total += space.weights[i];
  }
  return basis;
}

std::vector<Set> cell_images_k(const ActionModel& action, const CellBasis& basis, int k,
                               const Set& window) {
  std::vector<Set> images;
  images.reserve(basis.cells.size());
  for (const auto& cell : basis.cells)
    images.push_back(set_intersect(action.k_neighborhood(k, cell), window));
  return images;
}

std::vector<Set> cell_images_s(const ActionModel& action, const CellBasis& basis,
                               const std::vector<GroupElement>& s, const Set& window) {
  std::vector<Set> images;
  images.reserve(basis.cells.size());
  for (const auto& cell : basis.cells)
    images.push_back(set_intersect(action.s_neighborhood(s, cell), window));
  return images;
}

std::vector<Set> metric_images(const MeasuredMetricSpace& space, int k) {
  std::vector<Set> images;
  for (int i = 0; i < space.n; ++i) {
    AtomSet nb(space.n);
    for (int j = 0; j < space.n; ++j)
      if (space.dist[i][j] != kInfDist && space.dist[i][j] <= k) nb.set(j);
    images.push_back(nb);
  }
  return images;
}

SubsetAccumulator::SubsetAccumulator(const CellBasis& basis, const std::vector<Set>& images,
                                     const Space& space)
    : basis_(&basis), images_(&images), space_(&space) {
  if (images.size() != basis.cells.size())
    throw InvalidRange("one image per cell required");
  bool maskable = space.kind == Space::Kind::atoms && space.atom_space.atom_count <= 64;
  for (const auto& c : basis.cells) maskable = maskable && fits_mask(c);
  for (const auto& im : images) maskable = maskable && fits_mask(im);
  if (maskable) {
    BigInt l = 1;
    for (const auto& w : space.atom_space.weights) l = lcm(l, BigInt(denominator(w)));
    if (l <= kDenCap) {
      mask_mode_ = true;
      den_ = l.convert_to<long long>();
      const int n = space.atom_space.atom_count;
      atom_w_num_.resize(n);
      for (int i = 0; i < n; ++i)
        atom_w_num_[i] =
            numerator(Rational(space.atom_space.weights[i] * den_)).convert_to<long long>();
      for (const auto& c : basis.cells) cell_masks_.push_back(to_mask(c));
      for (const auto& im : images) img_masks_.push_back(to_mask(im));
      cell_num_.resize(basis.size());
      for (int i = 0; i < basis.size(); ++i)
        cell_num_[i] = numerator(Rational(basis.nu[i] * den_)).convert_to<long long>();
    }
  }
  reset();
}

void SubsetAccumulator::reset() {
  stack_.clear();
  a_mask_ = img_mask_ = 0;
  na_ = nimg_ = 0;
  a_set_ = space_->empty_set();
  img_set_ = space_->empty_set();
  ra_ = rimg_ = 0;
}

void SubsetAccumulator::push(int cell) {
  Frame f;
  f.cell = cell;
  if (mask_mode_) {
    f.prev_img_mask = img_mask_;
    f.prev_num_img = nimg_;
    a_mask_ |= cell_masks_[cell];
    na_ += cell_num_[cell];
    uint64_t added = img_masks_[cell] & ~img_mask_;
    img_mask_ |= img_masks_[cell];
    while (added) {
      nimg_ += atom_w_num_[std::countr_zero(added)];
      added &= added - 1;
    }
  } else {
    f.prev_img_set = img_set_;
    f.prev_nu_img = rimg_;
    a_set_ = set_union(a_set_, basis_->cells[cell]);
    ra_ += basis_->nu[cell];
    img_set_ = set_union(img_set_, (*images_)[cell]);
    rimg_ = space_->measure_of(img_set_);
  }
  stack_.push_back(std::move(f));
}

void SubsetAccumulator::pop() {
  Frame f = std::move(stack_.back());
  stack_.pop_back();
  if (mask_mode_) {
    a_mask_ &= ~cell_masks_[f.cell];
    na_ -= cell_num_[f.cell];
    img_mask_ = f.prev_img_mask;
    nimg_ = f.prev_num_img;
  } else {
    a_set_ = set_difference(a_set_, basis_->cells[f.cell]);
    ra_ -= basis_->nu[f.cell];
    img_set_ = std::move(f.prev_img_set);
    rimg_ = std::move(f.prev_nu_img);
  }
}

Rational SubsetAccumulator::mask_measure(uint64_t m) const {
  long long num = 0;
  while (m) {
    num += atom_w_num_[std::countr_zero(m)];
    m &= m - 1;
  }
  return Rational(num, den_);
}

long long SubsetAccumulator::num_inter() const {
  uint64_t m = img_mask_ & a_mask_;
  long long num = 0;
  while (m) {
    num += atom_w_num_[std::countr_zero(m)];
    m &= m - 1;
  }
  return num;
}

Rational SubsetAccumulator::nu_a() const { return mask_mode_ ? Rational(na_, den_) : ra_; }

Rational SubsetAccumulator::nu_img() const {
  return mask_mode_ ? Rational(nimg_, den_) : rimg_;
}

Rational SubsetAccumulator::nu_img_inter_a() const {
  if (mask_mode_) return mask_measure(img_mask_ & a_mask_);
  return space_->measure_of(set_intersect(img_set_, a_set_));
}

void enumerate_subsets(const CellBasis& basis, SubsetAccumulator& acc, const Rational& hi,
                       const std::function<void(const std::vector<int>&)>& leaf) {
  acc.reset();
  // integer bound test in mask mode: num_a * den(hi) <= num(hi) * den
  const bool fast = acc.fast();
  const long long hi_num = fast ? numerator(hi).convert_to<long long>() : 0;
  const long long hi_den = fast ? denominator(hi).convert_to<long long>() : 1;
  const long long rhs = hi_num * acc.den();
  std::vector<int> chosen;
  std::function<void(int)> rec = [&](int start) {
    for (int c = start; c < basis.size(); ++c) {
      acc.push(c);
      bool ok = fast ? acc.num_a() * hi_den <= rhs : acc.nu_a() <= hi;
      if (ok) {
        chosen.push_back(c);
        leaf(chosen);
        rec(c + 1);
        chosen.pop_back();
      }
      acc.pop();
    }
  };
  rec(0);
}

void enumerate_supersets(const CellBasis& basis, SubsetAccumulator& acc,
                         const std::vector<int>& seed, const Rational& hi,
                         const std::function<void(const std::vector<int>&)>& leaf) {
  acc.reset();
  std::vector<bool> seeded(basis.size(), false);
  for (int c : seed) {
    acc.push(c);
    seeded[c] = true;
  }
  std::vector<int> chosen;
  std::function<void(int)> rec = [&](int start) {
    for (int c = start; c < basis.size(); ++c) {
      if (seeded[c]) continue;
      acc.push(c);
      if (acc.nu_a() <= hi) {
        chosen.push_back(c);
        leaf(chosen);
        rec(c + 1);
        chosen.pop_back();
      }
      acc.pop();
    }
  };
  rec(0);
}

}  // namespace ergo
