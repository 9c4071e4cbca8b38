#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ergo/action.hpp"
#include "ergo/metric_space.hpp"

namespace ergo {

/// The finite family of granularity cells a minimization runs over:
/// disjoint measurable sets with exact measures. The infimum over
/// measurable subsets is realized as a minimum over unions of these cells.
struct CellBasis {
  std::vector<Set> cells;
  std::vector<Rational> nu;
  Rational total = 0;  // measure of the ambient domain Y

  int size() const { return static_cast<int>(cells.size()); }
};

/// Atom granularity: one cell per atom of Y (atom models only).
CellBasis atom_cells(const ActionModel& action, const Set& domain);

/// Partition granularity: the partition cells contained in Y.
/// The domain must be a cell union at this granularity; partially covered
/// cells are rejected.
CellBasis partition_cells(const std::vector<Set>& partition_cells_in, const Space& space,
                          const Set& domain);

/// Point granularity over a metric space: singleton point sets encoded as
/// AtomSet over the point indices.
CellBasis point_cells(const MeasuredMetricSpace& space);

/// Per-cell images under a step operator, intersected with `window`.
std::vector<Set> cell_images_k(const ActionModel& action, const CellBasis& basis, int k,
                               const Set& window);
std::vector<Set> cell_images_s(const ActionModel& action, const CellBasis& basis,
                               const std::vector<GroupElement>& s, const Set& window);
/// Closed metric k-neighborhood of each point.
std::vector<Set> metric_images(const MeasuredMetricSpace& space, int k);

/// Incremental state for DFS subset enumeration: the current cell union A,
/// its accumulated image, and exact measures of both.
///
/// When every set fits in a 64-bit mask and the weights share a small
/// common denominator, measures are tracked as integer numerators over
/// that denominator and the whole enumeration runs on machine integers;
/// otherwise sets and rationals are carried directly.
class SubsetAccumulator {
 public:
  SubsetAccumulator(const CellBasis& basis, const std::vector<Set>& images, const Space& space);

  void push(int cell);
  void pop();
  void reset();

  bool fast() const { return mask_mode_; }
  long long den() const { return den_; }
  long long num_a() const { return na_; }
  long long num_img() const { return nimg_; }
  long long num_inter() const;

  Rational nu_a() const;
  Rational nu_img() const;
  Rational nu_img_inter_a() const;

 private:
  Rational mask_measure(uint64_t m) const;

  bool mask_mode_ = false;
  long long den_ = 1;
  std::vector<long long> atom_w_num_;
  std::vector<long long> cell_num_;
  std::vector<uint64_t> cell_masks_, img_masks_;
  uint64_t a_mask_ = 0, img_mask_ = 0;
  long long na_ = 0, nimg_ = 0;

  const CellBasis* basis_;
  const std::vector<Set>* images_;
  const Space* space_;
  Set a_set_, img_set_;
  Rational ra_ = 0, rimg_ = 0;

  struct Frame {
    int cell = -1;
    uint64_t prev_img_mask = 0;
    long long prev_num_img = 0;
    Set prev_img_set;
    Rational prev_nu_img;
  };
  std::vector<Frame> stack_;
};

/// Enumerates every nonempty cell union with nu(A) <= hi, ascending cell
/// indices; leaf(chosen) fires once per subset. Subsets above the bound are
/// pruned together with their supersets.
void enumerate_subsets(const CellBasis& basis, SubsetAccumulator& acc, const Rational& hi,
                       const std::function<void(const std::vector<int>&)>& leaf);

/// Same, with `seed` cells pre-pushed and excluded from enumeration; the
/// bound applies to the union including the seed. leaf sees only the added
/// cells.
void enumerate_supersets(const CellBasis& basis, SubsetAccumulator& acc,
                         const std::vector<int>& seed, const Rational& hi,
                         const std::function<void(const std::vector<int>&)>& leaf);

/// true when p/q < r/s with q, s > 0.
inline bool ratio_less(const Rational& p, const Rational& q, const Rational& r,
                       const Rational& s) {
  return p * s < r * q;
}

}  // namespace ergo
