#pragma once

#include <vector>

#include "ergo/group.hpp"
#include "ergo/measurable_set.hpp"

namespace ergo {

/// One affine piece of an interval bijection: [lo,hi) -> slope*x + intercept.
struct AffinePiece {
  Rational lo, hi, slope, intercept;

  Interval domain() const { return {lo, hi}; }
  Interval image() const;
  bool operator==(const AffinePiece&) const = default;
};

/// A piecewise-affine rational bijection of [0,1) up to null sets.
/// Domain pieces partition [0,1); images partition [0,1). Negative slopes
/// are allowed; their reflected images are canonicalized to half-open form,
/// which only moves endpoints (measure zero).
class PiecewiseAffine {
 public:
  static PiecewiseAffine from_pieces(std::vector<AffinePiece> pieces);
  static PiecewiseAffine identity();
  /// Rotation x -> x + angle (mod 1).
  static PiecewiseAffine rotation(const Rational& angle);

  const std::vector<AffinePiece>& pieces() const { return pieces_; }
  IntervalSet apply(const IntervalSet& a) const;
  PiecewiseAffine inverted() const;
  /// (*this) after inner: x -> this(inner(x)).
  PiecewiseAffine compose_after(const PiecewiseAffine& inner) const;
  bool unit_slopes() const;

 private:
  std::vector<AffinePiece> pieces_;  // sorted by domain, partitioning [0,1)
};

/// Per-generator map: an atom permutation or an interval bijection,
/// whichever matches the space kind.
struct GeneratorMap {
  std::vector<int> perm;      // atom models: perm[i] = image of atom i
  PiecewiseAffine interval_map = PiecewiseAffine::identity();
};

/// Mass-transport ratio of a group element: transported mass over source
/// mass, keyed by source atom or source piece. Identically 1 for
/// measure-preserving models.
struct TransportRatio {
  std::vector<Rational> per_atom;                            // atom models
  std::vector<std::pair<Interval, Rational>> per_piece;      // interval models
  Rational sup() const;
  Rational at_atom(int i) const { return per_atom.at(i); }
};

/// An exact measurable action specified on generators; words act by exact
/// composition of the generator maps.
class ActionModel {
 public:
  ActionModel(GroupModel group, Space space, std::vector<GeneratorMap> maps);

  const GroupModel& group() const { return group_; }
  const Space& space() const { return space_; }
  const std::vector<GeneratorMap>& generator_maps() const { return maps_; }

  Set apply_generator(int gen_index, const Set& a) const;
  /// Exact image g . A.
  Set transport(const GroupElement& g, const Set& a) const;
  /// B_k . A as a union over the ball, computed by length-layered closure.
  Set k_neighborhood(int k, const Set& a) const;
  /// S . A for an explicit finite subset.
  Set s_neighborhood(const std::vector<GroupElement>& s, const Set& a) const;
  /// S . A \ A; validates S = S^-1.
  Set boundary(const std::vector<GroupElement>& s, const Set& a) const;
  /// B_k . A \ A.
  Set boundary_k(int k, const Set& a) const;

  TransportRatio transport_ratio(const GroupElement& g) const;
  bool is_measure_preserving() const;

  /// Composed atom permutation of a factored word (atom models only).
  std::vector<int> word_permutation(const std::vector<int>& word) const;
  std::vector<int> element_permutation(const GroupElement& g) const;

  void require_symmetric(const std::vector<GroupElement>& s) const;

 private:
  void validate() const;

  GroupModel group_;
  Space space_;
  std::vector<GeneratorMap> maps_;
};

}  // namespace ergo
