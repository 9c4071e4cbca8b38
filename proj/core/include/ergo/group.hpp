#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ergo/errors.hpp"

namespace ergo {

enum class GroupKind { free_group, integer_lattice, matrix_mod_n, finite_cyclic };

/// A group element in canonical form. Storage by kind:
///   free_group:      freely reduced word, letters +/-(i+1) for basis letter i
///   integer_lattice: coordinate vector
///   matrix_mod_n:    row-major 2x2 entries reduced mod n
///   finite_cyclic:   single residue mod the order
/// Equality is structural equality of the canonical form.
struct GroupElement {
  GroupKind kind = GroupKind::free_group;
  std::vector<int64_t> data;

  bool is_identity() const;
  auto operator<=>(const GroupElement&) const = default;
};

struct Generator {
  std::string label;
  GroupElement element;
  int length = 1;
};

/// A countable group with a proper length function realized as weighted
/// word length over a finite symmetric generating list.
class GroupModel {
 public:
  static GroupModel free_group(int rank, const std::vector<int>& lengths = {});
  static GroupModel integer_lattice(int dim, const std::vector<int>& lengths = {});
  /// 2x2 matrices mod n generated by the given matrices (inverses are
  /// adjoined automatically with equal lengths).
  static GroupModel matrix_mod_n(int64_t modulus,
                                 const std::vector<std::pair<std::string, std::array<int64_t, 4>>>& gens,
                                 const std::vector<int>& lengths = {});
  static GroupModel finite_cyclic(int64_t order, int step_length = 1);

  GroupKind kind() const { return kind_; }
  int64_t modulus() const { return modulus_; }
  int rank() const { return rank_; }
  const std::vector<Generator>& generators() const { return generators_; }

  GroupElement identity() const;
  GroupElement multiply(const GroupElement& g, const GroupElement& h) const;
  GroupElement inverse(const GroupElement& g) const;

  /// Index of the generator whose element equals g, or -1.
  int generator_index(const GroupElement& g) const;
  /// Index of the generator carrying the inverse of generator i.
  int inverse_generator(int i) const;

  /// Exact closed ball {g : l(g) <= k} with the word length of each element,
  /// sorted by (length, element). Throws BallTooLarge past the cap.
  std::vector<std::pair<GroupElement, int>> ball(int k, size_t cap = 1'000'000) const;

  /// A geodesic factorization of g as generator indices (empty for the
  /// identity). Falls back to ball search for matrix groups.
  std::vector<int> factor(const GroupElement& g) const;

 private:
  void validate() const;

  GroupKind kind_;
  int rank_ = 0;          // free rank or lattice dimension
  int64_t modulus_ = 0;   // matrix modulus or cyclic order
  std::vector<Generator> generators_;
};

}  // namespace ergo
