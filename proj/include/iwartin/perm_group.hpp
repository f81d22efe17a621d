#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "iwartin/arith.hpp"

namespace iwartin {

/// A bijection of {0, ..., degree-1}. Serialized 1-based ("one-line" image
/// arrays) at every external boundary.
class Permutation {
 public:
  Permutation() = default;
  /// Zero-based images; raises InvalidPermutation unless a bijection.
  explicit Permutation(std::vector<std::uint16_t> images);

  static Permutation identity(std::size_t degree);
  static Permutation from_one_line(std::span<const i64> one_based);
  /// Disjoint-cycle notation with 1-based points, e.g. {{1, 2}, {3, 4, 5}}.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint16_t operator[](std::size_t point) const { return images_[point]; }
  const std::vector<std::uint16_t>& images() const noexcept { return images_; }

  /// Function composition: (a * b)(x) = a(b(x)).
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation pow(i64 exponent) const;

  bool is_identity() const noexcept;
  std::size_t order() const;
  /// Cycle lengths in ascending order, fixed points included.
  std::vector<std::size_t> cycle_type() const;
  std::vector<i64> one_line() const;
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint16_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

struct ConjugacyClass {
  Permutation representative;  // lexicographically smallest member
  std::size_t size = 0;
  std::size_t element_order = 0;
};

/// A finite permutation group with all elements enumerated and conjugacy
/// classes in canonical order: (element order, class size, smallest one-line
/// image of a member). Copies share the same immutable state.
class PermGroup {
 public:
  static constexpr std::size_t kDefaultOrderCap = 1'000'000;

  static PermGroup from_generators(std::size_t degree, std::vector<Permutation> generators,
                                   std::size_t order_cap = kDefaultOrderCap);

  std::size_t degree() const;
  const std::vector<Permutation>& generators() const;
  std::size_t order() const;
  const std::vector<Permutation>& elements() const;
  const std::vector<ConjugacyClass>& classes() const;
  std::size_t num_classes() const;
  std::size_t exponent() const;

  std::optional<std::size_t> find(const Permutation& g) const;
  bool contains(const Permutation& g) const { return find(g).has_value(); }
  /// Class index of g; raises ElementNotInGroup.
  std::size_t class_of(const Permutation& g) const;
  std::size_t class_of_element(std::size_t element_index) const;
  /// Element indices belonging to class k.
  const std::vector<std::size_t>& class_members(std::size_t k) const;
  /// Class of rep(k)^e.
  std::size_t power_class(std::size_t k, i64 e) const;
  std::size_t inverse_class(std::size_t k) const { return power_class(k, -1); }
  std::size_t centralizer_order(std::size_t k) const;

  /// True when both handles denote the same set of permutations.
  bool same_group(const PermGroup& other) const;
  bool is_subgroup_of(const PermGroup& other) const;

 private:
  struct Data;
  explicit PermGroup(std::shared_ptr<const Data> data) : d_(std::move(data)) {}
  std::shared_ptr<const Data> d_;
};

/// Closure of `generators` inside G; raises ElementNotInGroup.
PermGroup subgroup(const PermGroup& G, const std::vector<Permutation>& generators);

/// c is a non-trivial involution of G; raises ElementNotInGroup.
bool is_valid_conjugation(const PermGroup& G, const Permutation& c);

/// (Z/pZ)^x with a fixed primitive root.
struct CyclicFactor {
  i64 modulus = 0;
  i64 generator = 0;

  /// Uses the smallest primitive root unless one is supplied.
  static CyclicFactor for_prime(i64 p, std::optional<i64> generator = std::nullopt);
  i64 order() const { return modulus - 1; }
  /// k in [0, p-1) with generator^k = a mod p.
  i64 discrete_log(i64 a) const;
};

/// G x (Z/pZ)^x acting on degree(G) + p - 1 points: the residue a acts on the
/// extra points {deg + b - 1 : b in 1..p-1} by b -> a*b mod p.
class DirectProduct {
 public:
  DirectProduct(PermGroup group, std::size_t base_degree, CyclicFactor cyclic)
      : group_(std::move(group)), base_degree_(base_degree), cyclic_(cyclic) {}

  const PermGroup& group() const noexcept { return group_; }
  std::size_t base_degree() const noexcept { return base_degree_; }
  const CyclicFactor& cyclic() const noexcept { return cyclic_; }

  Permutation embed(const Permutation& base, i64 residue) const;
  Permutation project_base(const Permutation& x) const;
  i64 residue(const Permutation& x) const;

 private:
  PermGroup group_;
  std::size_t base_degree_;
  CyclicFactor cyclic_;
};

/// Raises POrderViolation when p divides |G|.
DirectProduct direct_product_with_cyclic(const PermGroup& G, const CyclicFactor& C);

}  // namespace iwartin
