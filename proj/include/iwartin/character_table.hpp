#pragma once

#include <boost/rational.hpp>
#include <cstddef>
#include <optional>
#include <vector>

#include "iwartin/cyclotomic.hpp"
#include "iwartin/perm_group.hpp"

namespace iwartin {

using Rational = boost::rational<i64>;

/// A class function with values in Z[zeta_m], one per conjugacy class of its
/// group in canonical order. m is a common conductor (a multiple of the group
/// exponent). Each value keeps a sparse root-of-unity lift for fast sums.
class ClassFunction {
 public:
  ClassFunction(PermGroup group, std::vector<RootSum> lifts);

  static ClassFunction from_values(PermGroup group, const std::vector<CycloElement>& values);
  static ClassFunction trivial(const PermGroup& group);
  static ClassFunction regular(const PermGroup& group);

  const PermGroup& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return values_.size(); }
  i64 conductor() const noexcept { return conductor_; }
  const CycloElement& value(std::size_t k) const { return values_.at(k); }
  const std::vector<CycloElement>& values() const noexcept { return values_; }
  const std::vector<RootSum>& lifts() const noexcept { return lifts_; }
  /// Value at g, located through its conjugacy class.
  const CycloElement& at(const Permutation& g) const;
  /// Value at the identity, as an integer when it is one.
  std::optional<i64> degree() const { return values_.front().as_integer(); }

  ClassFunction conj() const;
  ClassFunction embed(i64 conductor) const;
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
  ClassFunction scaled(i64 factor) const;

  friend bool operator==(const ClassFunction& a, const ClassFunction& b);

 private:
  PermGroup group_;
  i64 conductor_;
  std::vector<RootSum> lifts_;
  std::vector<CycloElement> values_;
};

struct Constituent {
  std::size_t irrep_index = 0;
  i64 multiplicity = 0;
  friend bool operator==(const Constituent&, const Constituent&) = default;
};

/// Irreducible characters in canonical order: by degree, then by the
/// coordinate vectors of their values (conductor = group exponent).
struct CharTable {
  PermGroup group;
  i64 modular_prime = 0;
  std::vector<ClassFunction> irreducibles;

  std::size_t size() const noexcept { return irreducibles.size(); }
  std::optional<std::size_t> find(const ClassFunction& chi) const;
  std::size_t trivial_index() const;
};

/// Smallest prime l = 1 mod exponent with l > 2 sqrt(order), below 10^7.
i64 dixon_prime(std::size_t order, std::size_t exponent);

/// Complete character table by Dixon's method. Row and column
/// orthogonality and the degree-square sum are checked before returning
/// (OrthogonalityFailure otherwise).
CharTable dixon_table(const PermGroup& group);

/// (1/|G|) sum over classes of |C| chi(g) conj(psi(g)). Raises GroupMismatch,
/// or NonIntegerMultiplicity when the sum is not rational.
Rational inner_product(const ClassFunction& chi, const ClassFunction& psi);

/// Inner product that must be a non-negative integer.
i64 multiplicity(const ClassFunction& chi, const ClassFunction& irreducible);

/// Restriction to a subgroup H of chi's group; raises NotASubgroup.
ClassFunction restrict(const ClassFunction& chi, const PermGroup& H);

/// Irreducible constituents with non-zero multiplicity; the recomposition is
/// checked to equal chi exactly.
std::vector<Constituent> decompose(const ClassFunction& chi, const CharTable& table);

ClassFunction recompose(const std::vector<Constituent>& parts, const CharTable& table);

}  // namespace iwartin
