#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "iwartin/arith.hpp"
#include "iwartin/perm_group.hpp"

namespace iwartin {

/// Polynomial over F_p, ascending coefficients, no trailing zeros. The zero
/// polynomial has an empty coefficient vector.
class PolyModP {
 public:
  PolyModP() = default;
  PolyModP(i64 p, std::vector<i64> coeffs);

  /// Reduces integer coefficients mod p; p must be an odd prime and the
  /// reduction must have degree >= 1 (InvalidInstance otherwise).
  static PolyModP from_integers(i64 p, std::span<const i64> coeffs);
  static PolyModP monomial(i64 p, std::size_t degree, i64 coeff = 1);

  i64 p() const noexcept { return p_; }
  const std::vector<i64>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  i64 leading() const { return coeffs_.back(); }

  PolyModP derivative() const;
  PolyModP monic() const;

  friend PolyModP operator+(const PolyModP& a, const PolyModP& b);
  friend PolyModP operator-(const PolyModP& a, const PolyModP& b);
  friend PolyModP operator*(const PolyModP& a, const PolyModP& b);
  friend PolyModP operator%(const PolyModP& a, const PolyModP& b);
  friend PolyModP operator/(const PolyModP& a, const PolyModP& b);
  friend bool operator==(const PolyModP&, const PolyModP&) = default;

  std::string to_string() const;

 private:
  void trim();
  i64 p_ = 2;
  std::vector<i64> coeffs_;
};

PolyModP gcd(PolyModP a, PolyModP b);

/// base^e mod m.
PolyModP powmod(const PolyModP& base, u64 e, const PolyModP& m);

bool is_squarefree(const PolyModP& f);

/// Degrees of the irreducible factors in ascending order, by distinct-degree
/// factorization. Raises NotSquarefree.
std::vector<std::size_t> degree_profile(const PolyModP& f);

enum class FrobeniusVerdict { Consistent, Inconsistent, RamifiedInputAccepted };

std::string_view frobenius_verdict_name(FrobeniusVerdict v) noexcept;

/// Squarefree f: Consistent iff D is cyclic with a generator whose cycle type
/// is the degree profile. Otherwise RamifiedInputAccepted.
FrobeniusVerdict frobenius_consistency(const PolyModP& f, const PermGroup& D);

}  // namespace iwartin
