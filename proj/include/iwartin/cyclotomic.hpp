#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iwartin/arith.hpp"

namespace iwartin {

inline constexpr i64 kConductorCap = 10'000;

/// Coefficients of the m-th cyclotomic polynomial, ascending; cached.
/// Raises ConductorOverflow above kConductorCap.
const std::vector<i64>& cyclotomic_polynomial(i64 m);

/// An element of Z[zeta_m] in the power basis 1, zeta, ..., zeta^(phi(m)-1).
/// Coordinates are exact 64-bit integers; any overflow raises
/// ArithmeticOverflow rather than wrapping.
class CycloElement {
 public:
  CycloElement() : conductor_(1), coords_{0} {}

  static CycloElement integer(i64 value, i64 conductor = 1);
  /// zeta_m^k.
  static CycloElement zeta(i64 conductor, i64 k);
  /// Reduces an arbitrary-length coefficient vector in zeta_m modulo Phi_m.
  static CycloElement from_coords(i64 conductor, std::vector<i64> coords);

  i64 conductor() const noexcept { return conductor_; }
  const std::vector<i64>& coords() const noexcept { return coords_; }

  bool is_zero() const noexcept;
  bool is_rational() const noexcept;
  /// The rational integer value, when the element is one.
  std::optional<i64> as_integer() const;

  /// Complex conjugation zeta -> zeta^-1.
  CycloElement conj() const;
  /// zeta_m -> zeta_{m'}^{m'/m}; raises NotAMultiple.
  CycloElement embed(i64 new_conductor) const;

  CycloElement operator-() const;
  friend CycloElement operator+(const CycloElement& a, const CycloElement& b);
  friend CycloElement operator-(const CycloElement& a, const CycloElement& b);
  friend CycloElement operator*(const CycloElement& a, const CycloElement& b);
  friend bool operator==(const CycloElement& a, const CycloElement& b);

  std::string to_string() const;

 private:
  CycloElement(i64 conductor, std::vector<i64> coords) : conductor_(conductor), coords_(std::move(coords)) {}
  i64 conductor_;
  std::vector<i64> coords_;
};

/// Brings both operands to the lcm of their conductors.
std::pair<CycloElement, CycloElement> common_conductor(const CycloElement& a, const CycloElement& b);

/// A sum of m-th roots of unity with integer weights, i.e. an element of
/// Z[x]/(x^m - 1) lifting a value of Z[zeta_m]. Character values are naturally
/// of this shape (sums of eigenvalues), and products stay sparse, so heavy
/// orthogonality sums are accumulated here and reduced once.
class RootSum {
 public:
  using Term = std::pair<i64, i64>;  // (exponent in [0, m), weight)

  RootSum() = default;
  RootSum(i64 conductor, std::vector<Term> terms);

  static RootSum root(i64 conductor, i64 k, i64 weight = 1);
  static RootSum from_cyclo(const CycloElement& x);

  i64 conductor() const noexcept { return conductor_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  CycloElement reduce() const;
  RootSum conj() const;
  RootSum embed(i64 new_conductor) const;
  friend RootSum operator*(const RootSum& a, const RootSum& b);
  friend RootSum operator+(const RootSum& a, const RootSum& b);

 private:
  void normalize();
  i64 conductor_ = 1;
  std::vector<Term> terms_;
};

/// Dense accumulator over Z[x]/(x^m - 1).
class CycloAccumulator {
 public:
  explicit CycloAccumulator(i64 conductor) : conductor_(conductor), dense_(static_cast<std::size_t>(conductor), 0) {}
  /// += weight * a * b (both of this conductor).
  void add_product(const RootSum& a, const RootSum& b, i64 weight);
  CycloElement reduce() const;

 private:
  i64 conductor_;
  std::vector<i64> dense_;
};

}  // namespace iwartin
