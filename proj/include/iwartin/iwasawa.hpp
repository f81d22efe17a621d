#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iwartin/arith.hpp"

namespace iwartin {

inline constexpr int kMaxResidueDegree = 4;
inline constexpr int kGuardDegrees = 4;
inline constexpr int kGuardDigits = 2;

/// Element of O / p^N in the basis 1, y, ..., y^(f-1).
struct OElem {
  std::array<i64, kMaxResidueDegree> c{};
  friend bool operator==(const OElem&, const OElem&) = default;
};

/// O = Z_p[y]/(g), g a monic lift of the smallest irreducible polynomial of
/// degree f over F_p, worked modulo p^N.
class CoefficientRing {
 public:
  CoefficientRing(i64 p, int residue_degree, int digits);

  i64 p() const noexcept { return p_; }
  int residue_degree() const noexcept { return f_; }
  int digits() const noexcept { return digits_; }
  i64 modulus(int k) const { return pow_.at(static_cast<std::size_t>(k)); }
  const std::array<i64, kMaxResidueDegree + 1>& modulus_poly() const noexcept { return g_; }

  OElem from_int(i64 a) const;
  OElem from_coords(const std::vector<i64>& coords) const;
  OElem reduce(const OElem& a, int k) const;
  OElem add(const OElem& a, const OElem& b) const;
  OElem sub(const OElem& a, const OElem& b) const;
  OElem neg(const OElem& a) const;
  OElem mul(const OElem& a, const OElem& b) const;
  OElem mul_int(const OElem& a, i64 b) const;
  bool is_zero(const OElem& a, int k) const;
  /// Largest v <= cap with a = 0 mod p^v.
  int valuation(const OElem& a, int cap) const;
  /// Inverse modulo p^digits; raises Internal for non-units.
  OElem inverse(const OElem& a) const;
  /// a / p^v for v <= valuation(a).
  OElem divide_by_p_power(const OElem& a, int v) const;
  std::string to_string(const OElem& a) const;

  friend bool operator==(const CoefficientRing& a, const CoefficientRing& b) {
    return a.p_ == b.p_ && a.f_ == b.f_ && a.digits_ == b.digits_;
  }

 private:
  i64 p_;
  int f_;
  int digits_;
  std::array<i64, kMaxResidueDegree + 1> g_{};
  std::vector<i64> pow_;
};

/// The element is known modulo the ideal (p^N) + (p, X)^(M+1): coefficient
/// i is known modulo p^min(N, M+1-i). Products, twists and the involution
/// preserve this ideal, so they are exact at the same precision.
struct Precision {
  int N = 8;
  int M = 24;
  int digits_at(std::size_t i) const {
    const int x = M + 1 - static_cast<int>(i);
    return x < N ? (x < 0 ? 0 : x) : N;
  }
  friend bool operator==(const Precision&, const Precision&) = default;
};

/// Default (8, 24), overridden by IWARTIN_PRECISION="N,M".
Precision default_precision();
Precision parse_precision(std::string_view text);

class IwasawaElement {
 public:
  IwasawaElement(const CoefficientRing& ring, Precision prec, std::vector<OElem> coeffs);

  static IwasawaElement from_integers(const CoefficientRing& ring, Precision prec, const std::vector<i64>& coeffs);
  static IwasawaElement constant(const CoefficientRing& ring, Precision prec, i64 c);
  static IwasawaElement x(const CoefficientRing& ring, Precision prec);

  const CoefficientRing& ring() const noexcept { return ring_; }
  Precision precision() const noexcept { return prec_; }
  const std::vector<OElem>& coeffs() const noexcept { return coeffs_; }
  const OElem& coeff(std::size_t i) const { return coeffs_.at(i); }
  /// True when every coefficient vanishes to its known precision.
  bool is_zero() const;
  IwasawaElement with_precision(Precision prec) const;

  friend IwasawaElement operator+(const IwasawaElement& a, const IwasawaElement& b);
  friend IwasawaElement operator-(const IwasawaElement& a, const IwasawaElement& b);
  friend IwasawaElement operator*(const IwasawaElement& a, const IwasawaElement& b);
  /// Equality of the two classes modulo the coarser precision.
  friend bool operator==(const IwasawaElement& a, const IwasawaElement& b);

  std::string to_string() const;

 private:
  CoefficientRing ring_;
  Precision prec_;
  std::vector<OElem> coeffs_;
};

/// Monic, non-leading coefficients in pO, known modulo p^digits.
struct DistinguishedPolynomial {
  std::vector<OElem> coeffs;  // ascending, coeffs.back() == 1
  int digits = 0;
  std::size_t degree() const { return coeffs.size() - 1; }
};

struct WeierstrassForm {
  int mu = 0;
  std::size_t lambda = 0;
  DistinguishedPolynomial P;
  IwasawaElement unit;
  /// (N', M') such that F = p^mu P U modulo p^mu ((p^N') + (p, X)^(M'+1)).
  Precision certified;
};

/// F = p^mu P U. Raises PrecisionExhausted when F vanishes at working
/// precision, when lambda exceeds M minus the guard band, or when no p-adic
/// digit of P can be certified.
WeierstrassForm wprep(const IwasawaElement& F);

/// p^mu P U agrees with F in every coefficient to the certified digits.
bool reconstructs(const WeierstrassForm& w, const IwasawaElement& F);

struct TwistCharacter {
  i64 u = 1;  // a p-adic unit = 1 mod p, given by an integer representative

  static TwistCharacter make(i64 u, i64 p);  // raises InvalidTwist
  static TwistCharacter kappa(i64 p) { return {1 + p}; }
  bool is_kappa(i64 p) const { return u == 1 + p; }
  TwistCharacter inverse(const CoefficientRing& ring) const;
};

/// F(u(1+X) - 1).
IwasawaElement twist(const IwasawaElement& F, const TwistCharacter& t);
/// F((1+X)^-1 - 1).
IwasawaElement involute(const IwasawaElement& F);

/// Same mu, same lambda and P_F = P_G modulo p^c with
/// c = min(N - max mu - guard, certified digits); raises PrecisionExhausted
/// when c < 1.
bool normal_form_equal(const IwasawaElement& F, const IwasawaElement& G);

/// (1+X)^(p^n) - 1; raises DegreeCapExceeded unless p^n <= M.
IwasawaElement omega(const CoefficientRing& ring, Precision prec, int n);
/// nu_n = Phi_{p^n}(1+X) (nu_0 = X), so omega_n = nu_0 nu_1 ... nu_n.
DistinguishedPolynomial nu_polynomial(const CoefficientRing& ring, int n);

struct PolyFactor {
  DistinguishedPolynomial P;
  int exponent = 1;
};

/// Direct sum of Lambda/(p^mu_i) and Lambda/(P_j^e_j).
struct ElementaryModule {
  CoefficientRing ring;
  Precision precision;
  std::vector<int> p_power_factors;
  std::vector<PolyFactor> poly_factors;

  int mu() const;
  std::size_t lambda() const;
};

/// Raises InvalidInstance unless monic of degree >= 1 with non-leading
/// coefficients in pO.
DistinguishedPolynomial make_distinguished(const CoefficientRing& ring, const std::vector<OElem>& coeffs, int digits);

IwasawaElement as_series(const CoefficientRing& ring, Precision prec, const DistinguishedPolynomial& P);

/// Product of the factor generators; DegreeCapExceeded when lambda > M - guard.
IwasawaElement char_ideal(const ElementaryModule& E);

/// M (x) phi: each Lambda/(P^e) becomes Lambda/(Q^e), Q the normal form of
/// Tw_{u^-1}(P).
ElementaryModule module_twist(const ElementaryModule& E, const TwistCharacter& t);

bool twist_lemma_check(const ElementaryModule& E, const TwistCharacter& t);

/// Ext^1(E, Lambda) computed factor by factor from the presentation
/// 0 -> Lambda -g-> Lambda -> Lambda/(g) -> 0.
ElementaryModule ext1_elementary(const ElementaryModule& E);

enum class Finiteness { Finite, Infinite, Inconclusive };
std::string_view finiteness_name(Finiteness f) noexcept;

/// Resultant of a distinguished P with omega_n over O/p^digits(P).
OElem resultant_with_omega(const CoefficientRing& ring, const DistinguishedPolynomial& P, int n);

/// Finiteness of E_{Gamma_n}. A factor is Finite when its resultant with
/// omega_n is a certified non-zero; otherwise Infinite when some
/// nu_m = Phi_{p^m}(1+X), m <= n, divides it to its certified precision.
Finiteness coinvariants_finite(const ElementaryModule& E, int n);

/// First candidate u (1, then (1+p)^k, then 1+ap) such that the u- and
/// u^-1-twists of E have finite Gamma_n-coinvariants for all n <= n_max.
/// Raises SearchExhausted.
TwistCharacter find_regular_twist(const ElementaryModule& E, int n_max);

/// normal_form_equal(involute(F_V), twist(F_U, kappa)).
bool funceq_check(const IwasawaElement& F_V, const IwasawaElement& F_U, const TwistCharacter& kappa);

}  // namespace iwartin
