#include "iwartin/iwasawa.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <sstream>

#include "iwartin/error.hpp"
#include "iwartin/poly_mod_p.hpp"

namespace iwartin {

// ---------------------------------------------------------------- coefficients

CoefficientRing::CoefficientRing(i64 p, int residue_degree, int digits) : p_(p), f_(residue_degree), digits_(digits) {
  if (p < 3 || !is_prime(p)) raise(Errc::InvalidInstance, std::to_string(p) + " is not an odd prime");
  if (f_ < 1 || f_ > kMaxResidueDegree) {
    raise(Errc::InvalidInstance, "residue degree must lie in 1.." + std::to_string(kMaxResidueDegree));
  }
  if (digits_ < 1) raise(Errc::InvalidInstance, "p-adic precision must be positive");
  for (int k = 0; k <= digits_; ++k) pow_.push_back(ipow_checked(p, k));
  if (f_ == 1) {
    g_[1] = 1;
    return;
  }
  std::vector<i64> c(static_cast<std::size_t>(f_) + 1, 0);
  c[static_cast<std::size_t>(f_)] = 1;
  for (;;) {
    const PolyModP cand(p, c);
    if (is_squarefree(cand) && degree_profile(cand) == std::vector<std::size_t>{static_cast<std::size_t>(f_)}) break;
    std::size_t i = 0;
    while (++c[i] == p) c[i++] = 0;
  }
  for (int i = 0; i <= f_; ++i) g_[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)];
}

OElem CoefficientRing::from_int(i64 a) const {
  OElem r;
  r.c[0] = mod(a, modulus(digits_));
  return r;
}

OElem CoefficientRing::from_coords(const std::vector<i64>& coords) const {
  if (coords.size() > static_cast<std::size_t>(f_)) {
    raise(Errc::ParseError, "coefficient has " + std::to_string(coords.size()) + " coordinates, residue degree is " +
                                std::to_string(f_));
  }
  OElem r;
  for (std::size_t i = 0; i < coords.size(); ++i) r.c[i] = mod(coords[i], modulus(digits_));
  return r;
}

OElem CoefficientRing::reduce(const OElem& a, int k) const {
  const i64 m = modulus(std::clamp(k, 0, digits_));
  OElem r;
  for (int i = 0; i < f_; ++i) r.c[static_cast<std::size_t>(i)] = mod(a.c[static_cast<std::size_t>(i)], m);
  return r;
}

OElem CoefficientRing::add(const OElem& a, const OElem& b) const {
  const i64 m = modulus(digits_);
  OElem r;
  for (std::size_t i = 0; i < static_cast<std::size_t>(f_); ++i) r.c[i] = mod(a.c[i] + b.c[i], m);
  return r;
}

OElem CoefficientRing::sub(const OElem& a, const OElem& b) const {
  const i64 m = modulus(digits_);
  OElem r;
  for (std::size_t i = 0; i < static_cast<std::size_t>(f_); ++i) r.c[i] = mod(a.c[i] - b.c[i], m);
  return r;
}

OElem CoefficientRing::neg(const OElem& a) const { return sub(OElem{}, a); }

OElem CoefficientRing::mul(const OElem& a, const OElem& b) const {
  const i64 m = modulus(digits_);
  if (f_ == 1) {
    OElem r;
    r.c[0] = mulmod(a.c[0], b.c[0], m);
    return r;
  }
  std::array<i64, 2 * kMaxResidueDegree> t{};
  const auto f = static_cast<std::size_t>(f_);
  for (std::size_t i = 0; i < f; ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < f; ++j) t[i + j] = mod(t[i + j] + mulmod(a.c[i], b.c[j], m), m);
  }
  for (std::size_t d = 2 * f - 2; d >= f; --d) {
    const i64 top = t[d];
    if (top == 0) continue;
    for (std::size_t j = 0; j < f; ++j) t[d - f + j] = mod(t[d - f + j] - mulmod(top, g_[j], m), m);
    t[d] = 0;
  }
  OElem r;
  for (std::size_t i = 0; i < f; ++i) r.c[i] = t[i];
  return r;
}

OElem CoefficientRing::mul_int(const OElem& a, i64 b) const { return mul(a, from_int(b)); }

bool CoefficientRing::is_zero(const OElem& a, int k) const { return valuation(a, k) >= k; }

int CoefficientRing::valuation(const OElem& a, int cap) const {
  cap = std::min(cap, digits_);
  const i64 m = modulus(cap);
  int v = cap;
  for (int i = 0; i < f_; ++i) {
    const i64 x = mod(a.c[static_cast<std::size_t>(i)], m);
    if (x != 0) v = std::min(v, p_valuation(x, p_));
  }
  return v;
}

OElem CoefficientRing::inverse(const OElem& a) const {
  const i64 m = modulus(digits_);
  if (f_ == 1) {
    if (a.c[0] % p_ == 0) raise(Errc::Internal, "inverse of a non-unit");
    OElem r;
    r.c[0] = invmod(a.c[0], m);
    return r;
  }
  // Solve (mult-by-a) x = 1 with unit pivots.
  const auto f = static_cast<std::size_t>(f_);
  std::vector<std::vector<i64>> A(f, std::vector<i64>(f + 1, 0));
  OElem basis;
  for (std::size_t j = 0; j < f; ++j) {
    basis = OElem{};
    basis.c[j] = 1;
    const OElem col = mul(a, basis);
    for (std::size_t i = 0; i < f; ++i) A[i][j] = col.c[i];
  }
  A[0][f] = 1;
  for (std::size_t col = 0; col < f; ++col) {
    std::size_t piv = col;
    while (piv < f && A[piv][col] % p_ == 0) ++piv;
    if (piv == f) raise(Errc::Internal, "inverse of a non-unit");
    std::swap(A[piv], A[col]);
    const i64 inv = invmod(A[col][col], m);
    for (auto& x : A[col]) x = mulmod(x, inv, m);
    for (std::size_t i = 0; i < f; ++i) {
      if (i == col || A[i][col] == 0) continue;
      const i64 t = A[i][col];
      for (std::size_t j = col; j <= f; ++j) A[i][j] = mod(A[i][j] - mulmod(t, A[col][j], m), m);
    }
  }
  OElem r;
  for (std::size_t i = 0; i < f; ++i) r.c[i] = A[i][f];
  return r;
}

OElem CoefficientRing::divide_by_p_power(const OElem& a, int v) const {
  OElem r;
  const i64 d = modulus(v);
  for (int i = 0; i < f_; ++i) r.c[static_cast<std::size_t>(i)] = a.c[static_cast<std::size_t>(i)] / d;
  return r;
}

std::string CoefficientRing::to_string(const OElem& a) const {
  if (f_ == 1) return std::to_string(a.c[0]);
  std::string s = "[";
  for (int i = 0; i < f_; ++i) s += (i ? "," : "") + std::to_string(a.c[static_cast<std::size_t>(i)]);
  return s + "]";
}

// ---------------------------------------------------------------- precision

Precision parse_precision(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) raise(Errc::ParseError, "precision must be given as N,M");
  try {
    const int n = std::stoi(std::string(text.substr(0, comma)));
    const int m = std::stoi(std::string(text.substr(comma + 1)));
    if (n < 1 || m < 1) raise(Errc::ParseError, "precision components must be positive");
    return {n, m};
  } catch (const std::logic_error&) {
    raise(Errc::ParseError, "precision '" + std::string(text) + "' is not N,M");
  }
}

Precision default_precision() {
  if (const char* env = std::getenv("IWARTIN_PRECISION"); env != nullptr && *env != '\0') return parse_precision(env);
  return {};
}

// ---------------------------------------------------------------- series

namespace {

Precision meet(Precision a, Precision b) { return {std::min(a.N, b.N), std::min(a.M, b.M)}; }

void check_same_ring(const CoefficientRing& a, const CoefficientRing& b) {
  if (a.p() != b.p() || a.residue_degree() != b.residue_degree()) {
    raise(Errc::InvalidInstance, "series over different coefficient rings");
  }
}

}  // namespace

IwasawaElement::IwasawaElement(const CoefficientRing& ring, Precision prec, std::vector<OElem> coeffs)
    : ring_(ring), prec_(prec), coeffs_(std::move(coeffs)) {
  if (prec_.N < 1 || prec_.M < 1) raise(Errc::InvalidInstance, "precision components must be positive");
  if (prec_.N > ring_.digits()) raise(Errc::InvalidInstance, "precision exceeds the coefficient ring's digits");
  coeffs_.resize(static_cast<std::size_t>(prec_.M) + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = ring_.reduce(coeffs_[i], prec_.digits_at(i));
}

IwasawaElement IwasawaElement::from_integers(const CoefficientRing& ring, Precision prec, const std::vector<i64>& coeffs) {
  std::vector<OElem> c;
  for (i64 x : coeffs) c.push_back(ring.from_int(x));
  return IwasawaElement(ring, prec, std::move(c));
}

IwasawaElement IwasawaElement::constant(const CoefficientRing& ring, Precision prec, i64 c) {
  return from_integers(ring, prec, {c});
}

IwasawaElement IwasawaElement::x(const CoefficientRing& ring, Precision prec) { return from_integers(ring, prec, {0, 1}); }

bool IwasawaElement::is_zero() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!ring_.is_zero(coeffs_[i], prec_.digits_at(i))) return false;
  }
  return true;
}

IwasawaElement IwasawaElement::with_precision(Precision prec) const {
  return IwasawaElement(ring_, meet(prec, prec_), coeffs_);
}

IwasawaElement operator+(const IwasawaElement& a, const IwasawaElement& b) {
  check_same_ring(a.ring_, b.ring_);
  const Precision prec = meet(a.prec_, b.prec_);
  std::vector<OElem> c(static_cast<std::size_t>(prec.M) + 1);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.ring_.add(a.coeffs_[i], b.coeffs_[i]);
  return IwasawaElement(a.ring_, prec, std::move(c));
}

IwasawaElement operator-(const IwasawaElement& a, const IwasawaElement& b) {
  check_same_ring(a.ring_, b.ring_);
  const Precision prec = meet(a.prec_, b.prec_);
  std::vector<OElem> c(static_cast<std::size_t>(prec.M) + 1);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.ring_.sub(a.coeffs_[i], b.coeffs_[i]);
  return IwasawaElement(a.ring_, prec, std::move(c));
}

IwasawaElement operator*(const IwasawaElement& a, const IwasawaElement& b) {
  check_same_ring(a.ring_, b.ring_);
  const Precision prec = meet(a.prec_, b.prec_);
  const auto n = static_cast<std::size_t>(prec.M) + 1;
  std::vector<OElem> c(n);
  const auto& R = a.ring_;
  for (std::size_t i = 0; i < n; ++i) {
    if (R.is_zero(a.coeffs_[i], R.digits())) continue;
    for (std::size_t j = 0; i + j < n; ++j) c[i + j] = R.add(c[i + j], R.mul(a.coeffs_[i], b.coeffs_[j]));
  }
  return IwasawaElement(R, prec, std::move(c));
}

bool operator==(const IwasawaElement& a, const IwasawaElement& b) { return (a - b).is_zero(); }

std::string IwasawaElement::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (ring_.is_zero(coeffs_[i], prec_.digits_at(i))) continue;
    if (!first) out << " + ";
    first = false;
    out << ring_.to_string(coeffs_[i]);
    if (i >= 1) out << "*X";
    if (i >= 2) out << "^" << i;
  }
  if (first) out << "0";
  out << " + O(" << ring_.p() << "^" << prec_.N << ", X^" << prec_.M + 1 << ")";
  return out.str();
}

// ---------------------------------------------------------------- truncated polynomial helpers

namespace {

using Poly = std::vector<OElem>;

Poly poly_mul(const CoefficientRing& R, const Poly& a, const Poly& b, std::size_t limit) {
  if (a.empty() || b.empty()) return {};
  Poly c(std::min(limit, a.size() + b.size() - 1));
  for (std::size_t i = 0; i < a.size() && i < c.size(); ++i) {
    if (R.is_zero(a[i], R.digits())) continue;
    for (std::size_t j = 0; j < b.size() && i + j < c.size(); ++j) c[i + j] = R.add(c[i + j], R.mul(a[i], b[j]));
  }
  return c;
}

// Inverse of a series with unit constant term, modulo X^limit.
Poly series_inverse(const CoefficientRing& R, const Poly& a, std::size_t limit) {
  Poly inv(limit);
  const OElem c0 = R.inverse(a.at(0));
  for (std::size_t i = 0; i < limit; ++i) {
    OElem acc = i == 0 ? R.from_int(1) : OElem{};
    for (std::size_t j = 1; j <= i && j < a.size(); ++j) acc = R.sub(acc, R.mul(a[j], inv[i - j]));
    inv[i] = R.mul(acc, c0);
  }
  return inv;
}

// Long division by a monic polynomial; returns (quotient, remainder).
std::pair<Poly, Poly> poly_divmod(const CoefficientRing& R, Poly a, const Poly& monic) {
  const std::size_t d = monic.size() - 1;
  if (a.size() <= d) return {Poly{}, a};
  Poly q(a.size() - d);
  for (std::size_t i = a.size(); i-- > d;) {
    const OElem t = a[i];
    q[i - d] = t;
    if (R.is_zero(t, R.digits())) continue;
    for (std::size_t j = 0; j <= d; ++j) a[i - d + j] = R.sub(a[i - d + j], R.mul(t, monic[j]));
  }
  a.resize(d);
  return {q, a};
}

Poly poly_mulmod(const CoefficientRing& R, const Poly& a, const Poly& b, const Poly& monic) {
  return poly_divmod(R, poly_mul(R, a, b, a.size() + b.size()), monic).second;
}

Poly reduce_all(const CoefficientRing& R, Poly a, int k) {
  for (auto& x : a) x = R.reduce(x, k);
  return a;
}

// Coefficients of (1+X)^e mod p^digits, e small enough to expand.
Poly binomial_row(const CoefficientRing& R, i64 e) {
  Poly row{R.from_int(1)};
  const i64 m = R.modulus(R.digits());
  std::vector<i64> cur{1};
  for (i64 n = 1; n <= e; ++n) {
    std::vector<i64> next(cur.size() + 1, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) {
      next[i] = mod(next[i] + cur[i], m);
      next[i + 1] = mod(next[i + 1] + cur[i], m);
    }
    cur = std::move(next);
  }
  row.clear();
  for (i64 c : cur) row.push_back(R.from_int(c));
  return row;
}

}  // namespace

// ---------------------------------------------------------------- Weierstrass preparation

WeierstrassForm wprep(const IwasawaElement& F) {
  const CoefficientRing& R = F.ring();
  const Precision prec = F.precision();
  const auto n = static_cast<std::size_t>(prec.M) + 1;

  int mu = INT_MAX;
  std::vector<int> vals(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int d = prec.digits_at(i);
    vals[i] = R.valuation(F.coeff(i), d);
    if (vals[i] < d) mu = std::min(mu, vals[i]);
  }
  if (mu == INT_MAX) raise(Errc::PrecisionExhausted, "series vanishes at working precision");
  std::size_t lambda = 0;
  while (!(vals[lambda] == mu && mu < prec.digits_at(lambda))) ++lambda;
  if (static_cast<int>(lambda) > prec.M - kGuardDegrees) {
    raise(Errc::PrecisionExhausted, "lambda = " + std::to_string(lambda) + " exceeds the guard band at M = " +
                                        std::to_string(prec.M));
  }
  for (std::size_t j = 0; j < lambda; ++j) {
    if (prec.digits_at(j) < mu + 1) raise(Errc::PrecisionExhausted, "low coefficients not certified divisible by p");
  }

  int k = prec.N - mu;
  if (lambda > 0) {
    const int l = static_cast<int>(lambda);
    k = std::min({k, (prec.M - mu) / l, 1 - mu + prec.M / l});
  }
  if (k < 1) raise(Errc::PrecisionExhausted, "no certified digits for the distinguished polynomial");
  const int unit_m = prec.M - mu;
  if (unit_m < 1 || unit_m < static_cast<int>(lambda)) {
    raise(Errc::PrecisionExhausted, "no certified X-precision for the unit");
  }

  // F1 = F / p^mu, with the coefficients that are still known.
  const std::size_t known = static_cast<std::size_t>(std::max(0, prec.M + 1 - mu));
  Poly f1(std::min(known, n));
  for (std::size_t i = 0; i < f1.size(); ++i) {
    f1[i] = prec.digits_at(i) > mu ? R.divide_by_p_power(R.reduce(F.coeff(i), prec.digits_at(i)), mu) : OElem{};
  }

  Poly P;
  if (lambda == 0) {
    P = {R.from_int(1)};
  } else {
    const std::size_t L = std::min((static_cast<std::size_t>(k) + 1) * lambda, f1.size());
    Poly B(f1.begin(), f1.begin() + static_cast<std::ptrdiff_t>(lambda));
    Poly C(f1.begin() + static_cast<std::ptrdiff_t>(lambda), f1.end());
    const Poly h = poly_mul(R, B, series_inverse(R, C, L), L);
    Poly s{R.from_int(1)};
    for (int it = 0; it < k; ++it) {
      const Poly sh = poly_mul(R, s, h, L);
      Poly next(sh.size() > lambda ? sh.size() - lambda : 1);
      next[0] = R.from_int(1);
      for (std::size_t i = lambda; i < sh.size(); ++i) next[i - lambda] = R.sub(next[i - lambda], sh[i]);
      s = std::move(next);
    }
    const Poly sh = poly_mul(R, s, h, lambda);
    P.assign(lambda + 1, OElem{});
    for (std::size_t i = 0; i < lambda && i < sh.size(); ++i) P[i] = R.reduce(sh[i], k);
    P[lambda] = R.from_int(1);
    for (std::size_t i = 0; i < lambda; ++i) {
      if (R.valuation(P[i], k) < 1) raise(Errc::Internal, "prepared polynomial is not distinguished");
    }
  }

  Poly f1k = reduce_all(R, f1, k);
  auto [q, rem] = poly_divmod(R, f1k, P);
  for (const auto& r : rem) {
    if (!R.is_zero(r, k)) raise(Errc::Internal, "Weierstrass division left a non-zero remainder");
  }
  const Precision certified{k, unit_m};
  IwasawaElement unit(R, certified, reduce_all(R, q, k));
  return WeierstrassForm{mu, lambda, DistinguishedPolynomial{P, k}, std::move(unit), certified};
}

bool reconstructs(const WeierstrassForm& w, const IwasawaElement& F) {
  const CoefficientRing& R = F.ring();
  const Poly prod = poly_mul(R, w.P.coeffs, w.unit.coeffs(), F.coeffs().size());
  for (std::size_t i = 0; i < F.coeffs().size(); ++i) {
    const int d = std::min(w.mu + w.certified.N, F.precision().digits_at(i));
    if (d <= 0) continue;
    const OElem lhs = i < prod.size() ? R.mul(R.from_int(R.modulus(w.mu)), prod[i]) : OElem{};
    if (!R.is_zero(R.sub(lhs, F.coeff(i)), d)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- twists

TwistCharacter TwistCharacter::make(i64 u, i64 p) {
  if (mod(u - 1, p) != 0) raise(Errc::InvalidTwist, "twist value " + std::to_string(u) + " is not 1 mod " + std::to_string(p));
  return {u};
}

TwistCharacter TwistCharacter::inverse(const CoefficientRing& ring) const {
  const i64 m = ring.modulus(ring.digits());
  return {invmod(mod(u, m), m)};
}

IwasawaElement twist(const IwasawaElement& F, const TwistCharacter& t) {
  const CoefficientRing& R = F.ring();
  if (mod(t.u - 1, R.p()) != 0) raise(Errc::InvalidTwist, "twist value is not 1 mod p");
  const Precision prec = F.precision();
  const auto n = static_cast<std::size_t>(prec.M) + 1;
  const OElem u = R.from_int(t.u);
  const OElem u1 = R.from_int(t.u - 1);
  // Horner in the substitution X -> (u-1) + uX.
  Poly r(n);
  for (std::size_t j = n; j-- > 0;) {
    for (std::size_t i = n; i-- > 0;) {
      OElem v = R.mul(r[i], u1);
      if (i > 0) v = R.add(v, R.mul(r[i - 1], u));
      r[i] = R.reduce(v, prec.digits_at(i));
    }
    r[0] = R.reduce(R.add(r[0], F.coeff(j)), prec.digits_at(0));
  }
  return IwasawaElement(R, prec, std::move(r));
}

IwasawaElement involute(const IwasawaElement& F) {
  const CoefficientRing& R = F.ring();
  const Precision prec = F.precision();
  const auto n = static_cast<std::size_t>(prec.M) + 1;
  // Horner in X -> -X / (1+X).
  Poly r(n);
  for (std::size_t j = n; j-- > 0;) {
    for (std::size_t i = 1; i < n; ++i) r[i] = R.sub(r[i], r[i - 1]);
    for (std::size_t i = n; i-- > 1;) r[i] = R.reduce(R.neg(r[i - 1]), prec.digits_at(i));
    r[0] = R.reduce(F.coeff(j), prec.digits_at(0));
  }
  return IwasawaElement(R, prec, std::move(r));
}

bool normal_form_equal(const IwasawaElement& F, const IwasawaElement& G) {
  check_same_ring(F.ring(), G.ring());
  const WeierstrassForm a = wprep(F);
  const WeierstrassForm b = wprep(G);
  if (a.mu != b.mu || a.lambda != b.lambda) return false;
  const int n = std::min(F.precision().N, G.precision().N);
  const int c = std::min({n - std::max(a.mu, b.mu) - kGuardDigits, a.certified.N, b.certified.N});
  if (c < 1) raise(Errc::PrecisionExhausted, "normal forms agree on no certified digit");
  for (std::size_t i = 0; i < a.P.coeffs.size(); ++i) {
    if (!F.ring().is_zero(F.ring().sub(a.P.coeffs[i], b.P.coeffs[i]), c)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- omega and nu

IwasawaElement omega(const CoefficientRing& ring, Precision prec, int n) {
  if (n < 0) raise(Errc::DegreeCapExceeded, "omega index must be non-negative");
  i64 e = 1;
  for (int i = 0; i < n; ++i) {
    e = checked_mul(e, ring.p());
    if (e > prec.M) break;
  }
  if (e > prec.M) {
    raise(Errc::DegreeCapExceeded, "deg omega_" + std::to_string(n) + " exceeds M = " + std::to_string(prec.M));
  }
  Poly row = binomial_row(ring, e);
  row[0] = OElem{};
  return IwasawaElement(ring, prec, std::move(row));
}

DistinguishedPolynomial nu_polynomial(const CoefficientRing& ring, int n) {
  if (n == 0) return {{OElem{}, ring.from_int(1)}, ring.digits()};
  i64 lower = 1;
  for (int i = 1; i < n; ++i) lower = checked_mul(lower, ring.p());
  const i64 upper = checked_mul(lower, ring.p());
  if (upper > 100'000) raise(Errc::DegreeCapExceeded, "nu_" + std::to_string(n) + " is too large to expand");
  Poly num = binomial_row(ring, upper);
  Poly den = binomial_row(ring, lower);
  num[0] = OElem{};
  den[0] = OElem{};
  // Divide X^-1 omega_n by X^-1 omega_{n-1}, both monic.
  num.erase(num.begin());
  den.erase(den.begin());
  auto [q, r] = poly_divmod(ring, num, den);
  return {q, ring.digits()};
}

// ---------------------------------------------------------------- elementary modules

int ElementaryModule::mu() const {
  int s = 0;
  for (int m : p_power_factors) s += m;
  return s;
}

std::size_t ElementaryModule::lambda() const {
  std::size_t s = 0;
  for (const auto& f : poly_factors) s += static_cast<std::size_t>(f.exponent) * f.P.degree();
  return s;
}

DistinguishedPolynomial make_distinguished(const CoefficientRing& ring, const std::vector<OElem>& coeffs, int digits) {
  if (coeffs.size() < 2) raise(Errc::InvalidInstance, "distinguished polynomial must have degree >= 1");
  digits = std::min(digits, ring.digits());
  Poly c = reduce_all(ring, coeffs, digits);
  if (!(c.back() == ring.reduce(ring.from_int(1), digits))) raise(Errc::InvalidInstance, "polynomial is not monic");
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    if (ring.valuation(c[i], digits) < 1) raise(Errc::InvalidInstance, "non-leading coefficient is not divisible by p");
  }
  return {c, digits};
}

IwasawaElement as_series(const CoefficientRing& ring, Precision prec, const DistinguishedPolynomial& P) {
  return IwasawaElement(ring, {std::min(prec.N, P.digits), prec.M}, P.coeffs);
}

IwasawaElement char_ideal(const ElementaryModule& E) {
  const auto lambda = E.lambda();
  if (static_cast<int>(lambda) > E.precision.M - kGuardDegrees) {
    raise(Errc::DegreeCapExceeded, "lambda = " + std::to_string(lambda) + " exceeds M minus the guard band");
  }
  const int mu = E.mu();
  int digits = E.precision.N;
  for (const auto& f : E.poly_factors) digits = std::min(digits, mu + f.P.digits);
  const Precision prec{digits, E.precision.M};
  if (mu >= prec.N) raise(Errc::PrecisionExhausted, "mu = " + std::to_string(mu) + " reaches the p-adic precision");
  IwasawaElement g = IwasawaElement::constant(E.ring, prec, E.ring.modulus(mu));
  for (const auto& f : E.poly_factors) {
    const IwasawaElement P = as_series(E.ring, prec, f.P);
    for (int e = 0; e < f.exponent; ++e) g = g * P;
  }
  return g.with_precision(prec);
}

ElementaryModule module_twist(const ElementaryModule& E, const TwistCharacter& t) {
  const TwistCharacter inv = t.inverse(E.ring);
  ElementaryModule out{E.ring, E.precision, E.p_power_factors, {}};
  for (const auto& f : E.poly_factors) {
    const WeierstrassForm w = wprep(twist(as_series(E.ring, E.precision, f.P), inv));
    if (w.mu != 0 || w.lambda != f.P.degree()) raise(Errc::Internal, "twist changed the invariants of a factor");
    out.poly_factors.push_back({w.P, f.exponent});
  }
  return out;
}

bool twist_lemma_check(const ElementaryModule& E, const TwistCharacter& t) {
  return normal_form_equal(twist(char_ideal(module_twist(E, t)), t), char_ideal(E));
}

ElementaryModule ext1_elementary(const ElementaryModule& E) {
  // Hom(-, Lambda) turns multiplication by g into multiplication by g, so the
  // cokernel of the dual presentation is Lambda/(g) again.
  ElementaryModule out{E.ring, E.precision, {}, {}};
  for (int m : E.p_power_factors) out.p_power_factors.push_back(m);
  for (const auto& f : E.poly_factors) {
    const DistinguishedPolynomial dual = make_distinguished(E.ring, f.P.coeffs, f.P.digits);
    out.poly_factors.push_back({dual, f.exponent});
  }
  return out;
}

std::string_view finiteness_name(Finiteness f) noexcept {
  switch (f) {
    case Finiteness::Finite: return "Finite";
    case Finiteness::Infinite: return "Infinite";
    case Finiteness::Inconclusive: return "Inconclusive";
  }
  return "?";
}

OElem resultant_with_omega(const CoefficientRing& ring, const DistinguishedPolynomial& P, int n) {
  const int k = P.digits;
  const std::size_t d = P.degree();
  if (d == 0) return ring.from_int(1);
  const Poly& monic = P.coeffs;
  // (1+X)^(p^n) mod P by repeated p-th powers.
  Poly w{ring.from_int(1), ring.from_int(1)};
  w = poly_divmod(ring, w, monic).second;
  for (int i = 0; i < n; ++i) {
    Poly acc{ring.from_int(1)};
    for (i64 j = 0; j < ring.p(); ++j) acc = poly_mulmod(ring, acc, w, monic);
    w = reduce_all(ring, acc, k);
  }
  w.resize(d);
  w[0] = ring.sub(w[0], ring.from_int(1));

  // Matrix of multiplication by w on O[X]/(P): column j holds X^j w.
  std::vector<Poly> cols;
  Poly cur = w;
  for (std::size_t j = 0; j < d; ++j) {
    cur.resize(d);
    cols.push_back(reduce_all(ring, cur, k));
    Poly shifted(d + 1);
    for (std::size_t i = 0; i < d; ++i) shifted[i + 1] = cur[i];
    cur = poly_divmod(ring, shifted, monic).second;
  }
  std::vector<Poly> a(d, Poly(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) a[i][j] = cols[j][i];
  }

  OElem det = ring.from_int(1);
  bool negate = false;
  for (std::size_t s = 0; s < d; ++s) {
    std::size_t pr = s, pc = s;
    int best = k;
    for (std::size_t i = s; i < d; ++i) {
      for (std::size_t j = s; j < d; ++j) {
        const int v = ring.valuation(a[i][j], k);
        if (v < best) best = v, pr = i, pc = j;
      }
    }
    if (best >= k) return OElem{};
    if (pr != s) std::swap(a[pr], a[s]), negate = !negate;
    if (pc != s) {
      for (auto& row : a) std::swap(row[pc], row[s]);
      negate = !negate;
    }
    const OElem pivot = a[s][s];
    const OElem unit_inv = ring.inverse(ring.divide_by_p_power(pivot, best));
    det = ring.reduce(ring.mul(det, pivot), k);
    for (std::size_t i = s + 1; i < d; ++i) {
      if (ring.is_zero(a[i][s], k)) continue;
      const OElem factor = ring.mul(ring.divide_by_p_power(ring.reduce(a[i][s], k), best), unit_inv);
      for (std::size_t j = s; j < d; ++j) a[i][j] = ring.reduce(ring.sub(a[i][j], ring.mul(factor, a[s][j])), k);
    }
  }
  return ring.reduce(negate ? ring.neg(det) : det, k);
}

Finiteness coinvariants_finite(const ElementaryModule& E, int n) {
  const CoefficientRing& R = E.ring;
  for (const auto& f : E.poly_factors) {
    const int k = f.P.digits;
    if (k < 1) return Finiteness::Inconclusive;
    if (!R.is_zero(resultant_with_omega(R, f.P, n), k)) continue;
    // omega_n is the product of the irreducible nu_m, m <= n.
    for (int m = 0; m <= n; ++m) {
      const DistinguishedPolynomial nu = nu_polynomial(R, m);
      if (nu.degree() > f.P.degree()) break;
      const Poly rem = poly_divmod(R, f.P.coeffs, nu.coeffs).second;
      const bool divides = std::all_of(rem.begin(), rem.end(), [&](const OElem& x) { return R.is_zero(x, k); });
      if (divides) return Finiteness::Infinite;
    }
  }
  return Finiteness::Finite;
}

TwistCharacter find_regular_twist(const ElementaryModule& E, int n_max) {
  const i64 p = E.ring.p();
  const i64 m = E.ring.modulus(E.ring.digits());
  std::vector<i64> candidates{1};
  i64 power = 1;
  for (i64 k = 1; k < p; ++k) {
    power = mulmod(power, 1 + p, m);
    candidates.push_back(power);
  }
  for (i64 a = 2; a < p; ++a) candidates.push_back(1 + a * p);

  for (i64 u : candidates) {
    const TwistCharacter t{u};
    try {
      const ElementaryModule plus = module_twist(E, t);
      const ElementaryModule minus = module_twist(E, t.inverse(E.ring));
      bool ok = true;
      for (int n = 0; n <= n_max && ok; ++n) {
        ok = coinvariants_finite(plus, n) == Finiteness::Finite && coinvariants_finite(minus, n) == Finiteness::Finite;
      }
      if (ok) return t;
    } catch (const Error& e) {
      if (e.code() != Errc::PrecisionExhausted) throw;
    }
  }
  raise(Errc::SearchExhausted, "no regular twist among " + std::to_string(candidates.size()) + " candidates");
}

bool funceq_check(const IwasawaElement& F_V, const IwasawaElement& F_U, const TwistCharacter& kappa) {
  return normal_form_equal(involute(F_V), twist(F_U, kappa));
}

}  // namespace iwartin
