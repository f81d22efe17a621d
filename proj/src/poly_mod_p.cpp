#include "iwartin/poly_mod_p.hpp"

#include <algorithm>
#include <sstream>

#include "iwartin/error.hpp"

namespace iwartin {

PolyModP::PolyModP(i64 p, std::vector<i64> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c = mod(c, p_);
  trim();
}

void PolyModP::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PolyModP PolyModP::from_integers(i64 p, std::span<const i64> coeffs) {
  if (p < 3 || !is_prime(p)) raise(Errc::InvalidInstance, "modulus " + std::to_string(p) + " is not an odd prime");
  PolyModP f(p, std::vector<i64>(coeffs.begin(), coeffs.end()));
  if (f.degree() < 1) raise(Errc::InvalidInstance, "polynomial has degree < 1 modulo " + std::to_string(p));
  return f;
}

PolyModP PolyModP::monomial(i64 p, std::size_t degree, i64 coeff) {
  std::vector<i64> c(degree + 1, 0);
  c[degree] = coeff;
  return PolyModP(p, std::move(c));
}

PolyModP PolyModP::derivative() const {
  std::vector<i64> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(mulmod(coeffs_[i], static_cast<i64>(i) % p_, p_));
  return PolyModP(p_, std::move(d));
}

PolyModP PolyModP::monic() const {
  if (is_zero()) return *this;
  const i64 inv = invmod(leading(), p_);
  std::vector<i64> c = coeffs_;
  for (auto& x : c) x = mulmod(x, inv, p_);
  return PolyModP(p_, std::move(c));
}

PolyModP operator+(const PolyModP& a, const PolyModP& b) {
  std::vector<i64> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] = mod(c[i] + b.coeffs_[i], a.p_);
  return PolyModP(a.p_, std::move(c));
}

PolyModP operator-(const PolyModP& a, const PolyModP& b) {
  std::vector<i64> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] = mod(c[i] - b.coeffs_[i], a.p_);
  return PolyModP(a.p_, std::move(c));
}

PolyModP operator*(const PolyModP& a, const PolyModP& b) {
  if (a.is_zero() || b.is_zero()) return PolyModP(a.p_, {});
  std::vector<i64> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] = mod(c[i + j] + mulmod(a.coeffs_[i], b.coeffs_[j], a.p_), a.p_);
  }
  return PolyModP(a.p_, std::move(c));
}

namespace {

void divmod(const PolyModP& a, const PolyModP& b, std::vector<i64>& q, std::vector<i64>& r) {
  if (b.is_zero()) raise(Errc::Internal, "polynomial division by zero");
  const i64 p = a.p();
  r = a.coeffs();
  q.assign(a.coeffs().size() >= b.coeffs().size() ? a.coeffs().size() - b.coeffs().size() + 1 : 0, 0);
  const i64 inv = invmod(b.leading(), p);
  const std::size_t db = b.coeffs().size() - 1;
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i] == 0) continue;
    const i64 f = mulmod(r[i], inv, p);
    q[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = mod(r[i - db + j] - mulmod(f, b.coeffs()[j], p), p);
  }
}

}  // namespace

PolyModP operator%(const PolyModP& a, const PolyModP& b) {
  std::vector<i64> q, r;
  divmod(a, b, q, r);
  return PolyModP(a.p_, std::move(r));
}

PolyModP operator/(const PolyModP& a, const PolyModP& b) {
  std::vector<i64> q, r;
  divmod(a, b, q, r);
  return PolyModP(a.p_, std::move(q));
}

std::string PolyModP::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (i == 0 || coeffs_[i] != 1) out << coeffs_[i];
    if (i >= 1) out << "x";
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

PolyModP gcd(PolyModP a, PolyModP b) {
  while (!b.is_zero()) {
    PolyModP r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

PolyModP powmod(const PolyModP& base, u64 e, const PolyModP& m) {
  PolyModP result(m.p(), {1});
  PolyModP b = base % m;
  result = result % m;
  while (e > 0) {
    if (e & 1U) result = (result * b) % m;
    b = (b * b) % m;
    e >>= 1U;
  }
  return result;
}

bool is_squarefree(const PolyModP& f) { return gcd(f, f.derivative()).degree() == 0; }

std::vector<std::size_t> degree_profile(const PolyModP& f) {
  if (!is_squarefree(f)) raise(Errc::NotSquarefree, f.to_string() + " is not squarefree mod " + std::to_string(f.p()));
  const i64 p = f.p();
  const PolyModP x = PolyModP::monomial(p, 1);
  std::vector<std::size_t> profile;
  PolyModP rest = f.monic();
  PolyModP frob = x;  // x^(p^d) mod rest
  for (std::size_t d = 1; rest.degree() >= 2 * static_cast<long>(d); ++d) {
    frob = powmod(frob, static_cast<u64>(p), rest);
    const PolyModP g = gcd(rest, frob - x);
    const long k = g.degree();
    if (k > 0) {
      profile.insert(profile.end(), static_cast<std::size_t>(k) / d, d);
      rest = rest / g;
      frob = frob % rest;
    }
  }
  if (rest.degree() > 0) profile.push_back(static_cast<std::size_t>(rest.degree()));
  std::sort(profile.begin(), profile.end());
  return profile;
}

std::string_view frobenius_verdict_name(FrobeniusVerdict v) noexcept {
  switch (v) {
    case FrobeniusVerdict::Consistent: return "Consistent";
    case FrobeniusVerdict::Inconsistent: return "Inconsistent";
    case FrobeniusVerdict::RamifiedInputAccepted: return "RamifiedInputAccepted";
  }
  return "?";
}

FrobeniusVerdict frobenius_consistency(const PolyModP& f, const PermGroup& D) {
  if (!is_squarefree(f)) return FrobeniusVerdict::RamifiedInputAccepted;
  if (static_cast<long>(D.degree()) != f.degree()) return FrobeniusVerdict::Inconsistent;
  const auto profile = degree_profile(f);
  for (const auto& g : D.elements()) {
    if (g.order() != D.order()) continue;
    if (g.cycle_type() == profile) return FrobeniusVerdict::Consistent;
  }
  return FrobeniusVerdict::Inconsistent;
}

}  // namespace iwartin
