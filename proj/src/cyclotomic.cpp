#include "iwartin/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "iwartin/error.hpp"

namespace iwartin {

namespace {

// Exact quotient of `num` by the monic polynomial `den`.
std::vector<i64> divide_exact(std::vector<i64> num, const std::vector<i64>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<i64> quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const i64 c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] = checked_add(num[i - dn + j], -checked_mul(c, den[j]));
  }
  return quot;
}

// Reduces a coefficient vector modulo Phi_m in place and truncates it to phi(m).
std::vector<i64> reduce_mod_phi(std::vector<i64> a, i64 m) {
  const auto& phi_poly = cyclotomic_polynomial(m);
  const std::size_t deg = phi_poly.size() - 1;
  for (std::size_t i = a.size(); i-- > deg;) {
    const i64 c = a[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      if (phi_poly[j] != 0) a[i - deg + j] = checked_add(a[i - deg + j], -checked_mul(c, phi_poly[j]));
    }
    a[i] = 0;
  }
  a.resize(deg, 0);
  return a;
}

}  // namespace

const std::vector<i64>& cyclotomic_polynomial(i64 m) {
  if (m < 1) raise(Errc::ConductorOverflow, "conductor must be positive");
  if (m > kConductorCap) raise(Errc::ConductorOverflow, "conductor " + std::to_string(m) + " exceeds cap");
  static std::mutex mu;
  static std::map<i64, std::vector<i64>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  // x^m - 1 = prod_{d | m} Phi_d.
  std::vector<i64> poly(static_cast<std::size_t>(m) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(m)] = 1;
  for (i64 d = 1; d < m; ++d) {
    if (m % d == 0) poly = divide_exact(std::move(poly), cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mu);
  return cache.emplace(m, std::move(poly)).first->second;
}

CycloElement CycloElement::integer(i64 value, i64 conductor) {
  std::vector<i64> c(cyclotomic_polynomial(conductor).size() - 1, 0);
  c[0] = value;
  return CycloElement(conductor, std::move(c));
}

CycloElement CycloElement::zeta(i64 conductor, i64 k) {
  std::vector<i64> c(static_cast<std::size_t>(conductor), 0);
  c[static_cast<std::size_t>(mod(k, conductor))] = 1;
  return from_coords(conductor, std::move(c));
}

CycloElement CycloElement::from_coords(i64 conductor, std::vector<i64> coords) {
  return CycloElement(conductor, reduce_mod_phi(std::move(coords), conductor));
}

bool CycloElement::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](i64 c) { return c == 0; });
}

bool CycloElement::is_rational() const noexcept {
  return std::all_of(coords_.begin() + 1, coords_.end(), [](i64 c) { return c == 0; });
}

std::optional<i64> CycloElement::as_integer() const {
  if (!is_rational()) return std::nullopt;
  return coords_[0];
}

CycloElement CycloElement::conj() const {
  std::vector<i64> dense(static_cast<std::size_t>(conductor_), 0);
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    dense[static_cast<std::size_t>(mod(-static_cast<i64>(k), conductor_))] += coords_[k];
  }
  return from_coords(conductor_, std::move(dense));
}

CycloElement CycloElement::embed(i64 new_conductor) const {
  if (new_conductor < 1 || new_conductor % conductor_ != 0) {
    raise(Errc::NotAMultiple, std::to_string(new_conductor) + " is not a multiple of " + std::to_string(conductor_));
  }
  if (new_conductor == conductor_) return *this;
  const i64 step = new_conductor / conductor_;
  std::vector<i64> dense(static_cast<std::size_t>(new_conductor), 0);
  for (std::size_t k = 0; k < coords_.size(); ++k) dense[k * static_cast<std::size_t>(step)] = coords_[k];
  return from_coords(new_conductor, std::move(dense));
}

std::pair<CycloElement, CycloElement> common_conductor(const CycloElement& a, const CycloElement& b) {
  if (a.conductor() == b.conductor()) return {a, b};
  const i64 m = lcm_checked(a.conductor(), b.conductor());
  if (m > kConductorCap) raise(Errc::ConductorOverflow, "lcm conductor " + std::to_string(m) + " exceeds cap");
  return {a.embed(m), b.embed(m)};
}

CycloElement CycloElement::operator-() const {
  auto c = coords_;
  for (auto& x : c) x = checked_mul(x, -1);
  return CycloElement(conductor_, std::move(c));
}

CycloElement operator+(const CycloElement& a, const CycloElement& b) {
  if (a.conductor_ != b.conductor_) {
    auto [x, y] = common_conductor(a, b);
    return x + y;
  }
  auto c = a.coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_add(c[i], b.coords_[i]);
  return CycloElement(a.conductor_, std::move(c));
}

CycloElement operator-(const CycloElement& a, const CycloElement& b) { return a + (-b); }

CycloElement operator*(const CycloElement& a, const CycloElement& b) {
  if (a.conductor_ != b.conductor_) {
    auto [x, y] = common_conductor(a, b);
    return x * y;
  }
  std::vector<i64> prod(a.coords_.size() + b.coords_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    if (a.coords_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coords_.size(); ++j) {
      if (b.coords_[j] != 0) prod[i + j] = checked_add(prod[i + j], checked_mul(a.coords_[i], b.coords_[j]));
    }
  }
  return CycloElement::from_coords(a.conductor_, std::move(prod));
}

bool operator==(const CycloElement& a, const CycloElement& b) {
  if (a.conductor_ == b.conductor_) return a.coords_ == b.coords_;
  auto [x, y] = common_conductor(a, b);
  return x.coords_ == y.coords_;
}

std::string CycloElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    const i64 c = coords_[k];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << '-';
    const i64 a = c < 0 ? -c : c;
    if (k == 0) os << a;
    else {
      if (a != 1) os << a << '*';
      os << "z" << conductor_;
      if (k > 1) os << '^' << k;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

RootSum::RootSum(i64 conductor, std::vector<Term> terms) : conductor_(conductor), terms_(std::move(terms)) {
  normalize();
}

void RootSum::normalize() {
  for (auto& [k, w] : terms_) k = mod(k, conductor_);
  std::sort(terms_.begin(), terms_.end());
  std::vector<Term> merged;
  for (const auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first) merged.back().second = checked_add(merged.back().second, t.second);
    else merged.push_back(t);
  }
  std::erase_if(merged, [](const Term& t) { return t.second == 0; });
  terms_ = std::move(merged);
}

RootSum RootSum::root(i64 conductor, i64 k, i64 weight) { return RootSum(conductor, {{k, weight}}); }

RootSum RootSum::from_cyclo(const CycloElement& x) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < x.coords().size(); ++k) {
    if (x.coords()[k] != 0) terms.emplace_back(static_cast<i64>(k), x.coords()[k]);
  }
  return RootSum(x.conductor(), std::move(terms));
}

CycloElement RootSum::reduce() const {
  std::vector<i64> dense(static_cast<std::size_t>(conductor_), 0);
  for (const auto& [k, w] : terms_) dense[static_cast<std::size_t>(k)] = w;
  return CycloElement::from_coords(conductor_, std::move(dense));
}

RootSum RootSum::conj() const {
  auto t = terms_;
  for (auto& [k, w] : t) k = -k;
  return RootSum(conductor_, std::move(t));
}

RootSum RootSum::embed(i64 new_conductor) const {
  if (new_conductor < 1 || new_conductor % conductor_ != 0) {
    raise(Errc::NotAMultiple, std::to_string(new_conductor) + " is not a multiple of " + std::to_string(conductor_));
  }
  const i64 step = new_conductor / conductor_;
  auto t = terms_;
  for (auto& [k, w] : t) k *= step;
  return RootSum(new_conductor, std::move(t));
}

RootSum operator*(const RootSum& a, const RootSum& b) {
  if (a.conductor_ != b.conductor_) {
    const i64 m = lcm_checked(a.conductor_, b.conductor_);
    return a.embed(m) * b.embed(m);
  }
  std::vector<RootSum::Term> t;
  t.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ka, wa] : a.terms_) {
    for (const auto& [kb, wb] : b.terms_) t.emplace_back(ka + kb, checked_mul(wa, wb));
  }
  return RootSum(a.conductor_, std::move(t));
}

RootSum operator+(const RootSum& a, const RootSum& b) {
  if (a.conductor_ != b.conductor_) {
    const i64 m = lcm_checked(a.conductor_, b.conductor_);
    return a.embed(m) + b.embed(m);
  }
  auto t = a.terms_;
  t.insert(t.end(), b.terms_.begin(), b.terms_.end());
  return RootSum(a.conductor_, std::move(t));
}

void CycloAccumulator::add_product(const RootSum& a, const RootSum& b, i64 weight) {
  if (a.conductor() != conductor_ || b.conductor() != conductor_) raise(Errc::Internal, "accumulator conductor mismatch");
  for (const auto& [ka, wa] : a.terms()) {
    const i64 wab = checked_mul(weight, wa);
    for (const auto& [kb, wb] : b.terms()) {
      auto& slot = dense_[static_cast<std::size_t>((ka + kb) % conductor_)];
      slot = checked_add(slot, checked_mul(wab, wb));
    }
  }
}

CycloElement CycloAccumulator::reduce() const { return CycloElement::from_coords(conductor_, dense_); }

}  // namespace iwartin
