#include "iwartin/arith.hpp"

#include <numeric>
#include <string>

#include "iwartin/error.hpp"

namespace iwartin {

i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) raise(Errc::ArithmeticOverflow, "integer addition overflow");
  return r;
}

i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) raise(Errc::ArithmeticOverflow, "integer multiplication overflow");
  return r;
}

i64 powmod(i64 base, u64 exponent, i64 m) {
  i64 result = 1 % m;
  base = mod(base, m);
  while (exponent > 0) {
    if (exponent & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exponent >>= 1U;
  }
  return result;
}

i64 invmod(i64 a, i64 m) {
  i64 old_r = mod(a, m), r = m;
  i64 old_s = 1, s = 0;
  while (r != 0) {
    const i64 q = old_r / r;
    i64 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) raise(Errc::Internal, "invmod: " + std::to_string(a) + " not invertible mod " + std::to_string(m));
  return mod(old_s, m);
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d : {2, 3, 5, 7, 11, 13}) {
    if (n % d == 0) return n == d;
  }
  for (i64 d = 17; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<i64> prime_factors(i64 n) {
  std::vector<i64> out;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

i64 euler_phi(i64 n) {
  i64 result = n;
  for (i64 q : prime_factors(n)) result = result / q * (q - 1);
  return result;
}

i64 lcm_checked(i64 a, i64 b) { return checked_mul(a / std::gcd(a, b), b); }

i64 multiplicative_order(i64 a, i64 m) {
  i64 order = euler_phi(m);
  for (i64 q : prime_factors(order)) {
    while (order % q == 0 && powmod(a, static_cast<u64>(order / q), m) == 1) order /= q;
  }
  return order;
}

bool is_primitive_root(i64 g, i64 p) {
  if (mod(g, p) == 0) return false;
  return multiplicative_order(g, p) == p - 1;
}

i64 smallest_primitive_root(i64 p) {
  for (i64 g = 1; g < p; ++g) {
    if (is_primitive_root(g, p)) return g;
  }
  raise(Errc::Internal, "no primitive root modulo " + std::to_string(p));
}

i64 ipow_checked(i64 p, int k) {
  i64 r = 1;
  for (int i = 0; i < k; ++i) {
    r = checked_mul(r, p);
    if (r > (i64{1} << 62)) raise(Errc::ArithmeticOverflow, "p^k exceeds 62 bits");
  }
  return r;
}

int p_valuation(i64 n, i64 p) {
  int v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace iwartin
