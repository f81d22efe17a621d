#pragma once

#include <cstdint>
#include <vector>

namespace iwartin {

using i64 = std::int64_t;
using u64 = std::uint64_t;

/// Checked integer arithmetic; overflow raises Errc::ArithmeticOverflow.
i64 checked_add(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);

/// Least non-negative residue of a mod m (m > 0).
inline i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

inline i64 mulmod(i64 a, i64 b, i64 m) {
  return static_cast<i64>((static_cast<__int128>(a) * b) % m);
}

i64 powmod(i64 base, u64 exponent, i64 m);

/// Inverse of a modulo m; requires gcd(a, m) = 1.
i64 invmod(i64 a, i64 m);

bool is_prime(i64 n);

std::vector<i64> prime_factors(i64 n);

i64 euler_phi(i64 n);

i64 lcm_checked(i64 a, i64 b);

/// Multiplicative order of a modulo m, gcd(a, m) = 1.
i64 multiplicative_order(i64 a, i64 m);

/// Smallest primitive root modulo the prime p.
i64 smallest_primitive_root(i64 p);

bool is_primitive_root(i64 g, i64 p);

/// p^k, raising ArithmeticOverflow when it does not fit in 62 bits.
i64 ipow_checked(i64 p, int k);

/// Largest v with p^v | n, n != 0.
int p_valuation(i64 n, i64 p);

}  // namespace iwartin
