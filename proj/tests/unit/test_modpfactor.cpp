#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "iwartin/poly_mod_p.hpp"

using namespace iwartin;
using testing::error_code;

namespace {

std::size_t count_roots(const std::vector<i64>& c, i64 p) {
  std::size_t r = 0;
  for (i64 x = 0; x < p; ++x) {
    i64 v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = (v * x + c[i]) % p;
    if (mod(v, p) == 0) ++r;
  }
  return r;
}

}  // namespace

TEST_CASE("profiles of the worked examples") {
  CHECK(degree_profile(PolyModP::from_integers(7, std::vector<i64>{1, 2, 0, 1})) == std::vector<std::size_t>{3});
  CHECK(degree_profile(PolyModP::from_integers(7, std::vector<i64>{-1, -1, 0, 0, 1})) ==
        std::vector<std::size_t>{1, 3});
  CHECK(degree_profile(PolyModP::from_integers(17, std::vector<i64>{-3, 0, -5, 0, 0, 1})) ==
        std::vector<std::size_t>{5});
  CHECK(degree_profile(PolyModP::from_integers(11, std::vector<i64>{-2, 0, 0, 0, 0, 1})) ==
        std::vector<std::size_t>{5});
  CHECK(degree_profile(PolyModP::from_integers(11, std::vector<i64>{-3, -2, -1, 0, 0, 1})) ==
        std::vector<std::size_t>{5});
}

TEST_CASE("x^5 - x^2 - 2x - 3 has a repeated root mod 29") {
  const std::vector<i64> f{-3, -2, -1, 0, 0, 1};
  const std::vector<i64> df{-2, -2, 0, 0, 5};
  bool shared = false;
  for (i64 x = 0; x < 29; ++x) {
    i64 a = 0, b = 0;
    for (std::size_t i = f.size(); i-- > 0;) a = mod(a * x + f[i], 29);
    for (std::size_t i = df.size(); i-- > 0;) b = mod(b * x + df[i], 29);
    shared = shared || (a == 0 && b == 0);
  }
  const auto F = PolyModP::from_integers(29, f);
  CHECK(is_squarefree(F) == !shared);
  CHECK_FALSE(is_squarefree(F));
  CHECK(error_code([&] { degree_profile(F); }) == Errc::NotSquarefree);
}

TEST_CASE("arithmetic and gcd") {
  const PolyModP a(7, {1, 1});      // x + 1
  const PolyModP b(7, {6, 1});      // x - 1
  const PolyModP ab = a * b;        // x^2 - 1
  CHECK(ab == PolyModP(7, {6, 0, 1}));
  CHECK(ab / a == b);
  CHECK((ab % a).is_zero());
  CHECK(gcd(ab, a * a) == a);
  CHECK(gcd(a, b) == PolyModP(7, {1}));
  CHECK(ab.derivative() == PolyModP(7, {0, 2}));
  CHECK(PolyModP(7, {2, 4}).monic() == PolyModP(7, {4, 1}));
  CHECK(powmod(PolyModP::monomial(7, 1), 7, ab) == PolyModP::monomial(7, 1));
}

TEST_CASE("input validation") {
  CHECK(error_code([] { PolyModP::from_integers(9, std::vector<i64>{1, 1}); }) == Errc::InvalidInstance);
  CHECK(error_code([] { PolyModP::from_integers(2, std::vector<i64>{1, 1}); }) == Errc::InvalidInstance);
  CHECK(error_code([] { PolyModP::from_integers(7, std::vector<i64>{3, 7}); }) == Errc::InvalidInstance);
}

TEST_CASE("profiles agree with root enumeration for degree <= 3") {
  std::mt19937_64 rng(3);
  const std::vector<i64> primes{3, 5, 7, 11, 13, 31, 53, 97};
  int checked = 0;
  while (checked < 150) {
    const i64 p = primes[rng() % primes.size()];
    const std::size_t deg = 1 + rng() % 3;
    std::vector<i64> c(deg + 1);
    for (auto& x : c) x = static_cast<i64>(rng() % static_cast<u64>(p));
    if (c[deg] == 0) c[deg] = 1;
    const auto f = PolyModP::from_integers(p, c);
    if (!is_squarefree(f)) continue;
    ++checked;
    const std::size_t r = count_roots(c, p);
    std::vector<std::size_t> expected(r, 1);
    if (r + 2 == deg) expected.push_back(2);
    if (r + 3 == deg) expected.push_back(3);
    std::sort(expected.begin(), expected.end());
    CHECK(degree_profile(f) == expected);
  }
}

TEST_CASE("products of distinct irreducibles") {
  // x^2 + 1 and x^3 + x + 1 are irreducible mod 3 (no roots).
  const PolyModP q(3, {1, 0, 1});
  const PolyModP c(3, {2, 2, 0, 1});
  REQUIRE(count_roots({1, 0, 1}, 3) == 0);
  REQUIRE(count_roots({2, 2, 0, 1}, 3) == 0);
  const PolyModP lin(3, {1, 1});
  CHECK(degree_profile(q * c * lin) == std::vector<std::size_t>{1, 2, 3});
  CHECK(degree_profile(q * c) == std::vector<std::size_t>{2, 3});
}

TEST_CASE("Frobenius consistency") {
  const auto S3 = testing::group(3, {{{1, 2}}, {{1, 2, 3}}});
  const auto C3 = subgroup(S3, {Permutation::from_cycles(3, {{1, 2, 3}})});
  const auto C2 = subgroup(S3, {Permutation::from_cycles(3, {{1, 2}})});
  const auto f = PolyModP::from_integers(7, std::vector<i64>{1, 2, 0, 1});
  CHECK(frobenius_consistency(f, C3) == FrobeniusVerdict::Consistent);
  CHECK(frobenius_consistency(f, C2) == FrobeniusVerdict::Inconsistent);
  const auto square = PolyModP::from_integers(7, std::vector<i64>{1, 2, 1});
  CHECK(frobenius_consistency(square, C2) == FrobeniusVerdict::RamifiedInputAccepted);
  CHECK(frobenius_verdict_name(FrobeniusVerdict::Consistent) == "Consistent");
}
