#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "iwartin/cyclotomic.hpp"

using namespace iwartin;

namespace {

/// Oracle in the group ring Z[C_m]: an element sum a_k x^k maps to the integer
/// c in Z[zeta_m] (m prime) exactly when a_k - c[k = 0] is constant in k.
std::vector<i64> group_ring_product(const std::vector<i64>& a, const std::vector<i64>& b) {
  const std::size_t m = a.size();
  std::vector<i64> c(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) c[(i + j) % m] += a[i] * b[j];
  }
  return c;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<i64>{-1, 1});
  CHECK(cyclotomic_polynomial(5) == std::vector<i64>{1, 1, 1, 1, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<i64>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<i64>{1, 0, -1, 0, 1});
}

TEST_CASE("(z5 + z5^4)(z5^2 + z5^3) = -1 against a group-ring oracle") {
  const auto product = group_ring_product({0, 1, 0, 0, 1}, {0, 0, 1, 1, 0});
  // product - (-1) * x^0 must be constant.
  auto shifted = product;
  shifted[0] += 1;
  for (i64 v : shifted) CHECK(v == shifted[0]);

  const auto z = [](i64 k) { return CycloElement::zeta(5, k); };
  CHECK((z(1) + z(4)) * (z(2) + z(3)) == CycloElement::integer(-1, 5));
  CHECK(((z(1) + z(4)) * (z(2) + z(3))).as_integer() == -1);
}

TEST_CASE("embed sends zeta_3 to zeta_6 - 1") {
  CHECK(CycloElement::zeta(3, 1).embed(6) == CycloElement::zeta(6, 1) - CycloElement::integer(1, 6));
  CHECK(CycloElement::zeta(3, 1).embed(6) == CycloElement::zeta(6, 2));
  CHECK(testing::error_code([] { CycloElement::zeta(4, 1).embed(6); }) == Errc::NotAMultiple);
}

TEST_CASE("roots of unity") {
  for (i64 m : {1, 2, 3, 4, 5, 6, 8, 9, 12, 15, 28, 30}) {
    CHECK(CycloElement::zeta(m, m) == CycloElement::integer(1, m));
    CHECK(CycloElement::zeta(m, 1).conj() == CycloElement::zeta(m, m - 1));
    CycloElement sum = CycloElement::integer(0, m);
    for (i64 k = 0; k < m; ++k) sum = sum + CycloElement::zeta(m, k);
    CHECK(sum == CycloElement::integer(m == 1 ? 1 : 0, m));
  }
  CHECK(CycloElement::zeta(4, 1) * CycloElement::zeta(4, 1) == CycloElement::integer(-1, 4));
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    const i64 m = 1 + static_cast<i64>(rng() % 120);
    const auto random_element = [&] {
      std::vector<i64> c(static_cast<std::size_t>(euler_phi(m)));
      for (auto& x : c) x = static_cast<i64>(rng() % 11) - 5;
      return CycloElement::from_coords(m, c);
    };
    const auto a = random_element(), b = random_element(), c = random_element();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK(a.conj().conj() == a);
    CHECK((a - a).is_zero());
    CHECK((a * b).embed(2 * m) == a.embed(2 * m) * b.embed(2 * m));
  }
}

TEST_CASE("mixed conductors compare through the lcm") {
  const auto a = CycloElement::zeta(3, 1);
  const auto b = CycloElement::zeta(6, 2);
  const auto [x, y] = common_conductor(a, b);
  CHECK(x.conductor() == 6);
  CHECK(x == y);
  CHECK(a + b == CycloElement::zeta(6, 2) + CycloElement::zeta(6, 2));
}

TEST_CASE("root sums reduce to the same element") {
  const RootSum s = RootSum::root(5, 1) + RootSum::root(5, 4);
  CHECK(s.reduce() == CycloElement::zeta(5, 1) + CycloElement::zeta(5, 4));
  CHECK((s * s.conj()).reduce() == s.reduce() * s.reduce().conj());
  CHECK(s.embed(10).reduce() == s.reduce().embed(10));
}

TEST_CASE("overflow is reported, not wrapped") {
  CHECK(testing::error_code([] { checked_mul(i64{1} << 62, 4); }) == Errc::ArithmeticOverflow);
  CHECK(testing::error_code([] { checked_add(INT64_MAX, 1); }) == Errc::ArithmeticOverflow);
}
