#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>
#include <random>

#include "helpers.hpp"
#include "iwartin/iwasawa.hpp"

using namespace iwartin;
using testing::error_code;
using BigInt = boost::multiprecision::cpp_int;

namespace {

const Precision kPrec{8, 24};

std::vector<i64> integer_coeffs(const IwasawaElement& F) {
  std::vector<i64> out;
  for (const auto& c : F.coeffs()) out.push_back(c.c[0]);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<i64> integer_coeffs(const DistinguishedPolynomial& P) {
  std::vector<i64> out;
  for (const auto& c : P.coeffs) out.push_back(c.c[0]);
  return out;
}

/// Resultant of integer polynomials by Bareiss elimination on the Sylvester
/// matrix.
BigInt sylvester_resultant(const std::vector<i64>& a, const std::vector<i64>& b) {
  const std::size_t m = a.size() - 1, n = b.size() - 1, N = m + n;
  std::vector<std::vector<BigInt>> M(N, std::vector<BigInt>(N, 0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i <= m; ++i) M[r][r + i] = a[m - i];
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t i = 0; i <= n; ++i) M[n + r][r + i] = b[n - i];
  }
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < N; ++k) {
    if (M[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < N && M[s][k] == 0) ++s;
      if (s == N) return 0;
      std::swap(M[s], M[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < N; ++i) {
      for (std::size_t j = k + 1; j < N; ++j) M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
    }
    prev = M[k][k];
  }
  return sign * M[N - 1][N - 1];
}

i64 binomial(i64 n, i64 k) {
  std::vector<i64> row{1};
  for (i64 i = 1; i <= n; ++i) {
    std::vector<i64> next(row.size() + 1, 1);
    for (std::size_t j = 1; j < row.size(); ++j) next[j] = row[j - 1] + row[j];
    row = next;
  }
  return row[static_cast<std::size_t>(k)];
}

}  // namespace

TEST_CASE("coefficient ring") {
  const CoefficientRing Z7(7, 1, 8);
  CHECK(Z7.modulus(8) == 5764801);
  CHECK(Z7.valuation(Z7.from_int(98), 8) == 2);
  CHECK(Z7.valuation(Z7.from_int(0), 8) == 8);
  const OElem a = Z7.from_int(3);
  CHECK(Z7.mul(a, Z7.inverse(a)) == Z7.from_int(1));
  CHECK(error_code([&] { Z7.inverse(Z7.from_int(14)); }) == Errc::Internal);

  const CoefficientRing O(5, 2, 6);
  const OElem y = O.from_coords({0, 1});
  const OElem u = O.add(O.from_int(2), y);
  CHECK(O.mul(u, O.inverse(u)) == O.from_int(1));
  // y is a root of the chosen modulus.
  const auto& g = O.modulus_poly();
  OElem value = O.from_int(g[0]);
  OElem power = O.from_int(1);
  for (int i = 1; i <= 2; ++i) {
    power = O.mul(power, y);
    value = O.add(value, O.mul_int(power, g[static_cast<std::size_t>(i)]));
  }
  CHECK(O.is_zero(value, 6));
}

TEST_CASE("Weierstrass preparation of the basic examples") {
  const CoefficientRing R(7, 1, 8);
  SUBCASE("a unit") {
    const auto w = wprep(IwasawaElement::constant(R, kPrec, 3));
    CHECK(w.mu == 0);
    CHECK(w.lambda == 0);
    CHECK(w.unit == IwasawaElement::constant(R, kPrec, 3));
  }
  SUBCASE("X + 7") {
    const auto F = IwasawaElement::from_integers(R, kPrec, {7, 1});
    const auto w = wprep(F);
    CHECK(w.mu == 0);
    CHECK(w.lambda == 1);
    CHECK(integer_coeffs(w.P) == std::vector<i64>{7, 1});
    CHECK(w.unit == IwasawaElement::constant(R, kPrec, 1));
    CHECK(reconstructs(w, F));
  }
  SUBCASE("7 (X + 7)(1 + X)") {
    const auto F = IwasawaElement::constant(R, kPrec, 7) * IwasawaElement::from_integers(R, kPrec, {7, 1}) *
                   IwasawaElement::from_integers(R, kPrec, {1, 1});
    const auto w = wprep(F);
    CHECK(w.mu == 1);
    CHECK(w.lambda == 1);
    CHECK(integer_coeffs(w.P) == std::vector<i64>{7, 1});
    CHECK(w.unit.with_precision({7, 23}) == IwasawaElement::from_integers(R, {7, 23}, {1, 1}));
    CHECK(w.certified == Precision{7, 23});
    CHECK(reconstructs(w, F));
  }
  SUBCASE("vanishing input") {
    const auto F = IwasawaElement::constant(R, kPrec, R.modulus(8));
    CHECK(error_code([&] { wprep(F); }) == Errc::PrecisionExhausted);
  }
}

TEST_CASE("Weierstrass factor of a product with a nontrivial unit") {
  const CoefficientRing R(5, 1, 8);
  const auto P = IwasawaElement::from_integers(R, kPrec, {10, 5, 1});
  const auto U = IwasawaElement::from_integers(R, kPrec, {2, 3, 4, 1, 1});
  const auto F = P * U;
  const auto w = wprep(F);
  CHECK(w.mu == 0);
  CHECK(w.lambda == 2);
  CHECK(integer_coeffs(w.P) == std::vector<i64>{10, 5, 1});
  CHECK(reconstructs(w, F));
}

TEST_CASE("twist and involution of X") {
  const CoefficientRing R(7, 1, 8);
  CHECK(integer_coeffs(twist(IwasawaElement::x(R, kPrec), TwistCharacter::kappa(7))) == std::vector<i64>{7, 8});
  const auto iota = involute(IwasawaElement::x(R, kPrec));
  const i64 m = R.modulus(8);
  for (std::size_t i = 1; i <= 24; ++i) {
    const i64 expected = i % 2 == 1 ? m - 1 : 1;
    CHECK(mod(iota.coeff(i).c[0], R.modulus(kPrec.digits_at(i))) == mod(expected, R.modulus(kPrec.digits_at(i))));
  }
  CHECK(involute(iota) == IwasawaElement::x(R, kPrec));
  CHECK(error_code([] { TwistCharacter::make(9, 7); }) == Errc::InvalidTwist);
  CHECK(TwistCharacter::make(15, 7).u == 15);
}

TEST_CASE("twists compose and the involution is an involution") {
  const CoefficientRing R(3, 1, 8);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 30; ++t) {
    std::vector<i64> c(25);
    for (auto& x : c) x = static_cast<i64>(rng() % 6561);
    const auto F = IwasawaElement::from_integers(R, kPrec, c);
    const TwistCharacter u{1 + 3 * static_cast<i64>(rng() % 2187)}, v{1 + 3 * static_cast<i64>(rng() % 2187)};
    CHECK(twist(twist(F, u), v) == twist(F, {mulmod(u.u, v.u, 6561)}));
    CHECK(twist(twist(F, u), u.inverse(R)) == F);
    CHECK(involute(involute(F)) == F);
    CHECK(involute(F * F) == involute(F) * involute(F));
  }
}

TEST_CASE("omega_1 is the binomial expansion of (1+X)^p - 1") {
  for (i64 p : {3, 5, 7, 11, 13}) {
    const CoefficientRing R(p, 1, 8);
    const auto w = omega(R, kPrec, 1);
    std::vector<i64> expected{0};
    for (i64 i = 1; i <= p; ++i) expected.push_back(binomial(p, i));
    CHECK(integer_coeffs(w) == expected);
  }
  const CoefficientRing R3(3, 1, 8);
  CHECK(integer_coeffs(omega(R3, kPrec, 1)) == std::vector<i64>{0, 3, 3, 1});
  CHECK(error_code([&] { omega(R3, kPrec, 3); }) == Errc::DegreeCapExceeded);
}

TEST_CASE("nu polynomials") {
  const CoefficientRing R(3, 1, 8);
  CHECK(integer_coeffs(nu_polynomial(R, 0)) == std::vector<i64>{0, 1});
  CHECK(integer_coeffs(nu_polynomial(R, 1)) == std::vector<i64>{3, 3, 1});
  CHECK(integer_coeffs(nu_polynomial(R, 2)) == std::vector<i64>{3, 9, 18, 21, 15, 6, 1});
  const Precision wide{8, 40};
  IwasawaElement product = IwasawaElement::constant(R, wide, 1);
  for (int n = 0; n <= 3; ++n) {
    product = product * as_series(R, wide, nu_polynomial(R, n));
    CHECK(product == omega(R, wide, n));
  }
}

TEST_CASE("resultant against the Sylvester determinant") {
  std::mt19937_64 rng(9);
  for (i64 p : {3, 5}) {
    const CoefficientRing R(p, 1, 8);
    const i64 m = R.modulus(8);
    for (int t = 0; t < 12; ++t) {
      const std::size_t d = 1 + rng() % 3;
      std::vector<i64> c(d + 1);
      for (std::size_t i = 0; i < d; ++i) c[i] = p * static_cast<i64>(rng() % 50);
      c[d] = 1;
      std::vector<OElem> oc;
      for (i64 x : c) oc.push_back(R.from_int(x));
      const auto P = make_distinguished(R, oc, 8);
      for (int n = 0; n <= 1; ++n) {
        std::vector<i64> w;
        const i64 pn = n == 0 ? 1 : p;
        for (i64 i = 0; i <= pn; ++i) w.push_back(i == 0 ? 0 : binomial(pn, i));
        const BigInt expected = sylvester_resultant(c, w);
        const BigInt reduced = ((expected % m) + m) % m;
        CHECK(resultant_with_omega(R, P, n).c[0] == static_cast<i64>(reduced));
      }
    }
  }
}

TEST_CASE("finiteness of coinvariants") {
  const CoefficientRing R(7, 1, 8);
  const auto X = make_distinguished(R, {R.from_int(0), R.from_int(1)}, 8);
  const auto Xp = make_distinguished(R, {R.from_int(7), R.from_int(1)}, 8);
  const ElementaryModule EX{R, kPrec, {}, {{X, 1}}};
  const ElementaryModule EXp{R, kPrec, {}, {{Xp, 1}}};
  CHECK(coinvariants_finite(EX, 0) == Finiteness::Infinite);
  CHECK(coinvariants_finite(EX, 1) == Finiteness::Infinite);
  CHECK(coinvariants_finite(EXp, 0) == Finiteness::Finite);
  CHECK(coinvariants_finite(EXp, 1) == Finiteness::Finite);
  const ElementaryModule Emu{R, kPrec, {2}, {}};
  CHECK(coinvariants_finite(Emu, 0) == Finiteness::Finite);

  const TwistCharacter t = find_regular_twist(EX, 1);
  CHECK(t.u == 8);
  CHECK(coinvariants_finite(module_twist(EX, t), 1) == Finiteness::Finite);
  CHECK(find_regular_twist(EXp, 1).u == 1);
}

TEST_CASE("elementary modules") {
  const CoefficientRing R(5, 1, 8);
  const auto P = make_distinguished(R, {R.from_int(5), R.from_int(10), R.from_int(1)}, 8);
  const auto Q = make_distinguished(R, {R.from_int(25), R.from_int(1)}, 8);
  const ElementaryModule E{R, kPrec, {1, 2}, {{P, 2}, {Q, 1}}};
  CHECK(E.mu() == 3);
  CHECK(E.lambda() == 5);
  const auto w = wprep(char_ideal(E));
  CHECK(w.mu == 3);
  CHECK(w.lambda == 5);

  const TwistCharacter u{1 + 5 * 17};
  const ElementaryModule Et = module_twist(E, u);
  CHECK(Et.p_power_factors == E.p_power_factors);
  REQUIRE(Et.poly_factors.size() == 2);
  CHECK(Et.poly_factors[0].exponent == 2);
  CHECK(twist_lemma_check(E, u));
  CHECK(normal_form_equal(char_ideal(ext1_elementary(E)), char_ideal(E)));

  CHECK(error_code([&] { make_distinguished(R, {R.from_int(1), R.from_int(1)}, 8); }) == Errc::InvalidInstance);
  CHECK(error_code([&] { make_distinguished(R, {R.from_int(5), R.from_int(2)}, 8); }) == Errc::InvalidInstance);

  ElementaryModule big{R, kPrec, {}, {{P, 11}}};
  CHECK(error_code([&] { char_ideal(big); }) == Errc::DegreeCapExceeded);
}

TEST_CASE("functional equation on constructed pairs") {
  const CoefficientRing R(5, 1, 8);
  const auto kappa = TwistCharacter::kappa(5);
  const auto FU = IwasawaElement::from_integers(R, kPrec, {5, 10, 1}) * IwasawaElement::from_integers(R, kPrec, {3, 1, 4});
  const auto FV = involute(twist(FU, kappa));
  CHECK(funceq_check(FV, FU, kappa));
  const auto FU2 = IwasawaElement::from_integers(R, kPrec, {10, 10, 1}) * IwasawaElement::from_integers(R, kPrec, {3, 1, 4});
  CHECK_FALSE(funceq_check(FV, FU2, kappa));
  const auto FU3 = IwasawaElement::constant(R, kPrec, 5) * FU;
  CHECK_FALSE(funceq_check(FV, FU3, kappa));
}

TEST_CASE("normal-form comparison refuses to guess") {
  const CoefficientRing R(3, 1, 2);
  const Precision tiny{2, 24};
  const auto F = IwasawaElement::from_integers(R, tiny, {3, 1});
  CHECK(error_code([&] { normal_form_equal(F, F); }) == Errc::PrecisionExhausted);
}

TEST_CASE("unramified coefficients") {
  const CoefficientRing O(3, 2, 8);
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) {
    std::vector<OElem> c(25);
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] = O.from_coords({static_cast<i64>(rng() % 6561), static_cast<i64>(rng() % 6561)});
      if (i < 2) c[i] = O.mul_int(c[i], 3);
    }
    c[2] = O.add(O.mul_int(c[2], 3), O.from_coords({1, 1}));
    const IwasawaElement F(O, kPrec, c);
    const auto w = wprep(F);
    CHECK(w.lambda == 2);
    CHECK(reconstructs(w, F));
    const auto wt = wprep(twist(F, TwistCharacter::kappa(3)));
    CHECK(wt.lambda == 2);
    CHECK(involute(involute(F)) == F);
  }
}

TEST_CASE("precision parsing") {
  CHECK(parse_precision("6,30") == Precision{6, 30});
  CHECK(error_code([] { parse_precision("6"); }) == Errc::ParseError);
  CHECK(error_code([] { parse_precision("a,b"); }) == Errc::ParseError);
  CHECK(error_code([] { parse_precision("0,4"); }) == Errc::ParseError);
  ::setenv("IWARTIN_PRECISION", "5,12", 1);
  CHECK(default_precision() == Precision{5, 12});
  ::unsetenv("IWARTIN_PRECISION");
  CHECK(default_precision() == Precision{8, 24});
  CHECK(kPrec.digits_at(0) == 8);
  CHECK(kPrec.digits_at(20) == 5);
  CHECK(kPrec.digits_at(25) == 0);
}
