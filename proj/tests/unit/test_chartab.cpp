#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "iwartin/character_table.hpp"

using namespace iwartin;
using testing::group;

namespace {

/// Standard induction formula, evaluated element by element.
ClassFunction induce(const ClassFunction& psi, const PermGroup& G) {
  const PermGroup& H = psi.group();
  std::vector<CycloElement> values;
  for (const auto& cls : G.classes()) {
    CycloElement sum = CycloElement::integer(0, psi.conductor());
    for (const auto& x : G.elements()) {
      const Permutation y = x.inverse() * cls.representative * x;
      if (H.contains(y)) sum = sum + psi.at(y);
    }
    std::vector<i64> c = sum.coords();
    for (auto& v : c) {
      REQUIRE(v % static_cast<i64>(H.order()) == 0);
      v /= static_cast<i64>(H.order());
    }
    values.push_back(CycloElement::from_coords(sum.conductor(), c));
  }
  return ClassFunction::from_values(G, values);
}

void check_orthogonality(const CharTable& T) {
  i64 squares = 0;
  for (std::size_t i = 0; i < T.size(); ++i) {
    squares += *T.irreducibles[i].degree() * *T.irreducibles[i].degree();
    for (std::size_t j = 0; j < T.size(); ++j) {
      CHECK(inner_product(T.irreducibles[i], T.irreducibles[j]) == Rational(i == j ? 1 : 0));
    }
  }
  CHECK(squares == static_cast<i64>(T.group.order()));
  for (std::size_t a = 0; a < T.size(); ++a) {
    for (std::size_t b = 0; b < T.size(); ++b) {
      CycloElement sum;
      for (const auto& chi : T.irreducibles) sum = sum + chi.value(a) * chi.value(b).conj();
      const i64 expected = a == b ? static_cast<i64>(T.group.centralizer_order(a)) : 0;
      CHECK(sum.as_integer() == expected);
    }
  }
}

}  // namespace

TEST_CASE("S3 table") {
  const auto S3 = group(3, {{{1, 2}}, {{1, 2, 3}}});
  const CharTable T = dixon_table(S3);
  REQUIRE(T.size() == 3);
  // Classes: identity, transpositions, 3-cycles. Sign sorts before trivial.
  const auto row = [&](std::size_t i) {
    std::vector<i64> v;
    for (const auto& x : T.irreducibles[i].values()) v.push_back(*x.as_integer());
    return v;
  };
  CHECK(row(0) == std::vector<i64>{1, -1, 1});
  CHECK(row(1) == std::vector<i64>{1, 1, 1});
  CHECK(row(2) == std::vector<i64>{2, 0, -1});
  CHECK(T.trivial_index() == 1);
  check_orthogonality(T);
}

TEST_CASE("A5 table") {
  const auto A5 = group(5, {{{1, 2, 3, 4, 5}}, {{1, 2, 3}}});
  const CharTable T = dixon_table(A5);
  REQUIRE(T.size() == 5);
  std::vector<i64> degrees;
  for (const auto& chi : T.irreducibles) degrees.push_back(*chi.degree());
  CHECK(degrees == std::vector<i64>{1, 3, 3, 4, 5});
  // The golden-ratio values of the 3-dimensional characters.
  const auto golden = CycloElement::integer(1) + CycloElement::zeta(5, 1) + CycloElement::zeta(5, 4);
  const auto& v3 = T.irreducibles[1].value(3);
  const auto& w3 = T.irreducibles[2].value(3);
  CHECK((v3 == golden) != (w3 == golden));
  CHECK(v3 + w3 == CycloElement::integer(1));
  CHECK(v3 * w3 == CycloElement::integer(-1));
  check_orthogonality(T);
}

TEST_CASE("tables of cyclic and product groups") {
  for (i64 p : {7, 11}) {
    const auto delta = direct_product_with_cyclic(group(3, {{{1, 2}}, {{1, 2, 3}}}), CyclicFactor::for_prime(p));
    const CharTable T = dixon_table(delta.group());
    CHECK(T.size() == 3 * static_cast<std::size_t>(p - 1));
    check_orthogonality(T);
  }
}

TEST_CASE("decompose and recompose") {
  const auto S4 = group(4, {{{1, 2, 3, 4}}, {{1, 2}}});
  const CharTable T = dixon_table(S4);
  const auto reg = ClassFunction::regular(S4);
  const auto parts = decompose(reg, T);
  REQUIRE(parts.size() == T.size());
  for (const auto& c : parts) CHECK(c.multiplicity == *T.irreducibles[c.irrep_index].degree());
  CHECK(recompose(parts, T) == reg);
  const std::vector<Constituent> mixed{{0, 2}, {3, 1}};
  CHECK(decompose(recompose(mixed, T), T) == mixed);
  CHECK(multiplicity(T.irreducibles[2] * T.irreducibles[2], T.irreducibles[T.trivial_index()]) == 1);
}

TEST_CASE("restriction and Frobenius reciprocity") {
  const auto A5 = group(5, {{{1, 2, 3, 4, 5}}, {{1, 2, 3}}});
  const CharTable T = dixon_table(A5);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 12; ++t) {
    std::vector<Permutation> gens{A5.elements()[rng() % 60], A5.elements()[rng() % 60]};
    const PermGroup H = subgroup(A5, gens);
    const CharTable TH = dixon_table(H);
    for (const auto& chi : T.irreducibles) {
      const ClassFunction res = restrict(chi, H);
      CHECK(res.degree() == chi.degree());
      for (const auto& psi : TH.irreducibles) {
        CHECK(inner_product(res, psi) == inner_product(chi, induce(psi, A5)));
      }
    }
  }
  const auto S4 = group(4, {{{1, 2, 3, 4}}, {{1, 2}}});
  CHECK(testing::error_code([&] { restrict(T.irreducibles[0], S4); }) == Errc::NotASubgroup);
}

TEST_CASE("inner products across groups are rejected") {
  const auto S3 = group(3, {{{1, 2}}, {{1, 2, 3}}});
  const auto S4 = group(4, {{{1, 2, 3, 4}}, {{1, 2}}});
  CHECK(testing::error_code([&] { inner_product(ClassFunction::trivial(S3), ClassFunction::trivial(S4)); }) ==
        Errc::GroupMismatch);
}

TEST_CASE("dixon prime") {
  CHECK(dixon_prime(6, 6) == 7);
  const i64 l = dixon_prime(60, 30);
  CHECK(l % 30 == 1);
  CHECK(l * l > 4 * 60);
  CHECK(is_prime(l));
}
