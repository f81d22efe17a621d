#include "iwartin/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "iwartin/error.hpp"

namespace iwartin {

// ---------------------------------------------------------------- ClassFunction

ClassFunction::ClassFunction(PermGroup group, std::vector<RootSum> lifts)
    : group_(std::move(group)), conductor_(static_cast<i64>(group_.exponent())), lifts_(std::move(lifts)) {
  if (lifts_.size() != group_.num_classes()) {
    raise(Errc::GroupMismatch, "class function has " + std::to_string(lifts_.size()) + " values but the group has " +
                                   std::to_string(group_.num_classes()) + " classes");
  }
  for (const auto& l : lifts_) conductor_ = lcm_checked(conductor_, l.conductor());
  if (conductor_ > kConductorCap) raise(Errc::ConductorOverflow, "class function conductor exceeds cap");
  values_.reserve(lifts_.size());
  for (auto& l : lifts_) {
    if (l.conductor() != conductor_) l = l.embed(conductor_);
    values_.push_back(l.reduce());
  }
}

ClassFunction ClassFunction::from_values(PermGroup group, const std::vector<CycloElement>& values) {
  std::vector<RootSum> lifts;
  lifts.reserve(values.size());
  for (const auto& v : values) lifts.push_back(RootSum::from_cyclo(v));
  return ClassFunction(std::move(group), std::move(lifts));
}

ClassFunction ClassFunction::trivial(const PermGroup& group) {
  return ClassFunction(group, std::vector<RootSum>(group.num_classes(), RootSum::root(1, 0)));
}

ClassFunction ClassFunction::regular(const PermGroup& group) {
  std::vector<RootSum> lifts(group.num_classes(), RootSum(1, {}));
  lifts[0] = RootSum::root(1, 0, static_cast<i64>(group.order()));
  return ClassFunction(group, std::move(lifts));
}

const CycloElement& ClassFunction::at(const Permutation& g) const { return values_.at(group_.class_of(g)); }

ClassFunction ClassFunction::conj() const {
  std::vector<RootSum> l;
  l.reserve(lifts_.size());
  for (const auto& x : lifts_) l.push_back(x.conj());
  return ClassFunction(group_, std::move(l));
}

ClassFunction ClassFunction::embed(i64 conductor) const {
  std::vector<RootSum> l;
  for (const auto& x : lifts_) l.push_back(x.embed(conductor));
  return ClassFunction(group_, std::move(l));
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  if (!a.group_.same_group(b.group_)) raise(Errc::GroupMismatch, "product of class functions on different groups");
  std::vector<RootSum> l;
  for (std::size_t k = 0; k < a.lifts_.size(); ++k) l.push_back(a.lifts_[k] * b.lifts_[k]);
  return ClassFunction(a.group_, std::move(l));
}

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
  if (!a.group_.same_group(b.group_)) raise(Errc::GroupMismatch, "sum of class functions on different groups");
  std::vector<RootSum> l;
  for (std::size_t k = 0; k < a.lifts_.size(); ++k) l.push_back(a.lifts_[k] + b.lifts_[k]);
  return ClassFunction(a.group_, std::move(l));
}

ClassFunction ClassFunction::scaled(i64 factor) const {
  std::vector<RootSum> l;
  for (const auto& x : lifts_) l.push_back(x * RootSum::root(1, 0, factor));
  return ClassFunction(group_, std::move(l));
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  if (!a.group_.same_group(b.group_) || a.values_.size() != b.values_.size()) return false;
  for (std::size_t k = 0; k < a.values_.size(); ++k) {
    if (!(a.values_[k] == b.values_[k])) return false;
  }
  return true;
}

std::optional<std::size_t> CharTable::find(const ClassFunction& chi) const {
  for (std::size_t i = 0; i < irreducibles.size(); ++i) {
    if (irreducibles[i] == chi) return i;
  }
  return std::nullopt;
}

std::size_t CharTable::trivial_index() const {
  auto idx = find(ClassFunction::trivial(group));
  if (!idx) raise(Errc::Internal, "character table lacks the trivial character");
  return *idx;
}

// ---------------------------------------------------------------- inner products

namespace {

// Sum over classes of |C_k| a(g_k) conj(b(g_k)), exact.
CycloElement weighted_pairing(const ClassFunction& a, const ClassFunction& b) {
  const i64 m = lcm_checked(a.conductor(), b.conductor());
  const bool same = a.conductor() == m && b.conductor() == m;
  CycloAccumulator acc(m);
  const auto& classes = a.group().classes();
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const RootSum x = same ? a.lifts()[k] : a.lifts()[k].embed(m);
    const RootSum y = same ? b.lifts()[k] : b.lifts()[k].embed(m);
    acc.add_product(x, y.conj(), static_cast<i64>(classes[k].size));
  }
  return acc.reduce();
}

}  // namespace

Rational inner_product(const ClassFunction& chi, const ClassFunction& psi) {
  if (!chi.group().same_group(psi.group())) raise(Errc::GroupMismatch, "inner product across different groups");
  const auto total = weighted_pairing(chi, psi).as_integer();
  if (!total) raise(Errc::NonIntegerMultiplicity, "inner product is not rational");
  return Rational(*total, static_cast<i64>(chi.group().order()));
}

i64 multiplicity(const ClassFunction& chi, const ClassFunction& irreducible) {
  const Rational r = inner_product(chi, irreducible);
  if (r.denominator() != 1 || r.numerator() < 0) {
    raise(Errc::NonIntegerMultiplicity, "multiplicity " + std::to_string(r.numerator()) + "/" +
                                            std::to_string(r.denominator()) + " is not a non-negative integer");
  }
  return r.numerator();
}

ClassFunction restrict(const ClassFunction& chi, const PermGroup& H) {
  if (!H.is_subgroup_of(chi.group())) raise(Errc::NotASubgroup, "restriction target is not a subgroup");
  std::vector<RootSum> lifts;
  lifts.reserve(H.num_classes());
  for (const auto& cls : H.classes()) lifts.push_back(chi.lifts()[chi.group().class_of(cls.representative)]);
  return ClassFunction(H, std::move(lifts));
}

std::vector<Constituent> decompose(const ClassFunction& chi, const CharTable& table) {
  if (!chi.group().same_group(table.group)) raise(Errc::GroupMismatch, "decomposition against another group's table");
  std::vector<Constituent> parts;
  for (std::size_t i = 0; i < table.irreducibles.size(); ++i) {
    const i64 m = multiplicity(chi, table.irreducibles[i]);
    if (m != 0) parts.push_back({i, m});
  }
  if (!(recompose(parts, table) == chi)) {
    raise(Errc::NonIntegerMultiplicity, "class function is not a character: constituents do not recompose it");
  }
  return parts;
}

ClassFunction recompose(const std::vector<Constituent>& parts, const CharTable& table) {
  std::vector<RootSum> lifts(table.group.num_classes(), RootSum(1, {}));
  ClassFunction sum(table.group, std::move(lifts));
  for (const auto& c : parts) sum = sum + table.irreducibles.at(c.irrep_index).scaled(c.multiplicity);
  return sum;
}

// ---------------------------------------------------------------- Dixon

namespace {

using Row = std::vector<i64>;

// Reduced row echelon form over F_l; returns pivot columns.
std::vector<std::size_t> rref(std::vector<Row>& rows, i64 l) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const i64 inv = invmod(rows[r][c], l);
    for (auto& x : rows[r]) x = mulmod(x, inv, l);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const i64 f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] = mod(rows[i][j] - mulmod(f, rows[r][j], l), l);
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// Null space of a square matrix over F_l (basis vectors).
std::vector<Row> null_space(std::vector<Row> a, i64 l) {
  const std::size_t n = a.front().size();
  const auto pivots = rref(a, l);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Row> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Row v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = mod(-a[i][free], l);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Characteristic polynomial over F_l via reduction to Hessenberg form.
std::vector<i64> charpoly(std::vector<Row> h, i64 l) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && h[piv][m - 1] == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      std::swap(h[piv], h[m]);
      for (auto& row : h) std::swap(row[piv], row[m]);
    }
    const i64 inv = invmod(h[m][m - 1], l);
    for (std::size_t i = m + 1; i < n; ++i) {
      if (h[i][m - 1] == 0) continue;
      const i64 f = mulmod(h[i][m - 1], inv, l);
      for (std::size_t j = 0; j < n; ++j) h[i][j] = mod(h[i][j] - mulmod(f, h[m][j], l), l);
      for (std::size_t j = 0; j < n; ++j) h[j][m] = mod(h[j][m] + mulmod(f, h[j][i], l), l);
    }
  }
  // p_k(x) for the leading k x k block.
  std::vector<std::vector<i64>> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<i64> next(k + 1, 0);
    for (std::size_t i = 0; i < p[k - 1].size(); ++i) {
      next[i + 1] = mod(next[i + 1] + p[k - 1][i], l);
      next[i] = mod(next[i] - mulmod(h[k - 1][k - 1], p[k - 1][i], l), l);
    }
    i64 t = 1;
    for (std::size_t i = k - 1; i-- > 0;) {
      t = mulmod(t, h[i + 1][i], l);
      const i64 coef = mulmod(t, h[i][k - 1], l);
      for (std::size_t j = 0; j < p[i].size(); ++j) next[j] = mod(next[j] - mulmod(coef, p[i][j], l), l);
    }
    p[k] = std::move(next);
  }
  return p[n];
}

std::vector<i64> roots_mod(const std::vector<i64>& poly, i64 l) {
  std::vector<i64> roots;
  for (i64 x = 0; x < l; ++x) {
    i64 acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = mod(mulmod(acc, x, l) + poly[i], l);
    if (acc == 0) roots.push_back(x);
  }
  return roots;
}

i64 primitive_root_mod_prime(i64 l) { return smallest_primitive_root(l); }

}  // namespace

i64 dixon_prime(std::size_t order, std::size_t exponent) {
  const double bound = 2.0 * std::sqrt(static_cast<double>(order));
  const auto e = static_cast<i64>(exponent);
  for (i64 l = e + 1; l < 10'000'000; l += e) {
    if (static_cast<double>(l) > bound && is_prime(l)) return l;
  }
  raise(Errc::NoSuitableModularPrime, "no prime = 1 mod " + std::to_string(exponent) + " below 10^7");
}

CharTable dixon_table(const PermGroup& group) {
  const std::size_t n = group.order();
  const std::size_t r = group.num_classes();
  const auto e = static_cast<i64>(group.exponent());
  const i64 l = dixon_prime(n, group.exponent());
  const auto& classes = group.classes();
  const auto& elements = group.elements();

  // c[j][k][l] = #{(x, y) in C_j x C_k : x y = z_l}.
  std::vector<std::uint32_t> c(r * r * r, 0);
  std::vector<std::size_t> inverse_index(n);
  for (std::size_t i = 0; i < n; ++i) inverse_index[i] = *group.find(elements[i].inverse());
  for (std::size_t target = 0; target < r; ++target) {
    const Permutation& z = classes[target].representative;
    for (std::size_t yi = 0; yi < n; ++yi) {
      const std::size_t x = *group.find(z * elements[inverse_index[yi]]);
      const std::size_t j = group.class_of_element(x);
      const std::size_t k = group.class_of_element(yi);
      ++c[(j * r + k) * r + target];
    }
  }

  // Common eigenvectors of the class matrices, by successive splitting.
  struct Space {
    std::vector<Row> basis;  // RREF rows
    std::vector<std::size_t> pivots;
  };
  std::vector<Space> spaces;
  {
    Space full;
    for (std::size_t i = 0; i < r; ++i) {
      Row v(r, 0);
      v[i] = 1;
      full.basis.push_back(std::move(v));
      full.pivots.push_back(i);
    }
    spaces.push_back(std::move(full));
  }
  for (std::size_t j = 1; j < r; ++j) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Space& s) { return s.basis.size() == 1; })) break;
    std::vector<Space> next;
    for (auto& space : spaces) {
      const std::size_t d = space.basis.size();
      if (d == 1) {
        next.push_back(std::move(space));
        continue;
      }
      // Matrix of M_j on the subspace, in coordinates read off at pivots.
      std::vector<Row> images(d, Row(r, 0));
      for (std::size_t b = 0; b < d; ++b) {
        for (std::size_t k = 0; k < r; ++k) {
          i64 acc = 0;
          const std::uint32_t* row = &c[(j * r + k) * r];
          for (std::size_t t = 0; t < r; ++t) {
            if (row[t] != 0 && space.basis[b][t] != 0) acc = mod(acc + mulmod(row[t], space.basis[b][t], l), l);
          }
          images[b][k] = acc;
        }
      }
      std::vector<Row> a(d, Row(d, 0));
      for (std::size_t b = 0; b < d; ++b) {
        for (std::size_t t = 0; t < d; ++t) a[t][b] = images[b][space.pivots[t]];
      }
      const auto eigenvalues = roots_mod(charpoly(a, l), l);
      if (eigenvalues.size() <= 1) {
        next.push_back(std::move(space));
        continue;
      }
      std::size_t total = 0;
      for (i64 lambda : eigenvalues) {
        auto shifted = a;
        for (std::size_t t = 0; t < d; ++t) shifted[t][t] = mod(shifted[t][t] - lambda, l);
        Space part;
        for (const auto& coords : null_space(shifted, l)) {
          Row v(r, 0);
          for (std::size_t b = 0; b < d; ++b) {
            if (coords[b] == 0) continue;
            for (std::size_t t = 0; t < r; ++t) v[t] = mod(v[t] + mulmod(coords[b], space.basis[b][t], l), l);
          }
          part.basis.push_back(std::move(v));
        }
        part.pivots = rref(part.basis, l);
        total += part.basis.size();
        next.push_back(std::move(part));
      }
      if (total != d) raise(Errc::OrthogonalityFailure, "class matrix is not diagonalizable modulo " + std::to_string(l));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) raise(Errc::OrthogonalityFailure, "class matrices do not separate the characters");

  // Lift modular characters to sums of roots of unity.
  const i64 z = powmod(primitive_root_mod_prime(l), static_cast<u64>((l - 1) / e), l);
  std::vector<std::vector<std::size_t>> powers(r);
  for (std::size_t k = 0; k < r; ++k) {
    const auto o = static_cast<i64>(classes[k].element_order);
    for (i64 t = 0; t < o; ++t) powers[k].push_back(group.power_class(k, t));
  }
  const auto isqrt_n = static_cast<i64>(std::sqrt(static_cast<double>(n)) + 1);

  std::vector<ClassFunction> irreducibles;
  for (const auto& space : spaces) {
    Row w = space.basis.front();
    if (w[0] == 0) raise(Errc::OrthogonalityFailure, "central character vanishes at the identity");
    const i64 inv0 = invmod(w[0], l);
    for (auto& x : w) x = mulmod(x, inv0, l);

    i64 norm = 0;
    for (std::size_t k = 0; k < r; ++k) {
      const std::size_t kinv = group.inverse_class(k);
      norm = mod(norm + mulmod(mulmod(w[k], w[kinv], l), invmod(static_cast<i64>(classes[k].size) % l, l), l), l);
    }
    const i64 deg_sq = mulmod(static_cast<i64>(n) % l, invmod(norm, l), l);
    i64 degree = 0;
    for (i64 cand = 1; cand <= isqrt_n; ++cand) {
      if (mulmod(cand, cand, l) == deg_sq) {
        degree = cand;
        break;
      }
    }
    if (degree == 0) raise(Errc::OrthogonalityFailure, "no integral degree for a modular character");

    std::vector<i64> theta(r);
    for (std::size_t k = 0; k < r; ++k) {
      theta[k] = mulmod(mulmod(degree, w[k], l), invmod(static_cast<i64>(classes[k].size) % l, l), l);
    }
    std::vector<RootSum> lifts;
    for (std::size_t k = 0; k < r; ++k) {
      const auto o = static_cast<i64>(classes[k].element_order);
      const i64 step = e / o;
      const i64 zo = powmod(z, static_cast<u64>(step), l);  // primitive o-th root
      const i64 inv_o = invmod(o % l, l);
      std::vector<RootSum::Term> terms;
      for (i64 s = 0; s < o; ++s) {
        i64 acc = 0;
        const i64 zs_inv = powmod(invmod(zo, l), static_cast<u64>(s), l);
        i64 zpow = 1;
        for (i64 t = 0; t < o; ++t) {
          acc = mod(acc + mulmod(theta[powers[k][static_cast<std::size_t>(t)]], zpow, l), l);
          zpow = mulmod(zpow, zs_inv, l);
        }
        const i64 mu = mulmod(acc, inv_o, l);
        if (mu > degree) raise(Errc::OrthogonalityFailure, "eigenvalue multiplicity out of range");
        if (mu != 0) terms.emplace_back(s * step, mu);
      }
      lifts.emplace_back(e, std::move(terms));
    }
    irreducibles.emplace_back(group, std::move(lifts));
  }

  std::sort(irreducibles.begin(), irreducibles.end(), [](const ClassFunction& a, const ClassFunction& b) {
    const i64 da = *a.degree(), db = *b.degree();
    if (da != db) return da < db;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a.value(k).coords() != b.value(k).coords()) return a.value(k).coords() < b.value(k).coords();
    }
    return false;
  });

  // Orthogonality guards.
  i64 degree_squares = 0;
  std::vector<std::vector<RootSum>> conj_lifts(r);
  for (const auto& chi : irreducibles) {
    degree_squares += *chi.degree() * *chi.degree();
    for (std::size_t k = 0; k < r; ++k) conj_lifts[k].push_back(chi.lifts()[k].conj());
  }
  if (degree_squares != static_cast<i64>(n)) raise(Errc::OrthogonalityFailure, "sum of squared degrees differs from |G|");
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = a; b < r; ++b) {
      CycloAccumulator acc(e);
      for (std::size_t k = 0; k < r; ++k) {
        acc.add_product(irreducibles[a].lifts()[k], conj_lifts[k][b], static_cast<i64>(classes[k].size));
      }
      const auto v = acc.reduce().as_integer();
      if (!v || *v != (a == b ? static_cast<i64>(n) : 0)) raise(Errc::OrthogonalityFailure, "row orthogonality violated");
    }
  }
  for (std::size_t k1 = 0; k1 < r; ++k1) {
    for (std::size_t k2 = k1; k2 < r; ++k2) {
      CycloAccumulator acc(e);
      for (std::size_t i = 0; i < r; ++i) acc.add_product(irreducibles[i].lifts()[k1], conj_lifts[k2][i], 1);
      const auto v = acc.reduce().as_integer();
      const i64 expected = k1 == k2 ? static_cast<i64>(group.centralizer_order(k1)) : 0;
      if (!v || *v != expected) raise(Errc::OrthogonalityFailure, "column orthogonality violated");
    }
  }
  return CharTable{group, l, std::move(irreducibles)};
}

}  // namespace iwartin
