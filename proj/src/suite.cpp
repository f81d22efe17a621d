#include "iwartin/suite.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "iwartin/artin.hpp"
#include "iwartin/character_table.hpp"
#include "iwartin/cyclotomic.hpp"
#include "iwartin/error.hpp"
#include "iwartin/io.hpp"
#include "iwartin/poly_mod_p.hpp"

namespace iwartin {

namespace {

using Rng = std::mt19937_64;
constexpr std::size_t kKeptFailures = 3;

i64 pick(Rng& rng, i64 lo, i64 hi) { return lo + static_cast<i64>(rng() % static_cast<u64>(hi - lo + 1)); }

template <class T>
const T& pick_from(Rng& rng, const std::vector<T>& v) {
  return v[rng() % v.size()];
}

/// Runs one property instance at a time, classifying the outcome.
class Property {
 public:
  Property(std::string module, std::string name) {
    r_.module = std::move(module);
    r_.name = std::move(name);
  }

  template <class F>
  void run(const std::string& instance, F&& check) {
    ++r_.executed;
    try {
      if (check()) {
        ++r_.passed;
      } else {
        fail(instance + ": property does not hold");
      }
    } catch (const Error& e) {
      if (e.code() == Errc::PrecisionExhausted || e.code() == Errc::DegreeCapExceeded) {
        ++r_.skipped;
      } else {
        fail(instance + ": " + e.what());
      }
    }
  }

  PropertyResult result() const { return r_; }

 private:
  void fail(const std::string& message) {
    if (r_.failures.size() < kKeptFailures) r_.failures.push_back(message);
  }
  PropertyResult r_;
};

Permutation random_element(Rng& rng, const PermGroup& G) { return G.elements()[rng() % G.order()]; }

}  // namespace

PermGroup cyclic_unit_group(i64 p) {
  const i64 g = smallest_primitive_root(p);
  std::vector<i64> images;
  for (i64 b = 1; b < p; ++b) images.push_back(mulmod(g, b, p));
  return PermGroup::from_generators(static_cast<std::size_t>(p - 1), {Permutation::from_one_line(images)});
}

std::vector<std::pair<std::string, PermGroup>> named_groups() {
  const auto make = [](std::size_t degree, const std::vector<std::vector<std::vector<int>>>& gens) {
    std::vector<Permutation> perms;
    for (const auto& cycles : gens) perms.push_back(Permutation::from_cycles(degree, cycles));
    return PermGroup::from_generators(degree, perms);
  };
  const PermGroup S3 = make(3, {{{1, 2}}, {{1, 2, 3}}});
  const PermGroup S4 = make(4, {{{1, 2, 3, 4}}, {{1, 2}}});
  const PermGroup D5 = make(5, {{{1, 2, 3, 4, 5}}, {{2, 5}, {3, 4}}});
  const PermGroup F20 = make(5, {{{1, 2, 3, 4, 5}}, {{2, 3, 5, 4}}});
  const PermGroup A5 = make(5, {{{1, 2, 3, 4, 5}}, {{1, 2, 3}}});
  const auto times = [](const PermGroup& G, i64 p) {
    return direct_product_with_cyclic(G, CyclicFactor::for_prime(p)).group();
  };
  return {
      {"S3", S3},
      {"S4", S4},
      {"D5", D5},
      {"F20", F20},
      {"A5", A5},
      {"C6", cyclic_unit_group(7)},
      {"C10", cyclic_unit_group(11)},
      {"C16", cyclic_unit_group(17)},
      {"C28", cyclic_unit_group(29)},
      {"S3xC6", times(S3, 7)},
      {"S4xC6", times(S4, 7)},
      {"D5xC16", times(D5, 17)},
      {"F20xC10", times(F20, 11)},
      {"A5xC10", times(A5, 11)},
      {"A5xC28", times(A5, 29)},
  };
}

std::vector<PropertyResult> groups_battery(std::uint64_t seed) {
  Rng rng(seed);
  Property class_equation("groups", "class equation");
  Property closure("groups", "conjugation closure");
  Property projections("groups", "direct product projections");
  Property regenerate("groups", "subgroup of all generators");
  const auto groups = named_groups();
  for (const auto& [name, G] : groups) {
    class_equation.run(name, [&] {
      std::size_t total = 0;
      for (const auto& c : G.classes()) total += c.size;
      return total == G.order();
    });
    for (int t = 0; t < 20; ++t) {
      closure.run(name, [&] {
        const Permutation g = random_element(rng, G);
        const std::size_t k = rng() % G.num_classes();
        const Permutation& r = G.classes()[k].representative;
        return G.class_of(g * r * g.inverse()) == k;
      });
    }
    regenerate.run(name, [&] { return subgroup(G, G.generators()).same_group(G); });
  }
  for (std::size_t i = 0; i < 5; ++i) {
    const PermGroup& G = groups[i].second;
    for (i64 p : {7, 11, 13}) {
      projections.run(groups[i].first + " x C" + std::to_string(p - 1), [&] {
        const DirectProduct delta = direct_product_with_cyclic(G, CyclicFactor::for_prime(p));
        const PermGroup& D = delta.group();
        std::set<std::size_t> base_classes;
        std::set<i64> residues;
        for (const auto& c : D.classes()) {
          base_classes.insert(G.class_of(delta.project_base(c.representative)));
          residues.insert(delta.residue(c.representative));
        }
        return base_classes.size() == G.num_classes() && residues.size() == static_cast<std::size_t>(p - 1) &&
               D.num_classes() == G.num_classes() * static_cast<std::size_t>(p - 1);
      });
    }
  }
  return {class_equation.result(), closure.result(), projections.result(), regenerate.result()};
}

std::vector<PropertyResult> cyclotomic_battery(std::uint64_t seed) {
  Rng rng(seed);
  Property assoc("cyclotomic", "associativity");
  Property distrib("cyclotomic", "distributivity");
  Property conj("cyclotomic", "conj is an involutive automorphism");
  Property embed("cyclotomic", "embed is injective and multiplicative");
  const auto random_element = [&](i64 m) {
    std::vector<i64> coords(static_cast<std::size_t>(euler_phi(m)));
    for (auto& c : coords) c = pick(rng, -9, 9);
    return CycloElement::from_coords(m, coords);
  };
  for (int t = 0; t < 60; ++t) {
    const i64 m = pick(rng, 1, 120);
    const std::string tag = "conductor " + std::to_string(m);
    const CycloElement a = random_element(m), b = random_element(m), c = random_element(m);
    assoc.run(tag, [&] { return (a * b) * c == a * (b * c) && (a + b) + c == a + (b + c); });
    distrib.run(tag, [&] { return a * (b + c) == a * b + a * c; });
    conj.run(tag, [&] {
      return (a * b).conj() == a.conj() * b.conj() && (a + b).conj() == a.conj() + b.conj() && a.conj().conj() == a;
    });
    const i64 k = pick(rng, 2, std::max<i64>(2, 240 / m));
    embed.run(tag + " into " + std::to_string(m * k), [&] {
      const i64 n = m * k;
      const bool multiplicative = (a * b).embed(n) == a.embed(n) * b.embed(n);
      const bool injective = (a == b) == (a.embed(n) == b.embed(n)) && (a - b).embed(n).is_zero() == (a - b).is_zero();
      return multiplicative && injective;
    });
  }
  return {assoc.result(), distrib.result(), conj.result(), embed.result()};
}

namespace {

/// Ind_H^G psi(g) = (1/|H|) sum over x in G of psi(x g x^-1), psi extended by 0.
ClassFunction induce(const ClassFunction& psi, const PermGroup& G) {
  const PermGroup& H = psi.group();
  std::vector<CycloElement> values;
  for (const auto& cls : G.classes()) {
    CycloElement sum = CycloElement::integer(0, psi.conductor());
    for (const auto& x : G.elements()) {
      const auto idx = H.find(x * cls.representative * x.inverse());
      if (idx) sum = sum + psi.value(H.class_of_element(*idx));
    }
    std::vector<i64> coords = sum.coords();
    for (auto& c : coords) {
      if (c % static_cast<i64>(H.order()) != 0) raise(Errc::Internal, "induced value is not integral");
      c /= static_cast<i64>(H.order());
    }
    values.push_back(CycloElement::from_coords(sum.conductor(), coords));
  }
  return ClassFunction::from_values(G, values);
}

}  // namespace

std::vector<PropertyResult> chartab_battery(std::uint64_t seed) {
  Rng rng(seed);
  Property squares("chartab", "sum of squared degrees");
  Property rows("chartab", "row orthogonality");
  Property columns("chartab", "column orthogonality");
  Property roundtrip("chartab", "decompose after recompose");
  Property restriction("chartab", "restriction preserves degree");
  Property reciprocity("chartab", "Frobenius reciprocity");
  for (const auto& [name, G] : named_groups()) {
    const CharTable T = dixon_table(G);
    squares.run(name, [&] {
      i64 sum = 0;
      for (const auto& chi : T.irreducibles) sum += *chi.degree() * *chi.degree();
      return sum == static_cast<i64>(G.order()) && T.size() == G.num_classes();
    });
    rows.run(name, [&] {
      for (std::size_t i = 0; i < T.size(); ++i) {
        for (std::size_t j = 0; j < T.size(); ++j) {
          if (inner_product(T.irreducibles[i], T.irreducibles[j]) != Rational(i == j ? 1 : 0)) return false;
        }
      }
      return true;
    });
    columns.run(name, [&] {
      const i64 m = T.irreducibles.front().conductor();
      for (std::size_t a = 0; a < T.size(); ++a) {
        for (std::size_t b = 0; b < T.size(); ++b) {
          CycloAccumulator acc(m);
          for (const auto& chi : T.irreducibles) acc.add_product(chi.lifts()[a], chi.lifts()[b].conj(), 1);
          const i64 expected = a == b ? static_cast<i64>(G.centralizer_order(a)) : 0;
          if (!(acc.reduce() == CycloElement::integer(expected, m))) return false;
        }
      }
      return true;
    });
    const int trials = G.order() > 200 ? 2 : 6;
    for (int t = 0; t < trials; ++t) {
      roundtrip.run(name, [&] {
        std::vector<Constituent> parts;
        for (std::size_t i = 0; i < T.size(); ++i) {
          if (rng() % 3 == 0) parts.push_back({i, pick(rng, 1, 3)});
        }
        if (parts.empty()) parts.push_back({rng() % T.size(), 1});
        return decompose(recompose(parts, T), T) == parts;
      });
      std::vector<Permutation> gens{random_element(rng, G)};
      if (rng() % 2) gens.push_back(random_element(rng, G));
      const PermGroup H = subgroup(G, gens);
      const ClassFunction& chi = T.irreducibles[rng() % T.size()];
      restriction.run(name, [&] { return restrict(chi, H).degree() == chi.degree(); });
      if (G.order() <= 200) {
        reciprocity.run(name, [&] {
          const CharTable TH = dixon_table(H);
          const ClassFunction& psi = TH.irreducibles[rng() % TH.size()];
          return inner_product(restrict(chi, H), psi) == inner_product(chi, induce(psi, G));
        });
      }
    }
  }
  return {squares.result(),     rows.result(),        columns.result(),
          roundtrip.result(),   restriction.result(), reciprocity.result()};
}

namespace {

/// Monic irreducible polynomials of each degree <= max_degree over F_p, by
/// sieving out all products of lower-degree monic polynomials.
std::vector<std::vector<PolyModP>> sieve_irreducibles(i64 p, std::size_t max_degree) {
  std::vector<std::vector<PolyModP>> monics(max_degree + 1);
  for (std::size_t d = 1; d <= max_degree; ++d) {
    std::vector<i64> c(d + 1, 0);
    c[d] = 1;
    while (true) {
      monics[d].emplace_back(p, c);
      std::size_t i = 0;
      while (i < d && ++c[i] == p) c[i++] = 0;
      if (i == d) break;
    }
  }
  std::vector<std::vector<PolyModP>> irreducible(max_degree + 1);
  for (std::size_t d = 1; d <= max_degree; ++d) {
    std::set<std::vector<i64>> reducible;
    for (std::size_t a = 1; a <= d / 2; ++a) {
      for (const auto& f : monics[a]) {
        for (const auto& g : monics[d - a]) reducible.insert((f * g).coeffs());
      }
    }
    for (const auto& f : monics[d]) {
      if (!reducible.count(f.coeffs())) irreducible[d].push_back(f);
    }
  }
  return irreducible;
}

}  // namespace

std::vector<PropertyResult> modpfactor_battery(std::uint64_t seed) {
  Rng rng(seed);
  Property total("modpfactor", "profile sums to the degree");
  Property products("modpfactor", "profile of a product of irreducibles");
  Property roots("modpfactor", "profile against root enumeration");
  const std::vector<i64> primes{3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

  for (int t = 0; t < 80; ++t) {
    const i64 p = pick_from(rng, primes);
    const std::size_t deg = static_cast<std::size_t>(pick(rng, 1, 12));
    std::vector<i64> c(deg + 1);
    for (auto& x : c) x = pick(rng, 0, p - 1);
    c[deg] = 1;
    const PolyModP f(p, c);
    if (!is_squarefree(f)) continue;
    total.run(f.to_string() + " mod " + std::to_string(p), [&] {
      const auto profile = degree_profile(f);
      std::size_t s = 0;
      for (auto d : profile) s += d;
      return s == deg;
    });
  }

  for (i64 p : {3, 5, 7}) {
    const auto irr = sieve_irreducibles(p, 4);
    for (int t = 0; t < 30; ++t) {
      std::vector<std::size_t> expected;
      std::set<std::vector<i64>> used;
      PolyModP f(p, {1});
      const int factors = static_cast<int>(pick(rng, 1, 4));
      for (int i = 0; i < factors; ++i) {
        const std::size_t d = static_cast<std::size_t>(pick(rng, 1, 4));
        const PolyModP& g = pick_from(rng, irr[d]);
        if (!used.insert(g.coeffs()).second) continue;
        f = f * g;
        expected.push_back(d);
      }
      std::sort(expected.begin(), expected.end());
      products.run(f.to_string() + " mod " + std::to_string(p), [&] { return degree_profile(f) == expected; });
    }
  }

  for (int t = 0; t < 100; ++t) {
    const i64 p = pick_from(rng, primes);
    const std::size_t deg = static_cast<std::size_t>(pick(rng, 1, 3));
    std::vector<i64> c(deg + 1);
    for (auto& x : c) x = pick(rng, 0, p - 1);
    c[deg] = pick(rng, 1, p - 1);
    const PolyModP f(p, c);
    if (!is_squarefree(f)) continue;
    roots.run(f.to_string() + " mod " + std::to_string(p), [&] {
      std::size_t r = 0;
      for (i64 x = 0; x < p; ++x) {
        i64 v = 0;
        for (std::size_t i = c.size(); i-- > 0;) v = (v * x + c[i]) % p;
        if (v == 0) ++r;
      }
      std::vector<std::size_t> expected(r, 1);
      if (deg - r == 2 && deg == 2) expected = {2};
      if (deg == 3 && r == 1) expected = {1, 2};
      if (deg == 3 && r == 0) expected = {3};
      return degree_profile(f) == expected;
    });
  }
  return {total.result(), products.result(), roots.result()};
}

std::vector<PropertyResult> artin_battery(const std::filesystem::path& instances_dir) {
  Property passes("artin", "bundled instance passes");
  Property dims("artin", "dimension identities");
  Property symmetry("artin", "HYP2b symmetry");
  Property class_invariance("artin", "d+ is class-invariant");
  Property root_invariance("artin", "primitive-root independence");
  Property conj_invariance("artin", "conjugated complex conjugation");
  Property roundtrip("artin", "report JSON round trip");

  std::vector<std::filesystem::path> files;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(instances_dir, ec)) {
    const auto stem = entry.path().stem().string();
    if (entry.path().extension() == ".json" && stem.rfind("example", 0) == 0) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    passes.run(instances_dir.string(), [] { return false; });
    return {passes.result()};
  }

  for (const auto& path : files) {
    const std::string tag = path.filename().string();
    ArtinInstance inst;
    AuditReport base;
    try {
      inst = instance_from_json(read_json_file(path));
      base = full_audit(inst);
    } catch (const Error& e) {
      passes.run(tag, [&]() -> bool { throw e; });
      continue;
    }
    const auto same = [&](const AuditReport& r) {
      return r.verdicts == base.verdicts && r.overall == base.overall && r.d_plus == base.d_plus &&
             r.d_minus == base.d_minus && r.d_plus_sigma == base.d_plus_sigma && r.d_minus_sigma == base.d_minus_sigma;
    };
    passes.run(tag, [&] { return base.overall; });
    dims.run(tag, [&] {
      return base.d_plus + base.d_minus == base.d && base.d_plus_sigma == base.d_minus &&
             base.d_minus_sigma == base.d_plus;
    });
    symmetry.run(tag, [&] { return base.verdicts.hyp2b == base.hyp2b_dual; });
    roundtrip.run(tag, [&] { return report_from_json(Json::parse(to_json(base).dump())) == base; });

    const PermGroup G = PermGroup::from_generators(inst.degree, inst.generators);
    const CharTable T = dixon_table(G);
    const auto& members = G.class_members(G.class_of(inst.complex_conjugation));
    class_invariance.run(tag, [&] {
      for (std::size_t idx : members) {
        if (d_plus(T.irreducibles[inst.rho_index], G.elements()[idx]) != base.d_plus) return false;
      }
      return true;
    });
    int alternatives = 0;
    for (i64 g = 2; g < inst.prime && alternatives < 3; ++g) {
      if (!is_primitive_root(g, inst.prime) || g == base.primitive_root) continue;
      ++alternatives;
      root_invariance.run(tag + " root " + std::to_string(g), [&] { return same(full_audit(inst, {g})); });
    }
    int conjugates = 0;
    for (std::size_t idx : members) {
      if (G.elements()[idx] == inst.complex_conjugation || conjugates >= 2) continue;
      ++conjugates;
      ArtinInstance moved = inst;
      moved.complex_conjugation = G.elements()[idx];
      conj_invariance.run(tag + " c = " + moved.complex_conjugation.to_cycle_string(),
                          [&] { return same(full_audit(moved)); });
    }
  }
  return {passes.result(),           dims.result(),            symmetry.result(), class_invariance.result(),
          root_invariance.result(), conj_invariance.result(), roundtrip.result()};
}

namespace {

struct IwasawaGen {
  Rng rng;
  Precision prec;

  CoefficientRing ring() {
    static const std::vector<i64> primes{3, 5, 7};
    const i64 p = pick_from(rng, primes);
    const int f = rng() % 5 == 0 ? 2 : 1;
    return CoefficientRing(p, f, prec.N);
  }

  OElem any(const CoefficientRing& R) {
    std::vector<i64> c(static_cast<std::size_t>(R.residue_degree()));
    for (auto& x : c) x = static_cast<i64>(rng() % static_cast<u64>(R.modulus(R.digits())));
    return R.from_coords(c);
  }

  OElem unit(const CoefficientRing& R) {
    OElem a = any(R);
    if (R.valuation(a, 1) >= 1) a = R.add(a, R.from_int(1));
    return a;
  }

  /// p^mu (distinguished of degree lambda) (unit), as raw coefficients.
  IwasawaElement series(const CoefficientRing& R, int max_mu, int max_lambda) {
    const int mu = static_cast<int>(pick(rng, 0, max_mu));
    const std::size_t lambda = static_cast<std::size_t>(pick(rng, 0, max_lambda));
    std::vector<OElem> c(static_cast<std::size_t>(prec.M) + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i < lambda) {
        c[i] = R.mul_int(any(R), R.p());
      } else if (i == lambda) {
        c[i] = unit(R);
      } else {
        c[i] = any(R);
      }
      c[i] = R.mul_int(c[i], R.modulus(mu));
    }
    return IwasawaElement(R, prec, c);
  }

  TwistCharacter twist_char(const CoefficientRing& R) {
    const i64 m = R.modulus(R.digits() - 1);
    return {mod(1 + R.p() * static_cast<i64>(rng() % static_cast<u64>(m)), R.modulus(R.digits()))};
  }

  DistinguishedPolynomial distinguished(const CoefficientRing& R, std::size_t degree) {
    std::vector<OElem> c(degree + 1);
    for (std::size_t i = 0; i < degree; ++i) c[i] = R.mul_int(any(R), R.p());
    c[degree] = R.from_int(1);
    return make_distinguished(R, c, prec.N);
  }

  ElementaryModule module(const CoefficientRing& R, int max_mu, std::size_t max_lambda) {
    ElementaryModule E{R, prec, {}, {}};
    int mu = 0;
    const int pf = static_cast<int>(pick(rng, 0, 2));
    for (int i = 0; i < pf && mu < max_mu; ++i) {
      const int m = static_cast<int>(pick(rng, 1, max_mu - mu));
      E.p_power_factors.push_back(m);
      mu += m;
    }
    const int nf = static_cast<int>(pick(rng, 1, 2));
    for (int i = 0; i < nf; ++i) {
      const std::size_t room = max_lambda - E.lambda();
      if (room == 0) break;
      const std::size_t d = static_cast<std::size_t>(pick(rng, 1, static_cast<i64>(std::min<std::size_t>(3, room))));
      const int e = d * 2 <= room && rng() % 3 == 0 ? 2 : 1;
      E.poly_factors.push_back({distinguished(R, d), e});
    }
    return E;
  }
};

std::string describe(const CoefficientRing& R, std::size_t i) {
  return "p=" + std::to_string(R.p()) + " f=" + std::to_string(R.residue_degree()) + " #" + std::to_string(i);
}

}  // namespace

std::vector<PropertyResult> iwasawa_battery(std::uint64_t seed, Precision prec, std::size_t count) {
  IwasawaGen gen{Rng(seed), prec};
  Property weierstrass("iwasawa", "Weierstrass reconstruction");
  Property twist_inv("iwasawa", "mu/lambda invariant under twist");
  Property inv_inv("iwasawa", "mu/lambda invariant under involution");
  Property involutive("iwasawa", "involution is involutive");
  Property composition("iwasawa", "twist composition");
  Property additivity("iwasawa", "char ideal additivity");
  Property lemma("iwasawa", "twist lemma");
  Property ext1("iwasawa", "ext1 preserves normal form");
  Property forward("iwasawa", "funceq forward pairs pass");
  Property perturbed("iwasawa", "funceq perturbations fail");
  Property omega_div("iwasawa", "omega_n divides omega_(n+1)");

  for (std::size_t i = 0; i < count; ++i) {
    const CoefficientRing R = gen.ring();
    const std::string tag = describe(R, i);
    const IwasawaElement F = gen.series(R, 2, 6);
    const TwistCharacter u = gen.twist_char(R);
    const TwistCharacter v = gen.twist_char(R);

    weierstrass.run(tag, [&] { return reconstructs(wprep(F), F); });
    twist_inv.run(tag, [&] {
      const auto a = wprep(F), b = wprep(twist(F, u));
      return a.mu == b.mu && a.lambda == b.lambda;
    });
    inv_inv.run(tag, [&] {
      const auto a = wprep(F), b = wprep(involute(F));
      return a.mu == b.mu && a.lambda == b.lambda;
    });
    involutive.run(tag, [&] { return involute(involute(F)) == F; });
    composition.run(tag, [&] {
      const TwistCharacter uv{mulmod(u.u, v.u, R.modulus(R.digits()))};
      return twist(twist(F, u), v) == twist(F, uv);
    });

    const ElementaryModule E1 = gen.module(R, 1, 4);
    const ElementaryModule E2 = gen.module(R, 1, 4);
    additivity.run(tag, [&] {
      ElementaryModule sum = E1;
      sum.p_power_factors.insert(sum.p_power_factors.end(), E2.p_power_factors.begin(), E2.p_power_factors.end());
      sum.poly_factors.insert(sum.poly_factors.end(), E2.poly_factors.begin(), E2.poly_factors.end());
      const auto w = wprep(char_ideal(sum)), w1 = wprep(char_ideal(E1)), w2 = wprep(char_ideal(E2));
      return w.mu == w1.mu + w2.mu && w.lambda == w1.lambda + w2.lambda && w1.mu == E1.mu() &&
             w1.lambda == E1.lambda();
    });
    lemma.run(tag, [&] { return twist_lemma_check(E1, u); });
    ext1.run(tag, [&] { return normal_form_equal(char_ideal(ext1_elementary(E1)), char_ideal(E1)); });

    const TwistCharacter kappa = TwistCharacter::kappa(R.p());
    forward.run(tag, [&] { return funceq_check(involute(twist(F, kappa)), F, kappa); });

    // F_U = p^mu P U against p^mu (P + p) U: distinct distinguished parts.
    const int mu = static_cast<int>(pick(gen.rng, 0, 2));
    const DistinguishedPolynomial P = gen.distinguished(R, static_cast<std::size_t>(pick(gen.rng, 1, 5)));
    const IwasawaElement U = gen.series(R, 0, 0);
    perturbed.run(tag, [&] {
      const IwasawaElement pm = IwasawaElement::constant(R, prec, R.modulus(mu));
      const IwasawaElement FU = pm * as_series(R, prec, P) * U;
      DistinguishedPolynomial Q = P;
      Q.coeffs[0] = R.add(Q.coeffs[0], R.from_int(R.p()));
      const IwasawaElement FU2 = pm * as_series(R, prec, Q) * U;
      const IwasawaElement FV = involute(twist(FU, kappa));
      return funceq_check(FV, FU, kappa) && !funceq_check(FV, FU2, kappa);
    });
  }

  for (i64 p : {3, 5, 7}) {
    const CoefficientRing R(p, 1, prec.N);
    for (int n = 0; ipow_checked(p, n + 1) <= prec.M; ++n) {
      omega_div.run("p=" + std::to_string(p) + " n=" + std::to_string(n), [&] {
        const IwasawaElement next = omega(R, prec, n + 1);
        return omega(R, prec, n) * as_series(R, prec, nu_polynomial(R, n + 1)) == next;
      });
    }
  }

  return {weierstrass.result(), twist_inv.result(), inv_inv.result(),   involutive.result(),
          composition.result(), additivity.result(), lemma.result(),    ext1.result(),
          forward.result(),     perturbed.result(),  omega_div.result()};
}

std::size_t SuiteSummary::executed() const {
  std::size_t n = 0;
  for (const auto& r : results) n += r.executed;
  return n;
}

std::size_t SuiteSummary::skipped() const {
  std::size_t n = 0;
  for (const auto& r : results) n += r.skipped;
  return n;
}

std::size_t SuiteSummary::failed() const {
  std::size_t n = 0;
  for (const auto& r : results) n += r.failed();
  return n;
}

std::string SuiteSummary::to_text() const {
  std::ostringstream out;
  for (const auto& r : results) {
    out << (r.ok() ? "ok   " : "FAIL ") << std::left << std::setw(11) << r.module << std::setw(40) << r.name
        << std::right << " executed " << std::setw(4) << r.executed << "  passed " << std::setw(4) << r.passed
        << "  skipped " << std::setw(4) << r.skipped << "\n";
    for (const auto& f : r.failures) out << "       " << f << "\n";
  }
  out << "total executed " << executed() << ", skipped " << skipped() << ", failed " << failed() << "\n";
  return out.str();
}

SuiteSummary run_suite(const SuiteOptions& options) {
  SuiteSummary summary;
  const auto append = [&](std::vector<PropertyResult> part) {
    for (auto& r : part) summary.results.push_back(std::move(r));
  };
  // Each battery gets its own stream so adding instances to one leaves the
  // others unchanged.
  append(groups_battery(options.seed));
  append(cyclotomic_battery(options.seed + 1));
  append(chartab_battery(options.seed + 2));
  append(modpfactor_battery(options.seed + 3));
  append(artin_battery(options.instances_dir));
  append(iwasawa_battery(options.seed + 4, options.precision, options.iwasawa_count));
  return summary;
}

}  // namespace iwartin
