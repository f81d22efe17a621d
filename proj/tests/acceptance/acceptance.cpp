// One PASS/FAIL line per acceptance criterion. Exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "iwartin/artin.hpp"
#include "iwartin/error.hpp"
#include "iwartin/io.hpp"
#include "iwartin/iwasawa.hpp"
#include "iwartin/suite.hpp"

#ifndef IWARTIN_INSTANCE_DIR
#define IWARTIN_INSTANCE_DIR "instances"
#endif

using namespace iwartin;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

ArtinInstance load(const std::string& name) {
  return instance_from_json(read_json_file(std::string(IWARTIN_INSTANCE_DIR) + "/" + name));
}

std::vector<std::string> labels_of(const std::vector<Constituent>& parts, const AuditReport& r) {
  std::vector<std::string> out;
  for (const auto& c : parts) {
    for (i64 m = 0; m < c.multiplicity; ++m) out.push_back(r.decomposition_labels.at(c.irrep_index));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ClassFunction rho_character(const ArtinInstance& inst) {
  const PermGroup G = PermGroup::from_generators(inst.degree, inst.generators);
  return dixon_table(G).irreducibles.at(inst.rho_index);
}

std::size_t lcm_of(const std::vector<std::size_t>& v) {
  std::size_t l = 1;
  for (std::size_t x : v) l = std::lcm(l, x);
  return l;
}

/// On D' = <g> of order n, rho(g^j) must equal sum over k in S of zeta_n^(kj).
bool restriction_is(const ArtinInstance& inst, const std::vector<i64>& exponents) {
  const ClassFunction chi = rho_character(inst);
  const Permutation& g = inst.decomposition_generators.front();
  const i64 n = static_cast<i64>(g.order());
  for (i64 j = 0; j < n; ++j) {
    CycloElement expected = CycloElement::integer(0);
    for (i64 k : exponents) expected = expected + CycloElement::zeta(n, k * j % n);
    if (!(chi.at(g.pow(j)) == expected)) return false;
  }
  return true;
}

/// Every rho constituent reappears in sigma twisted once by tau.
bool sigma_is_tau_twist(const AuditReport& r) {
  std::vector<std::string> twisted;
  for (const auto& l : labels_of(r.rho_restriction, r)) twisted.push_back(l + "*tau");
  std::sort(twisted.begin(), twisted.end());
  return labels_of(r.sigma_restriction, r) == twisted;
}

bool root_and_derivative_vanish(i64 p, const std::vector<i64>& f) {
  for (i64 x = 0; x < p; ++x) {
    i64 v = 0, dv = 0;
    for (std::size_t i = f.size(); i-- > 0;) v = mod(v * x + f[i], p);
    for (std::size_t i = f.size(); i-- > 1;) dv = mod(dv * x + static_cast<i64>(i) * f[i], p);
    if (v == 0 && dv == 0) return true;
  }
  return false;
}

Check criterion1() {
  Check c;
  const ArtinInstance inst = load("example1.json");
  const AuditReport r = full_audit(inst);
  c.require(r.order_delta == 36, "|Delta| = " + std::to_string(r.order_delta));
  c.require(r.degree_profile == std::vector<std::size_t>{3}, "degree profile");
  c.require(r.order_decomposition_base == 3, "|D'|");
  c.require(r.d_plus == 1 && r.d_minus == 1, "d+/d-");
  c.require(restriction_is(inst, {1, 2}), "rho|D is not chi1 + chi1^-1");
  c.require(labels_of(r.rho_restriction, r) == std::vector<std::string>{"psi0", "psi1"}, "rho|D labels");
  c.require(sigma_is_tau_twist(r), "sigma|D");
  c.require(r.verdicts.h0_v && r.verdicts.h0_u, "H0 checks");
  c.require(r.overall, "overall");
  return c;
}

Check criterion2() {
  Check c;
  struct Expect {
    const char* file;
    i64 d_plus;
    std::vector<std::size_t> profile;
    std::vector<i64> exponents;
    TorsionStatus torsion;
  };
  const std::vector<Expect> cases{
      {"example2.json", 1, {1, 3}, {1, 2}, TorsionStatus::AutoSatisfied},
      {"example3.json", 1, {5}, {1, 4}, TorsionStatus::AutoSatisfied},
      {"example4.json", 2, {5}, {1, 2, 3, 4}, TorsionStatus::Assumed},
      {"example5.json", 2, {5}, {1, 2, 3, 4}, TorsionStatus::Assumed},
  };
  for (const auto& e : cases) {
    const std::string name = e.file;
    const ArtinInstance inst = load(e.file);
    const AuditReport r = full_audit(inst);
    c.require(r.d_plus == e.d_plus, name + ": d+");
    c.require(r.d_plus_sigma == r.d_minus, name + ": d+(sigma)");
    c.require(r.degree_profile == e.profile, name + ": degree profile");
    c.require(r.order_decomposition_base == lcm_of(e.profile), name + ": |D'| vs profile");
    c.require(inst.decomposition_generators.size() == 1 &&
                  inst.decomposition_generators.front().order() == r.order_decomposition_base,
              name + ": D' not cyclic on its generator");
    c.require(restriction_is(inst, e.exponents), name + ": rho|D");
    c.require(sigma_is_tau_twist(r), name + ": sigma|D");
    c.require(r.tor_rho == e.torsion && r.tor_sigma == e.torsion, name + ": torsion flags");
    c.require(r.overall, name + ": overall");
  }
  c.require(full_audit(load("example1.json")).tor_rho == TorsionStatus::AutoSatisfied, "example1: torsion");
  return c;
}

Check criterion3() {
  Check c;
  const ArtinInstance inst = load("example6.json");
  const AuditReport r = full_audit(inst);
  c.require(r.d_plus == 1 && r.d_minus == 2, "d+/d-");
  c.require(r.d_plus_sigma == 2 && r.d_minus_sigma == 1, "d+/d- of sigma");
  c.require(r.order_decomposition_base == 6, "|D'|");
  // sign + standard of S3, read off the action of D' on {1, 2, 3}.
  const ClassFunction chi = rho_character(inst);
  const PermGroup D = PermGroup::from_generators(inst.degree, inst.decomposition_generators);
  bool matches = D.order() == 6;
  for (const auto& x : D.elements()) {
    const i64 fixed = (x[0] == 0) + (x[1] == 1) + (x[2] == 2);
    const i64 sign = fixed == 1 ? -1 : 1;
    matches = matches && chi.at(x) == CycloElement::integer(sign + fixed - 1);
  }
  c.require(matches, "rho|D' is not sign + standard");
  c.require(labels_of(r.rho_restriction, r).size() == 2, "rho|D constituents");
  const bool repeated = root_and_derivative_vanish(inst.prime, inst.polynomial);
  c.require(r.squarefree == !repeated, "squarefree diagnostic");
  c.require(r.frobenius == (r.squarefree ? FrobeniusVerdict::Consistent : FrobeniusVerdict::RamifiedInputAccepted),
            "Frobenius verdict");
  c.require(r.overall, "overall");
  c.detail = std::string("f mod 29 ") + (r.squarefree ? "squarefree" : "not squarefree");
  return c;
}

Check criterion4() {
  Check c;
  for (const auto& [name, G] : named_groups()) {
    const CharTable T = dixon_table(G);
    const i64 order = static_cast<i64>(G.order());
    const i64 m = T.irreducibles.front().conductor();
    i64 squares = 0;
    for (const auto& chi : T.irreducibles) squares += *chi.degree() * *chi.degree();
    c.require(squares == order && T.size() == G.num_classes(), name + ": sum of squares");
    for (std::size_t i = 0; i < T.size(); ++i) {
      for (std::size_t j = 0; j < T.size(); ++j) {
        CycloAccumulator rows(m);
        for (std::size_t k = 0; k < T.size(); ++k) {
          rows.add_product(T.irreducibles[i].lifts()[k], T.irreducibles[j].lifts()[k].conj(),
                           static_cast<i64>(G.classes()[k].size));
        }
        c.require(rows.reduce() == CycloElement::integer(i == j ? order : 0, m), name + ": row orthogonality");
        CycloAccumulator cols(m);
        for (const auto& chi : T.irreducibles) cols.add_product(chi.lifts()[i], chi.lifts()[j].conj(), 1);
        const i64 centralizer = i == j ? order / static_cast<i64>(G.classes()[i].size) : 0;
        c.require(cols.reduce() == CycloElement::integer(centralizer, m), name + ": column orthogonality");
      }
    }
  }
  return c;
}

Check criterion5() {
  Check c;
  const auto results = iwasawa_battery(1, Precision{8, 24}, 200);
  const std::vector<std::string> randomized{
      "Weierstrass reconstruction",      "mu/lambda invariant under twist", "mu/lambda invariant under involution",
      "involution is involutive",        "twist composition",               "twist lemma",
      "ext1 preserves normal form",      "funceq forward pairs pass",       "funceq perturbations fail"};
  for (const auto& name : randomized) {
    const auto it = std::find_if(results.begin(), results.end(), [&](const auto& r) { return r.name == name; });
    c.require(it != results.end(), name + ": missing");
    if (it != results.end()) c.require(it->executed >= 200, name + ": fewer than 200 instances");
  }
  std::size_t total = 0;
  for (const auto& r : results) {
    c.require(r.skipped == 0, r.name + ": " + std::to_string(r.skipped) + " skipped");
    c.require(r.passed == r.executed, r.name + ": " + std::to_string(r.failed()) + " failed");
    total += r.executed;
  }
  if (c.ok) c.detail = std::to_string(results.size()) + " properties, " + std::to_string(total) + " instances";
  return c;
}

Check criterion6() {
  Check c;
  const Precision prec{8, 243};
  const CoefficientRing ring(3, 1, prec.N);
  std::vector<DistinguishedPolynomial> nu;
  for (int m = 0; m <= 3; ++m) nu.push_back(nu_polynomial(ring, m));
  std::mt19937_64 rng(1);
  std::set<i64> us;
  for (int t = 0; t < 50; ++t) {
    ElementaryModule E{ring, prec, {}, {}};
    const unsigned mask = 1 + static_cast<unsigned>(rng() % 15);
    for (int m = 0; m <= 3; ++m) {
      if (mask >> m & 1U) E.poly_factors.push_back({nu[static_cast<std::size_t>(m)], 1 + static_cast<int>(rng() % 2)});
    }
    for (auto k = rng() % 3; k > 0; --k) E.p_power_factors.push_back(1 + static_cast<int>(rng() % 3));
    const std::string where = "module " + std::to_string(t);
    try {
      const TwistCharacter u = find_regular_twist(E, 5);
      us.insert(u.u);
      const ElementaryModule plus = module_twist(E, u);
      const ElementaryModule minus = module_twist(E, u.inverse(ring));
      for (int n = 0; n <= 5; ++n) {
        c.require(coinvariants_finite(plus, n) == Finiteness::Finite, where + ": u-twist at n = " + std::to_string(n));
        c.require(coinvariants_finite(minus, n) == Finiteness::Finite,
                  where + ": u^-1-twist at n = " + std::to_string(n));
      }
    } catch (const Error& e) {
      c.require(false, where + ": " + e.what());
    }
  }
  if (c.ok) {
    c.detail = "u in {";
    for (i64 u : us) c.detail += (c.detail.back() == '{' ? "" : ", ") + std::to_string(u);
    c.detail += "}";
  }
  return c;
}

Check criterion7() {
  Check c;
  std::size_t audits = 0;
  for (int k = 1; k <= 6; ++k) {
    const std::string name = "example" + std::to_string(k) + ".json";
    const ArtinInstance inst = load(name);
    const AuditReport base = full_audit(inst);
    const auto same = [&](const AuditReport& r) {
      return r.verdicts == base.verdicts && r.overall == base.overall && r.d == base.d && r.d_plus == base.d_plus &&
             r.d_minus == base.d_minus && r.d_plus_sigma == base.d_plus_sigma &&
             r.d_minus_sigma == base.d_minus_sigma;
    };
    for (i64 g = 2; g < inst.prime; ++g) {
      if (!is_primitive_root(g, inst.prime)) continue;
      c.require(same(full_audit(inst, {g})), name + ": primitive root " + std::to_string(g));
      ++audits;
    }
    const PermGroup G = PermGroup::from_generators(inst.degree, inst.generators);
    std::set<Permutation> conjugates;
    for (const auto& h : G.elements()) conjugates.insert(h * inst.complex_conjugation * h.inverse());
    for (const auto& cc : conjugates) {
      if (cc == inst.complex_conjugation) continue;
      ArtinInstance moved = inst;
      moved.complex_conjugation = cc;
      c.require(same(full_audit(moved)), name + ": conjugate " + cc.to_cycle_string());
      ++audits;
    }
  }
  if (c.ok) c.detail = std::to_string(audits) + " re-audits";
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_seconds;  // 0: no limit
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "example 1 reproduction", 1.0, criterion1},
      {2, "examples 2-5 reproduction", 5.0, criterion2},
      {3, "example 6 reproduction", 1.0, criterion3},
      {4, "character-table battery", 10.0, criterion4},
      {5, "Iwasawa property suite at (8, 24)", 10.0, criterion5},
      {6, "regular twists of modules dividing omega_3", 10.0, criterion6},
      {7, "audit invariance under root and conjugation changes", 0.0, criterion7},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = cr.run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.ok && cr.limit_seconds > 0 && seconds >= cr.limit_seconds) {
      c.ok = false;
      c.detail = "over the time limit";
    }
    if (!c.ok) ++failures;
    std::printf("%s criterion %d: %s (%.2f s)%s%s\n", c.ok ? "PASS" : "FAIL", cr.id, cr.title, seconds,
                c.detail.empty() ? "" : ": ", c.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
