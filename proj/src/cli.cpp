#include "iwartin/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "iwartin/artin.hpp"
#include "iwartin/character_table.hpp"
#include "iwartin/io.hpp"
#include "iwartin/iwasawa.hpp"
#include "iwartin/poly_mod_p.hpp"
#include "iwartin/suite.hpp"

#ifndef IWARTIN_INSTANCE_DIR
#define IWARTIN_INSTANCE_DIR "instances"
#endif

namespace iwartin {

int exit_code_for(Errc code) noexcept {
  switch (code) {
    case Errc::ParseError:
    case Errc::SchemaViolation:
    case Errc::InvalidInstance:
    case Errc::InvalidTwist:
    case Errc::InvalidPermutation:
    case Errc::ElementNotInGroup:
    case Errc::NotAnInvolution:
    case Errc::NotASubMultiset:
    case Errc::POrderViolation:
    case Errc::NotASubgroup:
      return 2;
    case Errc::SearchExhausted:
      return 1;
    default:
      return 3;
  }
}

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return "[" + s + "]";
}

std::string constituents(const std::vector<Constituent>& parts, const std::vector<std::string>& labels) {
  std::string s;
  for (const auto& c : parts) {
    if (!s.empty()) s += " + ";
    if (c.multiplicity != 1) s += std::to_string(c.multiplicity) + "*";
    s += c.irrep_index < labels.size() ? labels[c.irrep_index] : std::to_string(c.irrep_index);
    s += " (#" + std::to_string(c.irrep_index) + ")";
  }
  return s.empty() ? "0" : s;
}

std::string poly_string(const CoefficientRing& R, const DistinguishedPolynomial& P) {
  std::string s;
  for (std::size_t i = P.coeffs.size(); i-- > 0;) {
    if (i + 1 < P.coeffs.size() && R.is_zero(P.coeffs[i], P.digits)) continue;
    if (!s.empty()) s += " + ";
    if (i + 1 == P.coeffs.size()) {
      s += i == 0 ? "1" : (i == 1 ? "X" : "X^" + std::to_string(i));
      continue;
    }
    s += R.to_string(P.coeffs[i]);
    if (i >= 1) s += "*X";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s + "  (mod " + std::to_string(R.p()) + "^" + std::to_string(P.digits) + ")";
}

void print_form(std::ostream& out, const std::string& title, const CoefficientRing& R, const WeierstrassForm& w) {
  out << title << "mu = " << w.mu << ", lambda = " << w.lambda << "\n";
  out << title << "P = " << poly_string(R, w.P) << "\n";
  out << title << "unit = " << w.unit.to_string() << "\n";
  out << title << "certified to (" << w.certified.N << ", " << w.certified.M << ")\n";
}

void print_audit(std::ostream& out, const AuditReport& r) {
  const auto yes = [](bool b) { return b ? "yes" : "no"; };
  out << "instance          " << r.name << "\n";
  out << "prime             " << r.prime << " (primitive root " << r.primitive_root << ")\n";
  out << "|Delta'|, |Delta| " << r.order_base << ", " << r.order_delta << "\n";
  out << "|D'|, |D|         " << r.order_decomposition_base << ", " << r.order_decomposition << "\n";
  out << "f mod p           " << (r.squarefree ? "squarefree, degree profile " + join(r.degree_profile) : "not squarefree")
      << " -> " << frobenius_verdict_name(r.frobenius) << "\n";
  out << "d, d+, d-         " << r.d << ", " << r.d_plus << ", " << r.d_minus << "\n";
  out << "d+, d- of sigma   " << r.d_plus_sigma << ", " << r.d_minus_sigma << "\n";
  out << "rho|D             " << constituents(r.rho_restriction, r.decomposition_labels) << "\n";
  out << "sigma|D           " << constituents(r.sigma_restriction, r.decomposition_labels) << "\n";
  out << "V+                " << constituents(r.v_plus, r.decomposition_labels) << "\n";
  out << "U+                " << constituents(r.u_plus, r.decomposition_labels) << "\n";
  if (r.u_plus_stated) {
    out << "U+ as stated      " << constituents(*r.u_plus_stated, r.decomposition_labels) << " (matches: "
        << yes(r.u_plus_stated_matches.value_or(false)) << ")\n";
  }
  const auto& v = r.verdicts;
  out << "HYP1              " << yes(v.hyp1) << "\n";
  out << "totally complex   " << yes(v.totally_complex) << "\n";
  out << "HYP2a             " << yes(v.hyp2a) << "\n";
  out << "HYP2b             " << yes(v.hyp2b) << " (dual " << yes(r.hyp2b_dual) << ")\n";
  out << "H0 V, H0 U        " << yes(v.h0_v) << ", " << yes(v.h0_u) << "\n";
  out << "Frobenius         " << yes(v.frobenius_diag) << "\n";
  out << "dimensions        " << yes(v.dimension_identities) << "\n";
  out << "torsion rho/sigma " << torsion_status_name(r.tor_rho) << ", " << torsion_status_name(r.tor_sigma) << "\n";
  for (const auto& a : r.assumptions) out << "assumption        " << a << "\n";
  for (const auto& n : r.notes) out << "note              " << n << "\n";
  out << "overall           " << (r.overall ? "PASS" : "FAIL") << "\n";
}

struct SeriesArgs {
  i64 p = 0;
  int f = 1;
  std::string series;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Artin representation audits and Iwasawa algebra calculus"};
  app.require_subcommand(1);
  std::string precision_text;
  app.add_option("--precision", precision_text, "Working precision N,M (default from IWARTIN_PRECISION or 8,24)");

  std::string audit_file, json_out;
  std::optional<i64> primitive_root;
  auto* audit = app.add_subcommand("audit", "Audit an Artin instance file");
  audit->add_option("file", audit_file, "Instance JSON")->required();
  audit->add_option("--json", json_out, "Write the report JSON here");
  audit->add_option("--primitive-root", primitive_root, "Primitive root fixing the Teichmueller character");

  std::string group_file;
  auto* chartab = app.add_subcommand("chartab", "Character table of a permutation group");
  chartab->add_option("--group", group_file, "Group JSON {degree, generators}")->required();
  chartab->add_option("--json", json_out, "Write the table JSON here");

  i64 factor_p = 0;
  std::string poly_text;
  auto* factor = app.add_subcommand("factor", "Degree profile of a polynomial mod p");
  factor->add_option("--p", factor_p, "Odd prime")->required();
  factor->add_option("--poly", poly_text, "Coefficients c0,c1,... ascending")->required();

  SeriesArgs sa;
  i64 twist_u = 0;
  auto add_series = [&](CLI::App* cmd, bool with_u) {
    cmd->add_option("--p", sa.p, "Odd prime")->required();
    cmd->add_option("--f", sa.f, "Residue degree of the unramified coefficient ring");
    cmd->add_option("--series", sa.series, "Coefficients c0,c1,... (or [a,b],[c,d],... when f > 1)")->required();
    if (with_u) cmd->add_option("--u", twist_u, "Twist value, u = 1 mod p")->required();
  };
  auto* wprep_cmd = app.add_subcommand("wprep", "Weierstrass preparation");
  add_series(wprep_cmd, false);
  auto* twist_cmd = app.add_subcommand("twist", "F(u(1+X) - 1)");
  add_series(twist_cmd, true);
  auto* involute_cmd = app.add_subcommand("involute", "F((1+X)^-1 - 1)");
  add_series(involute_cmd, false);

  std::string fv_text, fu_text;
  i64 kappa = 0;
  auto* funceq = app.add_subcommand("funceq", "Check the algebraic functional equation");
  funceq->add_option("--p", sa.p, "Odd prime")->required();
  funceq->add_option("--f", sa.f, "Residue degree");
  funceq->add_option("--fv", fv_text, "Characteristic series on the V side")->required();
  funceq->add_option("--fu", fu_text, "Characteristic series on the U side")->required();
  funceq->add_option("--kappa", kappa, "Value of kappa on the generator, = 1 mod p")->required();

  std::string module_file;
  int nmax = 0;
  auto* regtwist = app.add_subcommand("regtwist", "Find a regular twist of an elementary module");
  regtwist->add_option("--module", module_file, "Module JSON")->required();
  regtwist->add_option("--nmax", nmax, "Largest layer n")->required()->check(CLI::NonNegativeNumber);

  std::uint64_t seed = 1;
  std::string instances = IWARTIN_INSTANCE_DIR;
  std::size_t count = 200;
  auto* suite = app.add_subcommand("suite", "Run the property batteries");
  suite->add_option("--seed", seed, "Random seed");
  suite->add_option("--instances", instances, "Directory holding example*.json");
  suite->add_option("--count", count, "Random Iwasawa instances per property");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const Precision prec = precision_text.empty() ? default_precision() : parse_precision(precision_text);

    if (audit->parsed()) {
      const ArtinInstance inst = instance_from_json(read_json_file(audit_file));
      const AuditReport report = full_audit(inst, {primitive_root});
      print_audit(out, report);
      if (!json_out.empty()) write_file_atomic(json_out, to_json(report).dump(2) + "\n");
      return report.overall ? 0 : 1;
    }

    if (chartab->parsed()) {
      const CharTable table = dixon_table(group_from_json(read_json_file(group_file)));
      out << "order " << table.group.order() << ", " << table.size() << " classes, modular prime "
          << table.modular_prime << "\n";
      for (std::size_t k = 0; k < table.group.num_classes(); ++k) {
        const auto& c = table.group.classes()[k];
        out << "class " << k << ": " << c.representative.to_cycle_string() << "  size " << c.size << "  order "
            << c.element_order << "\n";
      }
      for (std::size_t i = 0; i < table.size(); ++i) {
        out << "chi" << i << ":";
        for (const auto& v : table.irreducibles[i].values()) out << "  " << v.to_string();
        out << "\n";
      }
      if (!json_out.empty()) write_file_atomic(json_out, to_json(table).dump(2) + "\n");
      return 0;
    }

    if (factor->parsed()) {
      const PolyModP f = PolyModP::from_integers(factor_p, parse_int_list(poly_text));
      out << "f = " << f.to_string() << " mod " << factor_p << "\n";
      if (!is_squarefree(f)) {
        out << "not squarefree\n";
      } else {
        out << "squarefree, degree profile " << join(degree_profile(f)) << "\n";
      }
      return 0;
    }

    if (wprep_cmd->parsed() || twist_cmd->parsed() || involute_cmd->parsed()) {
      const CoefficientRing R(sa.p, sa.f, prec.N);
      const IwasawaElement F(R, prec, parse_series(R, sa.series));
      if (wprep_cmd->parsed()) {
        print_form(out, "", R, wprep(F));
      } else if (twist_cmd->parsed()) {
        out << twist(F, TwistCharacter::make(twist_u, sa.p)).to_string() << "\n";
      } else {
        out << involute(F).to_string() << "\n";
      }
      return 0;
    }

    if (funceq->parsed()) {
      const CoefficientRing R(sa.p, sa.f, prec.N);
      const IwasawaElement FV(R, prec, parse_series(R, fv_text));
      const IwasawaElement FU(R, prec, parse_series(R, fu_text));
      const TwistCharacter k = TwistCharacter::make(kappa, sa.p);
      print_form(out, "iota(F_V):       ", R, wprep(involute(FV)));
      print_form(out, "Tw_kappa(F_U):   ", R, wprep(twist(FU, k)));
      const bool pass = funceq_check(FV, FU, k);
      out << (pass ? "PASS" : "FAIL") << "\n";
      return pass ? 0 : 1;
    }

    if (regtwist->parsed()) {
      const ElementaryModule E = module_from_json(read_json_file(module_file), prec);
      const TwistCharacter t = find_regular_twist(E, nmax);
      out << "u = " << t.u << "\n";
      const ElementaryModule plus = module_twist(E, t);
      const ElementaryModule minus = module_twist(E, t.inverse(E.ring));
      for (int n = 0; n <= nmax; ++n) {
        out << "n = " << n << ": " << finiteness_name(coinvariants_finite(plus, n)) << " / "
            << finiteness_name(coinvariants_finite(minus, n)) << "\n";
      }
      return 0;
    }

    if (suite->parsed()) {
      const SuiteSummary summary = run_suite({seed, prec, instances, count});
      out << summary.to_text();
      return summary.ok() ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}

}  // namespace iwartin
