#include "iwartin/artin.hpp"

#include <algorithm>
#include <map>

#include "iwartin/error.hpp"

namespace iwartin {

namespace {

std::vector<Constituent> normalized(const std::vector<Constituent>& parts) {
  std::map<std::size_t, i64> merged;
  for (const auto& c : parts) merged[c.irrep_index] += c.multiplicity;
  std::vector<Constituent> out;
  for (const auto& [idx, m] : merged) {
    if (m != 0) out.push_back({idx, m});
  }
  return out;
}

template <class F>
auto in_field(const char* field, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const Error& e) {
    throw Error(e.code(), std::string(field) + ": " + e.what());
  }
}

}  // namespace

std::string DecompositionModel::label(std::size_t d_irrep) const {
  const auto& [base, power] = labels.at(d_irrep);
  std::string s = "psi" + std::to_string(base);
  if (power == 1) s += "*tau";
  if (power > 1) s += "*tau^" + std::to_string(power);
  return s;
}

ClassFunction teichmueller(const DirectProduct& delta) {
  const i64 order = delta.cyclic().order();
  std::vector<RootSum> lifts;
  for (const auto& cls : delta.group().classes()) {
    lifts.push_back(RootSum::root(order, delta.cyclic().discrete_log(delta.residue(cls.representative))));
  }
  return ClassFunction(delta.group(), std::move(lifts));
}

ClassFunction inflate(const ClassFunction& chi, const DirectProduct& delta) {
  std::vector<RootSum> lifts;
  for (const auto& cls : delta.group().classes()) {
    lifts.push_back(chi.lifts()[chi.group().class_of(delta.project_base(cls.representative))]);
  }
  return ClassFunction(delta.group(), std::move(lifts));
}

DecompositionModel build_decomposition_model(const PermGroup& base, const std::vector<Permutation>& decomposition_gens,
                                             const CyclicFactor& cyclic) {
  DirectProduct delta = direct_product_with_cyclic(base, cyclic);
  PermGroup d_base = subgroup(base, decomposition_gens);
  std::vector<Permutation> gens;
  for (const auto& g : decomposition_gens) gens.push_back(delta.embed(g, 1));
  gens.push_back(delta.embed(Permutation::identity(base.degree()), cyclic.generator));
  PermGroup d = subgroup(delta.group(), gens);
  CharTable base_table = dixon_table(d_base);
  CharTable table = dixon_table(d);
  ClassFunction tau_delta = teichmueller(delta);
  ClassFunction tau = restrict(tau_delta, d);

  const i64 order = cyclic.order();
  const Permutation gen = delta.embed(Permutation::identity(base.degree()), cyclic.generator);
  std::vector<std::pair<std::size_t, i64>> labels;
  for (const auto& psi : table.irreducibles) {
    std::optional<std::size_t> base_idx;
    for (std::size_t a = 0; a < base_table.size() && !base_idx; ++a) {
      const auto& cand = base_table.irreducibles[a];
      bool match = true;
      for (std::size_t k = 0; k < d_base.num_classes() && match; ++k) {
        match = psi.at(delta.embed(d_base.classes()[k].representative, 1)) == cand.value(k);
      }
      if (match) base_idx = a;
    }
    const CycloElement at_gen = psi.at(gen);
    const i64 deg = *psi.degree();
    std::optional<i64> power;
    for (i64 k = 0; k < order && !power; ++k) {
      if (at_gen == CycloElement::integer(deg) * CycloElement::zeta(order, k)) power = k;
    }
    if (!base_idx || !power) raise(Errc::Internal, "irrep of D does not factor as base irrep times a power of tau");
    labels.emplace_back(*base_idx, *power);
  }
  return DecompositionModel{std::move(delta), std::move(d_base), std::move(d),         std::move(base_table),
                            std::move(table), std::move(tau_delta), std::move(tau), std::move(labels)};
}

i64 d_plus(const ClassFunction& chi, const Permutation& c) {
  if (!(c * c).is_identity()) raise(Errc::NotAnInvolution, c.to_cycle_string() + " is not an involution");
  const auto at_one = chi.degree();
  const auto at_c = chi.at(c).as_integer();
  if (!at_one || !at_c || (*at_one + *at_c) % 2 != 0) {
    raise(Errc::NonIntegerMultiplicity, "character value at an involution is not an integer of the right parity");
  }
  return (*at_one + *at_c) / 2;
}

ClassFunction build_sigma(const ClassFunction& chi_rho, const ClassFunction& tau) { return chi_rho.conj() * tau; }

std::vector<Constituent> restriction_decomposition(const ClassFunction& chi, const DecompositionModel& model) {
  return decompose(restrict(chi, model.decomposition), model.table);
}

bool is_sub_multiset(const std::vector<Constituent>& part, const std::vector<Constituent>& whole) {
  std::map<std::size_t, i64> have;
  for (const auto& c : whole) have[c.irrep_index] += c.multiplicity;
  for (const auto& c : normalized(part)) {
    if (c.multiplicity < 0 || have[c.irrep_index] < c.multiplicity) return false;
  }
  return true;
}

std::vector<Constituent> multiset_difference(const std::vector<Constituent>& whole, const std::vector<Constituent>& part) {
  if (!is_sub_multiset(part, whole)) raise(Errc::NotASubMultiset, "constituents are not contained in the restriction");
  std::vector<Constituent> neg = whole;
  for (const auto& c : part) neg.push_back({c.irrep_index, -c.multiplicity});
  return normalized(neg);
}

std::vector<Constituent> u_plus(const std::vector<Constituent>& v_plus, const std::vector<Constituent>& rho_restriction,
                                const std::vector<Constituent>& sigma_restriction, const DecompositionModel& model) {
  const auto complement = multiset_difference(rho_restriction, v_plus);
  std::vector<Constituent> result;
  for (const auto& w : complement) {
    const ClassFunction dual = model.table.irreducibles.at(w.irrep_index).conj() * model.tau;
    const auto idx = model.table.find(dual);
    if (!idx) raise(Errc::Internal, "twisted dual of an irrep is not irreducible");
    result.push_back({*idx, w.multiplicity});
  }
  result = normalized(result);
  if (!is_sub_multiset(result, sigma_restriction)) {
    raise(Errc::Internal, "dual filtration is not contained in the restriction of sigma");
  }
  return result;
}

std::string_view torsion_status_name(TorsionStatus s) noexcept {
  switch (s) {
    case TorsionStatus::AutoSatisfied: return "AutoSatisfied";
    case TorsionStatus::Assumed: return "Assumed";
    case TorsionStatus::Unverified: return "Unverified";
  }
  return "?";
}

namespace {

i64 dimension(const std::vector<Constituent>& parts, const CharTable& table) {
  i64 dim = 0;
  for (const auto& c : parts) dim += c.multiplicity * *table.irreducibles.at(c.irrep_index).degree();
  return dim;
}

bool supports_disjoint(const std::vector<Constituent>& a, const std::vector<Constituent>& b) {
  for (const auto& x : a) {
    for (const auto& y : b) {
      if (x.irrep_index == y.irrep_index) return false;
    }
  }
  return true;
}

i64 trivial_multiplicity(const std::vector<Constituent>& parts, std::size_t trivial) {
  for (const auto& c : parts) {
    if (c.irrep_index == trivial) return c.multiplicity;
  }
  return 0;
}

TorsionStatus torsion_status(i64 dplus, bool assumed) {
  if (dplus == 1) return TorsionStatus::AutoSatisfied;
  return assumed ? TorsionStatus::Assumed : TorsionStatus::Unverified;
}

}  // namespace

AuditReport full_audit(const ArtinInstance& inst, const AuditOptions& options) {
  AuditReport r;
  r.name = inst.name;
  r.prime = inst.prime;
  r.assumptions.push_back("K1 and Q(zeta_p) are linearly disjoint, so Delta = Delta' x (Z/p)^x");

  const PermGroup G = in_field("group.generators", [&] { return PermGroup::from_generators(inst.degree, inst.generators); });
  r.order_base = G.order();
  const CharTable table = in_field("group", [&] { return dixon_table(G); });
  if (inst.rho_index >= table.size()) {
    raise(Errc::InvalidInstance, "rho.index: " + std::to_string(inst.rho_index) + " out of range (" +
                                     std::to_string(table.size()) + " irreducible characters)");
  }
  const ClassFunction& chi = table.irreducibles[inst.rho_index];
  if (inst.pinned_values) {
    if (inst.pinned_values->size() != chi.size()) {
      raise(Errc::InvalidInstance, "rho.pinned_values: expected " + std::to_string(chi.size()) + " values");
    }
    for (std::size_t k = 0; k < chi.size(); ++k) {
      if (!((*inst.pinned_values)[k] == chi.value(k))) {
        raise(Errc::InvalidInstance, "rho.pinned_values: class " + std::to_string(k) + " pinned " +
                                         (*inst.pinned_values)[k].to_string() + " but irrep has " + chi.value(k).to_string());
      }
    }
  }
  const Permutation& c = inst.complex_conjugation;
  in_field("complex_conjugation", [&] { return G.class_of(c); });
  if (!(c * c).is_identity()) raise(Errc::NotAnInvolution, "complex_conjugation: " + c.to_cycle_string() + " has order > 2");
  r.verdicts.totally_complex = is_valid_conjugation(G, c);
  if (!r.verdicts.totally_complex) r.notes.push_back("complex conjugation is trivial: totally real case is out of scope");

  r.d = *chi.degree();
  r.d_plus = d_plus(chi, c);
  r.d_minus = r.d - r.d_plus;

  const bool p_odd_prime = inst.prime >= 3 && is_prime(inst.prime);
  r.verdicts.hyp1 = p_odd_prime && G.order() % static_cast<std::size_t>(inst.prime) != 0;
  if (!r.verdicts.hyp1) {
    r.notes.push_back(p_odd_prime ? "p divides |Delta'|" : "p is not an odd prime");
    return r;
  }

  const PolyModP f = in_field("polynomial", [&] { return PolyModP::from_integers(inst.prime, inst.polynomial); });
  r.squarefree = is_squarefree(f);
  if (r.squarefree) r.degree_profile = degree_profile(f);

  const CyclicFactor cyclic = in_field("primitive_root", [&] { return CyclicFactor::for_prime(inst.prime, options.primitive_root); });
  r.primitive_root = cyclic.generator;
  const DecompositionModel model =
      in_field("decomposition_generators", [&] { return build_decomposition_model(G, inst.decomposition_generators, cyclic); });
  r.order_delta = model.delta.group().order();
  r.order_decomposition_base = model.base_decomposition.order();
  r.order_decomposition = model.decomposition.order();
  for (std::size_t i = 0; i < model.table.size(); ++i) r.decomposition_labels.push_back(model.label(i));

  r.frobenius = frobenius_consistency(f, model.base_decomposition);
  r.verdicts.frobenius_diag = r.frobenius != FrobeniusVerdict::Inconsistent;
  if (r.frobenius == FrobeniusVerdict::RamifiedInputAccepted) {
    r.notes.push_back("f is not squarefree mod p: decomposition group taken as supplied (order " +
                      std::to_string(r.order_decomposition_base) + ")");
  }

  const ClassFunction chi_rho = inflate(chi, model.delta);
  const ClassFunction chi_sigma = build_sigma(chi_rho, model.tau_delta);
  if (multiplicity(chi_sigma, chi_sigma) != 1) raise(Errc::Internal, "sigma is not irreducible");
  const Permutation c_delta = model.delta.embed(c, -1);
  r.d_plus_sigma = d_plus(chi_sigma, c_delta);
  r.d_minus_sigma = r.d - r.d_plus_sigma;
  r.verdicts.dimension_identities = r.d_plus + r.d_minus == r.d && r.d_plus_sigma == r.d_minus;

  r.rho_restriction = restriction_decomposition(chi_rho, model);
  r.sigma_restriction = restriction_decomposition(chi_sigma, model);
  const std::size_t trivial = model.table.trivial_index();
  r.verdicts.h0_v = trivial_multiplicity(r.rho_restriction, trivial) == 0;
  r.verdicts.h0_u = trivial_multiplicity(r.sigma_restriction, trivial) == 0;

  for (const auto& v : inst.v_plus) {
    if (v.irrep_index >= model.table.size() || v.multiplicity < 1) {
      raise(Errc::InvalidInstance, "v_plus: constituent " + std::to_string(v.irrep_index) + " with multiplicity " +
                                       std::to_string(v.multiplicity) + " is not a valid irrep of D");
    }
  }
  const auto check_labels = [&](const char* field, const std::vector<Constituent>& parts,
                                const std::vector<std::string>& labels) {
    for (std::size_t i = 0; i < labels.size() && i < parts.size(); ++i) {
      if (labels[i].empty() || parts[i].irrep_index >= model.table.size()) continue;
      if (labels[i] != model.label(parts[i].irrep_index)) {
        raise(Errc::InvalidInstance, std::string(field) + ": irrep " + std::to_string(parts[i].irrep_index) +
                                         " is " + model.label(parts[i].irrep_index) + ", labelled " + labels[i]);
      }
    }
  };
  // Labels name tau powers for the smallest primitive root.
  const bool default_root = cyclic.generator == smallest_primitive_root(inst.prime);
  if (default_root) {
    check_labels("v_plus", inst.v_plus, inst.v_plus_labels);
  } else if (!inst.v_plus_labels.empty() || !inst.u_plus_stated_labels.empty()) {
    r.notes.push_back("labels not checked: they refer to the smallest primitive root");
  }
  if (inst.u_plus_stated) {
    for (const auto& u : *inst.u_plus_stated) {
      if (u.irrep_index >= model.table.size() || u.multiplicity < 1) {
        raise(Errc::InvalidInstance, "u_plus_stated: constituent " + std::to_string(u.irrep_index) + " is not valid");
      }
    }
  }
  if (inst.u_plus_stated && default_root) check_labels("u_plus_stated", *inst.u_plus_stated, inst.u_plus_stated_labels);
  r.v_plus = normalized(inst.v_plus);
  const bool contained = is_sub_multiset(r.v_plus, r.rho_restriction);
  const i64 v_dim = dimension(r.v_plus, model.table);
  r.verdicts.hyp2a = contained && v_dim == r.d_plus && 0 < r.d_plus && r.d_plus < r.d;
  if (!contained) r.notes.push_back("v_plus is not contained in the restriction of rho");
  if (contained && v_dim != r.d_plus) {
    r.notes.push_back("dim v_plus = " + std::to_string(v_dim) + " differs from d+ = " + std::to_string(r.d_plus));
  }
  if (r.d_plus == 0 || r.d_plus == r.d) r.notes.push_back("0 < d+ < d fails: the totally real case is covered by prior work");

  if (contained) {
    const auto v_minus = multiset_difference(r.rho_restriction, r.v_plus);
    r.verdicts.hyp2b = supports_disjoint(r.v_plus, v_minus);
    r.u_plus = u_plus(r.v_plus, r.rho_restriction, r.sigma_restriction, model);
    const auto u_minus = multiset_difference(r.sigma_restriction, r.u_plus);
    r.hyp2b_dual = supports_disjoint(r.u_plus, u_minus);
    if (dimension(r.u_plus, model.table) != r.d_plus_sigma) r.verdicts.dimension_identities = false;
  }
  if (inst.u_plus_stated) {
    r.u_plus_stated = normalized(*inst.u_plus_stated);
    r.u_plus_stated_matches = contained && *r.u_plus_stated == r.u_plus;
    if (!*r.u_plus_stated_matches) {
      r.notes.push_back("stated dual filtration is not the orthogonal complement of v_plus under the pairing");
    }
  }

  r.tor_rho = torsion_status(r.d_plus, inst.torsion_assumed);
  r.tor_sigma = torsion_status(r.d_plus_sigma, inst.torsion_assumed);

  const auto& v = r.verdicts;
  r.overall = v.hyp1 && v.totally_complex && v.hyp2a && v.hyp2b && v.h0_v && v.h0_u && v.frobenius_diag &&
              v.dimension_identities;
  return r;
}

}  // namespace iwartin
