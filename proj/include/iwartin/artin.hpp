#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iwartin/character_table.hpp"
#include "iwartin/perm_group.hpp"
#include "iwartin/poly_mod_p.hpp"

namespace iwartin {

/// Input bundle for one audit. Permutations act on 1..degree of the base
/// group; v_plus indexes the character table of D = D' x (Z/p)^x.
struct ArtinInstance {
  std::string name;
  i64 prime = 0;
  std::vector<i64> polynomial;
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  Permutation complex_conjugation;
  std::vector<Permutation> decomposition_generators;
  std::size_t rho_index = 0;
  std::optional<std::vector<CycloElement>> pinned_values;
  std::vector<Constituent> v_plus;
  bool torsion_assumed = false;
  /// The dual filtration as printed by the source, compared but not enforced.
  std::optional<std::vector<Constituent>> u_plus_stated;
  /// Optional labels parallel to v_plus / u_plus_stated ("" when absent),
  /// checked against the decomposition model.
  std::vector<std::string> v_plus_labels;
  std::vector<std::string> u_plus_stated_labels;
};

struct AuditOptions {
  /// Primitive root fixing tau; the smallest one when absent.
  std::optional<i64> primitive_root;
};

/// Delta' x (Z/p)^x together with the decomposition subgroup D and the
/// Teichmueller character on both.
struct DecompositionModel {
  DirectProduct delta;
  PermGroup base_decomposition;  // D'
  PermGroup decomposition;       // D, inside delta
  CharTable base_table;          // of D'
  CharTable table;               // of D
  ClassFunction tau_delta;
  ClassFunction tau;             // restricted to D
  /// For each irrep of D: (index into base_table, power of tau).
  std::vector<std::pair<std::size_t, i64>> labels;

  std::string label(std::size_t d_irrep) const;
};

DecompositionModel build_decomposition_model(const PermGroup& base, const std::vector<Permutation>& decomposition_gens,
                                             const CyclicFactor& cyclic);

/// Teichmueller character a -> zeta_{p-1}^{ind_g(a)} on a direct product.
ClassFunction teichmueller(const DirectProduct& delta);

/// chi pulled back along the projection Delta -> Delta'.
ClassFunction inflate(const ClassFunction& chi, const DirectProduct& delta);

/// (chi(1) + chi(c)) / 2; raises NotAnInvolution unless c^2 = 1.
i64 d_plus(const ClassFunction& chi, const Permutation& c);

/// conj(chi_rho) * tau.
ClassFunction build_sigma(const ClassFunction& chi_rho, const ClassFunction& tau);

std::vector<Constituent> restriction_decomposition(const ClassFunction& chi, const DecompositionModel& model);

/// Multiset difference whole - part; raises NotASubMultiset.
std::vector<Constituent> multiset_difference(const std::vector<Constituent>& whole, const std::vector<Constituent>& part);

bool is_sub_multiset(const std::vector<Constituent>& part, const std::vector<Constituent>& whole);

/// Dual filtration {conj(w) tau : w in rho|_D - v_plus}; raises
/// NotASubMultiset. Its dimension is checked against sigma|_D.
std::vector<Constituent> u_plus(const std::vector<Constituent>& v_plus, const std::vector<Constituent>& rho_restriction,
                                const std::vector<Constituent>& sigma_restriction, const DecompositionModel& model);

enum class TorsionStatus { AutoSatisfied, Assumed, Unverified };
std::string_view torsion_status_name(TorsionStatus s) noexcept;

struct Verdicts {
  bool hyp1 = false;
  bool totally_complex = false;
  bool hyp2a = false;
  bool hyp2b = false;
  bool h0_v = false;
  bool h0_u = false;
  bool frobenius_diag = false;
  bool dimension_identities = false;
  friend bool operator==(const Verdicts&, const Verdicts&) = default;
};

struct AuditReport {
  std::string name;
  i64 prime = 0;
  i64 primitive_root = 0;
  std::size_t order_base = 0;           // |Delta'|
  std::size_t order_delta = 0;          // |Delta|
  std::size_t order_decomposition_base = 0;  // |D'|
  std::size_t order_decomposition = 0;  // |D|
  bool squarefree = false;
  std::vector<std::size_t> degree_profile;  // empty when not squarefree
  FrobeniusVerdict frobenius = FrobeniusVerdict::Inconsistent;
  i64 d = 0;
  i64 d_plus = 0;
  i64 d_minus = 0;
  i64 d_plus_sigma = 0;
  i64 d_minus_sigma = 0;
  std::vector<std::string> decomposition_labels;  // one per irrep of D
  std::vector<Constituent> rho_restriction;
  std::vector<Constituent> sigma_restriction;
  std::vector<Constituent> v_plus;
  std::vector<Constituent> u_plus;
  std::optional<std::vector<Constituent>> u_plus_stated;
  std::optional<bool> u_plus_stated_matches;
  bool hyp2b_dual = false;
  Verdicts verdicts;
  TorsionStatus tor_rho = TorsionStatus::Unverified;
  TorsionStatus tor_sigma = TorsionStatus::Unverified;
  std::vector<std::string> assumptions;
  std::vector<std::string> notes;
  bool overall = false;

  friend bool operator==(const AuditReport&, const AuditReport&) = default;
};

/// Runs every hypothesis check. Malformed input raises with the field named;
/// failed hypotheses are reported, not raised.
AuditReport full_audit(const ArtinInstance& inst, const AuditOptions& options = {});

}  // namespace iwartin
