#include "iwartin/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <unistd.h>

#include "iwartin/error.hpp"

namespace iwartin {

namespace {

[[noreturn]] void schema(const std::string& what) { raise(Errc::SchemaViolation, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) schema(std::string("missing field '") + name + "'");
  return j.at(name);
}

void only_fields(const Json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!j.is_object()) schema(where + " must be an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : j.items()) {
    if (!ok.count(key)) schema("unknown field '" + key + "' in " + where);
  }
}

i64 as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) schema(what + " must be an integer");
  return j.get<i64>();
}

std::vector<i64> as_int_list(const Json& j, const std::string& what) {
  if (!j.is_array()) schema(what + " must be an array of integers");
  std::vector<i64> out;
  for (const auto& x : j) out.push_back(as_int(x, what));
  return out;
}

Json constituents_json(const std::vector<Constituent>& parts) {
  Json a = Json::array();
  for (const auto& c : parts) a.push_back({{"irrep_index", c.irrep_index}, {"multiplicity", c.multiplicity}});
  return a;
}

std::vector<Constituent> constituents_from_json(const Json& j, const std::string& what,
                                                std::vector<std::string>* labels = nullptr) {
  if (!j.is_array()) schema(what + " must be an array");
  std::vector<Constituent> out;
  for (const auto& e : j) {
    only_fields(e, {"irrep_index", "multiplicity", "label"}, what + " entry");
    const i64 idx = as_int(field(e, "irrep_index"), what + ".irrep_index");
    if (idx < 0) schema(what + ".irrep_index must be non-negative");
    out.push_back({static_cast<std::size_t>(idx), as_int(field(e, "multiplicity"), what + ".multiplicity")});
    if (labels) {
      if (e.contains("label") && !e.at("label").is_string()) schema(what + ".label must be a string");
      labels->push_back(e.contains("label") ? e.at("label").get<std::string>() : "");
    }
  }
  return out;
}

bool as_bool(const Json& j, const std::string& what) {
  if (!j.is_boolean()) schema(what + " must be a boolean");
  return j.get<bool>();
}

}  // namespace

Json to_json(const CycloElement& x) { return {{"conductor", x.conductor()}, {"coords", x.coords()}}; }

CycloElement cyclo_from_json(const Json& j) {
  if (j.is_number_integer()) return CycloElement::integer(j.get<i64>());
  only_fields(j, {"conductor", "coords"}, "cyclotomic value");
  const i64 m = as_int(field(j, "conductor"), "conductor");
  if (m < 1) schema("conductor must be positive");
  return CycloElement::from_coords(m, as_int_list(field(j, "coords"), "coords"));
}

Json to_json(const Permutation& g) { return g.one_line(); }

Permutation permutation_from_json(const Json& j, std::size_t degree) {
  const auto images = as_int_list(j, "permutation");
  if (images.size() != degree) {
    schema("permutation has " + std::to_string(images.size()) + " images, degree is " + std::to_string(degree));
  }
  return Permutation::from_one_line(images);
}

PermGroup group_from_json(const Json& j) {
  only_fields(j, {"degree", "generators"}, "group");
  const i64 degree = as_int(field(j, "degree"), "group.degree");
  if (degree < 1) schema("group.degree must be positive");
  std::vector<Permutation> gens;
  const Json& g = field(j, "generators");
  if (!g.is_array()) schema("group.generators must be an array");
  for (const auto& x : g) gens.push_back(permutation_from_json(x, static_cast<std::size_t>(degree)));
  return PermGroup::from_generators(static_cast<std::size_t>(degree), std::move(gens));
}

Json to_json(const CharTable& table) {
  Json classes = Json::array();
  for (const auto& c : table.group.classes()) {
    classes.push_back({{"representative", to_json(c.representative)},
                       {"cycles", c.representative.to_cycle_string()},
                       {"size", c.size},
                       {"element_order", c.element_order}});
  }
  Json irreps = Json::array();
  for (const auto& chi : table.irreducibles) {
    Json values = Json::array();
    for (const auto& v : chi.values()) values.push_back(to_json(v));
    irreps.push_back({{"degree", *chi.degree()}, {"values", values}});
  }
  return {{"order", table.group.order()},
          {"modular_prime", table.modular_prime},
          {"classes", classes},
          {"irreducibles", irreps}};
}

ArtinInstance instance_from_json(const Json& j) {
  only_fields(j,
              {"name", "description", "prime", "polynomial", "group", "complex_conjugation", "decomposition_generators",
               "rho", "v_plus", "torsion_assumed", "u_plus_stated"},
              "instance");
  ArtinInstance inst;
  if (j.contains("name")) {
    if (!j.at("name").is_string()) schema("name must be a string");
    inst.name = j.at("name").get<std::string>();
  }
  inst.prime = as_int(field(j, "prime"), "prime");
  inst.polynomial = as_int_list(field(j, "polynomial"), "polynomial");
  const Json& g = field(j, "group");
  only_fields(g, {"degree", "generators"}, "group");
  const i64 degree = as_int(field(g, "degree"), "group.degree");
  if (degree < 1) schema("group.degree must be positive");
  inst.degree = static_cast<std::size_t>(degree);
  if (!field(g, "generators").is_array()) schema("group.generators must be an array");
  for (const auto& x : g.at("generators")) inst.generators.push_back(permutation_from_json(x, inst.degree));
  inst.complex_conjugation = permutation_from_json(field(j, "complex_conjugation"), inst.degree);
  const Json& dg = field(j, "decomposition_generators");
  if (!dg.is_array()) schema("decomposition_generators must be an array");
  for (const auto& x : dg) inst.decomposition_generators.push_back(permutation_from_json(x, inst.degree));
  const Json& rho = field(j, "rho");
  only_fields(rho, {"index", "pinned_values"}, "rho");
  const i64 idx = as_int(field(rho, "index"), "rho.index");
  if (idx < 0) schema("rho.index must be non-negative");
  inst.rho_index = static_cast<std::size_t>(idx);
  if (rho.contains("pinned_values")) {
    if (!rho.at("pinned_values").is_array()) schema("rho.pinned_values must be an array");
    std::vector<CycloElement> pinned;
    for (const auto& v : rho.at("pinned_values")) pinned.push_back(cyclo_from_json(v));
    inst.pinned_values = std::move(pinned);
  }
  inst.v_plus = constituents_from_json(field(j, "v_plus"), "v_plus", &inst.v_plus_labels);
  inst.torsion_assumed = as_bool(field(j, "torsion_assumed"), "torsion_assumed");
  if (j.contains("u_plus_stated")) {
    inst.u_plus_stated = constituents_from_json(j.at("u_plus_stated"), "u_plus_stated", &inst.u_plus_stated_labels);
  }
  return inst;
}

Json to_json(const ArtinInstance& inst) {
  Json gens = Json::array();
  for (const auto& g : inst.generators) gens.push_back(to_json(g));
  Json dgens = Json::array();
  for (const auto& g : inst.decomposition_generators) dgens.push_back(to_json(g));
  Json rho = {{"index", inst.rho_index}};
  if (inst.pinned_values) {
    Json pinned = Json::array();
    for (const auto& v : *inst.pinned_values) pinned.push_back(to_json(v));
    rho["pinned_values"] = pinned;
  }
  const auto with_labels = [](const std::vector<Constituent>& parts, const std::vector<std::string>& labels) {
    Json a = constituents_json(parts);
    for (std::size_t i = 0; i < labels.size() && i < a.size(); ++i) {
      if (!labels[i].empty()) a[i]["label"] = labels[i];
    }
    return a;
  };
  Json j;
  if (!inst.name.empty()) j["name"] = inst.name;
  j["prime"] = inst.prime;
  j["polynomial"] = inst.polynomial;
  j["group"] = {{"degree", inst.degree}, {"generators", gens}};
  j["complex_conjugation"] = to_json(inst.complex_conjugation);
  j["decomposition_generators"] = dgens;
  j["rho"] = rho;
  j["v_plus"] = with_labels(inst.v_plus, inst.v_plus_labels);
  j["torsion_assumed"] = inst.torsion_assumed;
  if (inst.u_plus_stated) j["u_plus_stated"] = with_labels(*inst.u_plus_stated, inst.u_plus_stated_labels);
  return j;
}

Json to_json(const AuditReport& r) {
  const auto& v = r.verdicts;
  Json j;
  j["name"] = r.name;
  j["prime"] = r.prime;
  j["primitive_root"] = r.primitive_root;
  j["orders"] = {{"delta_prime", r.order_base},
                 {"delta", r.order_delta},
                 {"decomposition_prime", r.order_decomposition_base},
                 {"decomposition", r.order_decomposition}};
  j["frobenius"] = {{"squarefree", r.squarefree},
                    {"degree_profile", r.degree_profile},
                    {"verdict", frobenius_verdict_name(r.frobenius)}};
  j["d"] = r.d;
  j["d_plus"] = r.d_plus;
  j["d_minus"] = r.d_minus;
  j["d_plus_sigma"] = r.d_plus_sigma;
  j["d_minus_sigma"] = r.d_minus_sigma;
  j["decomposition_labels"] = r.decomposition_labels;
  j["rho_restriction"] = constituents_json(r.rho_restriction);
  j["sigma_restriction"] = constituents_json(r.sigma_restriction);
  j["v_plus"] = constituents_json(r.v_plus);
  j["u_plus"] = constituents_json(r.u_plus);
  if (r.u_plus_stated) j["u_plus_stated"] = constituents_json(*r.u_plus_stated);
  if (r.u_plus_stated_matches) j["u_plus_stated_matches"] = *r.u_plus_stated_matches;
  j["hyp2b_dual"] = r.hyp2b_dual;
  j["verdicts"] = {{"HYP1", v.hyp1},
                   {"totally_complex", v.totally_complex},
                   {"HYP2a", v.hyp2a},
                   {"HYP2b", v.hyp2b},
                   {"H0_V", v.h0_v},
                   {"H0_U", v.h0_u},
                   {"frobenius_diag", v.frobenius_diag},
                   {"dimension_identities", v.dimension_identities}};
  j["torsion"] = {{"rho", torsion_status_name(r.tor_rho)}, {"sigma", torsion_status_name(r.tor_sigma)}};
  j["assumptions"] = r.assumptions;
  j["notes"] = r.notes;
  j["overall"] = r.overall ? "pass" : "fail";
  return j;
}

namespace {

TorsionStatus torsion_from_name(const std::string& s) {
  for (auto t : {TorsionStatus::AutoSatisfied, TorsionStatus::Assumed, TorsionStatus::Unverified}) {
    if (torsion_status_name(t) == s) return t;
  }
  schema("unknown torsion status '" + s + "'");
}

FrobeniusVerdict frobenius_from_name(const std::string& s) {
  for (auto f : {FrobeniusVerdict::Consistent, FrobeniusVerdict::Inconsistent, FrobeniusVerdict::RamifiedInputAccepted}) {
    if (frobenius_verdict_name(f) == s) return f;
  }
  schema("unknown Frobenius verdict '" + s + "'");
}

}  // namespace

AuditReport report_from_json(const Json& j) {
  try {
    AuditReport r;
    r.name = j.at("name").get<std::string>();
    r.prime = j.at("prime").get<i64>();
    r.primitive_root = j.at("primitive_root").get<i64>();
    const Json& o = j.at("orders");
    r.order_base = o.at("delta_prime").get<std::size_t>();
    r.order_delta = o.at("delta").get<std::size_t>();
    r.order_decomposition_base = o.at("decomposition_prime").get<std::size_t>();
    r.order_decomposition = o.at("decomposition").get<std::size_t>();
    const Json& f = j.at("frobenius");
    r.squarefree = f.at("squarefree").get<bool>();
    r.degree_profile = f.at("degree_profile").get<std::vector<std::size_t>>();
    r.frobenius = frobenius_from_name(f.at("verdict").get<std::string>());
    r.d = j.at("d").get<i64>();
    r.d_plus = j.at("d_plus").get<i64>();
    r.d_minus = j.at("d_minus").get<i64>();
    r.d_plus_sigma = j.at("d_plus_sigma").get<i64>();
    r.d_minus_sigma = j.at("d_minus_sigma").get<i64>();
    r.decomposition_labels = j.at("decomposition_labels").get<std::vector<std::string>>();
    r.rho_restriction = constituents_from_json(j.at("rho_restriction"), "rho_restriction");
    r.sigma_restriction = constituents_from_json(j.at("sigma_restriction"), "sigma_restriction");
    r.v_plus = constituents_from_json(j.at("v_plus"), "v_plus");
    r.u_plus = constituents_from_json(j.at("u_plus"), "u_plus");
    if (j.contains("u_plus_stated")) r.u_plus_stated = constituents_from_json(j.at("u_plus_stated"), "u_plus_stated");
    if (j.contains("u_plus_stated_matches")) r.u_plus_stated_matches = j.at("u_plus_stated_matches").get<bool>();
    r.hyp2b_dual = j.at("hyp2b_dual").get<bool>();
    const Json& v = j.at("verdicts");
    r.verdicts.hyp1 = v.at("HYP1").get<bool>();
    r.verdicts.totally_complex = v.at("totally_complex").get<bool>();
    r.verdicts.hyp2a = v.at("HYP2a").get<bool>();
    r.verdicts.hyp2b = v.at("HYP2b").get<bool>();
    r.verdicts.h0_v = v.at("H0_V").get<bool>();
    r.verdicts.h0_u = v.at("H0_U").get<bool>();
    r.verdicts.frobenius_diag = v.at("frobenius_diag").get<bool>();
    r.verdicts.dimension_identities = v.at("dimension_identities").get<bool>();
    r.tor_rho = torsion_from_name(j.at("torsion").at("rho").get<std::string>());
    r.tor_sigma = torsion_from_name(j.at("torsion").at("sigma").get<std::string>());
    r.assumptions = j.at("assumptions").get<std::vector<std::string>>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    r.overall = j.at("overall").get<std::string>() == "pass";
    return r;
  } catch (const nlohmann::json::exception& e) {
    schema(std::string("report: ") + e.what());
  }
}

ElementaryModule module_from_json(const Json& j, Precision fallback) {
  only_fields(j, {"p", "residue_degree", "precision", "p_power_factors", "poly_factors"}, "module");
  const i64 p = as_int(field(j, "p"), "p");
  const int f = j.contains("residue_degree") ? static_cast<int>(as_int(j.at("residue_degree"), "residue_degree")) : 1;
  Precision prec = fallback;
  if (j.contains("precision")) {
    const auto nm = as_int_list(j.at("precision"), "precision");
    if (nm.size() != 2 || nm[0] < 1 || nm[1] < 1) schema("precision must be [N, M] with positive entries");
    prec = {static_cast<int>(nm[0]), static_cast<int>(nm[1])};
  }
  CoefficientRing ring(p, f, prec.N);
  ElementaryModule E{ring, prec, {}, {}};
  if (j.contains("p_power_factors")) {
    for (i64 m : as_int_list(j.at("p_power_factors"), "p_power_factors")) {
      if (m < 1) schema("p_power_factors entries must be >= 1");
      E.p_power_factors.push_back(static_cast<int>(m));
    }
  }
  if (j.contains("poly_factors")) {
    if (!j.at("poly_factors").is_array()) schema("poly_factors must be an array");
    for (const auto& e : j.at("poly_factors")) {
      only_fields(e, {"coeffs", "exponent"}, "poly_factors entry");
      const Json& c = field(e, "coeffs");
      if (!c.is_array()) schema("coeffs must be an array");
      std::vector<OElem> coeffs;
      for (const auto& x : c) {
        coeffs.push_back(x.is_array() ? ring.from_coords(as_int_list(x, "coeffs")) : ring.from_int(as_int(x, "coeffs")));
      }
      const i64 e_exp = e.contains("exponent") ? as_int(e.at("exponent"), "exponent") : 1;
      if (e_exp < 1) schema("exponent must be >= 1");
      E.poly_factors.push_back({make_distinguished(ring, coeffs, prec.N), static_cast<int>(e_exp)});
    }
  }
  return E;
}

std::vector<i64> parse_int_list(std::string_view text) {
  std::vector<i64> out;
  std::string item;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stoll(item, &used));
    } catch (const std::logic_error&) {
      raise(Errc::ParseError, "'" + item + "' is not an integer");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size()) raise(Errc::ParseError, "'" + item + "' is not an integer");
  }
  if (out.empty()) raise(Errc::ParseError, "empty coefficient list");
  return out;
}

std::vector<OElem> parse_series(const CoefficientRing& ring, std::string_view text) {
  if (text.find('[') == std::string_view::npos) {
    std::vector<OElem> out;
    for (i64 c : parse_int_list(text)) out.push_back(ring.from_int(c));
    return out;
  }
  std::vector<OElem> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto open = text.find('[', pos);
    if (open == std::string_view::npos) {
      if (text.substr(pos).find_first_not_of(" ,") != std::string_view::npos) raise(Errc::ParseError, "stray text in series");
      break;
    }
    if (text.substr(pos, open - pos).find_first_not_of(" ,") != std::string_view::npos) {
      raise(Errc::ParseError, "mixed scalar and vector coefficients");
    }
    const auto close = text.find(']', open);
    if (close == std::string_view::npos) raise(Errc::ParseError, "unbalanced '[' in series");
    out.push_back(ring.from_coords(parse_int_list(text.substr(open + 1, close - open - 1))));
    pos = close + 1;
  }
  if (out.empty()) raise(Errc::ParseError, "empty series");
  return out;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::SchemaViolation, "cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    raise(Errc::SchemaViolation, path.string() + ": " + e.what());
  }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  const auto dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
  const auto tmp = dir / ("." + path.filename().string() + ".tmp" + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) raise(Errc::Internal, "cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) raise(Errc::Internal, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    raise(Errc::Internal, "cannot move report into place: " + ec.message());
  }
}

}  // namespace iwartin
