#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "iwartin/artin.hpp"
#include "iwartin/character_table.hpp"
#include "iwartin/cyclotomic.hpp"
#include "iwartin/iwasawa.hpp"
#include "iwartin/perm_group.hpp"

namespace iwartin {

using Json = nlohmann::ordered_json;

Json to_json(const CycloElement& x);
CycloElement cyclo_from_json(const Json& j);

Json to_json(const Permutation& g);
Permutation permutation_from_json(const Json& j, std::size_t degree);

/// {"degree": d, "generators": [[one-line], ...]}
PermGroup group_from_json(const Json& j);
Json to_json(const CharTable& table);

/// Strict: unknown or missing fields raise SchemaViolation.
ArtinInstance instance_from_json(const Json& j);
Json to_json(const ArtinInstance& inst);

Json to_json(const AuditReport& r);
AuditReport report_from_json(const Json& j);

/// {"p", "residue_degree"?, "precision"?: [N, M], "p_power_factors": [..],
///  "poly_factors": [{"coeffs": [...], "exponent": e}]}
ElementaryModule module_from_json(const Json& j, Precision fallback);

/// "c0,c1,..." or "[a,b],[c,d],..." for residue degree > 1.
std::vector<OElem> parse_series(const CoefficientRing& ring, std::string_view text);
std::vector<i64> parse_int_list(std::string_view text);

Json read_json_file(const std::filesystem::path& path);
/// Writes through a temporary file in the same directory, then renames.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace iwartin
