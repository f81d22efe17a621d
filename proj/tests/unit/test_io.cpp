#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "helpers.hpp"
#include "iwartin/io.hpp"

using namespace iwartin;
using testing::error_code;

TEST_CASE("permutations are one-line and 1-based") {
  const auto g = Permutation::from_cycles(4, {{1, 3}});
  CHECK(to_json(g) == Json::parse("[3, 2, 1, 4]"));
  CHECK(permutation_from_json(Json::parse("[3, 2, 1, 4]"), 4) == g);
  CHECK(error_code([] { permutation_from_json(Json::parse("[1, 2]"), 3); }) == Errc::SchemaViolation);
  CHECK(error_code([] { permutation_from_json(Json::parse("[1, 1, 2]"), 3); }) == Errc::InvalidPermutation);
}

TEST_CASE("cyclotomic values") {
  const auto z = CycloElement::zeta(5, 2);
  CHECK(cyclo_from_json(to_json(z)) == z);
  CHECK(cyclo_from_json(Json(-3)) == CycloElement::integer(-3));
  CHECK(error_code([] { cyclo_from_json(Json::parse(R"({"conductor": 5})")); }) == Errc::SchemaViolation);
}

TEST_CASE("instances round-trip") {
  for (const char* name : {"example1.json", "example3.json", "example6.json"}) {
    const Json j = read_json_file(testing::instance_path(name));
    const ArtinInstance inst = instance_from_json(j);
    const ArtinInstance again = instance_from_json(to_json(inst));
    CHECK(to_json(again) == to_json(inst));
    CHECK(full_audit(again) == full_audit(inst));
  }
}

TEST_CASE("strict instance schema") {
  Json j = read_json_file(testing::instance_path("example1.json"));
  SUBCASE("missing field") {
    j.erase("torsion_assumed");
    CHECK(error_code([&] { instance_from_json(j); }) == Errc::SchemaViolation);
  }
  SUBCASE("unknown field") {
    j["extra"] = 1;
    CHECK(error_code([&] { instance_from_json(j); }) == Errc::SchemaViolation);
  }
  SUBCASE("wrong type") {
    j["prime"] = "seven";
    CHECK(error_code([&] { instance_from_json(j); }) == Errc::SchemaViolation);
  }
  SUBCASE("negative index") {
    j["v_plus"][0]["irrep_index"] = -1;
    CHECK(error_code([&] { instance_from_json(j); }) == Errc::SchemaViolation);
  }
}

TEST_CASE("reports round-trip through text") {
  for (const char* name : {"example2.json", "example5.json", "example6.json", "broken.json"}) {
    const AuditReport r = full_audit(testing::load_instance(name));
    const Json j = to_json(r);
    CHECK(report_from_json(Json::parse(j.dump())) == r);
    CHECK(j.at("overall") == (r.overall ? "pass" : "fail"));
  }
  CHECK(error_code([] { report_from_json(Json::parse("{}")); }) == Errc::SchemaViolation);
}

TEST_CASE("series and integer lists") {
  const CoefficientRing R(5, 1, 8);
  const auto s = parse_series(R, "5, 0,1");
  REQUIRE(s.size() == 3);
  CHECK(s[0] == R.from_int(5));
  CHECK(s[2] == R.from_int(1));
  const CoefficientRing O(5, 2, 8);
  const auto t = parse_series(O, "[5,0],[0,5], [1,0]");
  REQUIRE(t.size() == 3);
  CHECK(t[1] == O.from_coords({0, 5}));
  CHECK(parse_int_list("-1,2") == std::vector<i64>{-1, 2});
  CHECK(error_code([] { parse_int_list("1,x"); }) == Errc::ParseError);
  CHECK(error_code([] { parse_int_list(""); }) == Errc::ParseError);
  CHECK(error_code([&] { parse_series(O, "[1,0"); }) == Errc::ParseError);
}

TEST_CASE("modules from JSON") {
  const Json j = Json::parse(R"({"p": 3, "precision": [8, 30], "p_power_factors": [1],
                                 "poly_factors": [{"coeffs": [3, 3, 1], "exponent": 2}]})");
  const ElementaryModule E = module_from_json(j, Precision{});
  CHECK(E.ring.p() == 3);
  CHECK(E.precision == Precision{8, 30});
  CHECK(E.mu() == 1);
  CHECK(E.lambda() == 4);
  CHECK(error_code([] { module_from_json(Json::parse(R"({"p": 3, "poly_factors": [{"coeffs": [1, 1]}]})"), {}); }) ==
        Errc::InvalidInstance);
  CHECK(error_code([] { module_from_json(Json::parse(R"({"p": 3, "q": 1})"), {}); }) == Errc::SchemaViolation);
}

TEST_CASE("atomic writes replace the file whole") {
  const auto dir = std::filesystem::temp_directory_path() / "iwartin_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "out.json";
  write_file_atomic(path, "first\n");
  write_file_atomic(path, "second\n");
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "second");
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++files;
  CHECK(files == 1);
  std::filesystem::remove_all(dir);
}
