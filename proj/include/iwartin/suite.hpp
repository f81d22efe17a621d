#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "iwartin/iwasawa.hpp"
#include "iwartin/perm_group.hpp"

namespace iwartin {

/// Outcome of one property over a batch of random instances. Instances that
/// raise PrecisionExhausted or DegreeCapExceeded are skips, not failures.
struct PropertyResult {
  std::string module;
  std::string name;
  std::size_t executed = 0;
  std::size_t passed = 0;
  std::size_t skipped = 0;
  std::vector<std::string> failures;  // first few, for the summary

  std::size_t failed() const { return executed - passed - skipped; }
  bool ok() const { return failed() == 0; }
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  Precision precision;
  std::filesystem::path instances_dir;
  std::size_t iwasawa_count = 200;
};

struct SuiteSummary {
  std::vector<PropertyResult> results;

  std::size_t executed() const;
  std::size_t skipped() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
  /// Deterministic plain-text table, one line per property.
  std::string to_text() const;
};

/// The small groups of the worked examples, C_(p-1) for p in {7, 11, 17, 29}
/// and the products G x (Z/p)^x used there.
std::vector<std::pair<std::string, PermGroup>> named_groups();

/// (Z/p)^x acting on 1..p-1 by multiplication.
PermGroup cyclic_unit_group(i64 p);

std::vector<PropertyResult> groups_battery(std::uint64_t seed);
std::vector<PropertyResult> cyclotomic_battery(std::uint64_t seed);
std::vector<PropertyResult> chartab_battery(std::uint64_t seed);
std::vector<PropertyResult> modpfactor_battery(std::uint64_t seed);
std::vector<PropertyResult> artin_battery(const std::filesystem::path& instances_dir);
std::vector<PropertyResult> iwasawa_battery(std::uint64_t seed, Precision prec, std::size_t count);

SuiteSummary run_suite(const SuiteOptions& options);

}  // namespace iwartin
