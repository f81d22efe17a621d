#pragma once

#include <string>
#include <vector>

#include "iwartin/artin.hpp"
#include "iwartin/error.hpp"
#include "iwartin/io.hpp"

#ifndef IWARTIN_INSTANCE_DIR
#define IWARTIN_INSTANCE_DIR "instances"
#endif

namespace testing {

using Cycles = std::vector<std::vector<int>>;

inline iwartin::PermGroup group(std::size_t degree, const std::vector<Cycles>& gens) {
  std::vector<iwartin::Permutation> perms;
  for (const auto& c : gens) perms.push_back(iwartin::Permutation::from_cycles(degree, c));
  return iwartin::PermGroup::from_generators(degree, perms);
}

inline std::string instance_path(const std::string& name) { return std::string(IWARTIN_INSTANCE_DIR) + "/" + name; }

inline iwartin::ArtinInstance load_instance(const std::string& name) {
  return iwartin::instance_from_json(iwartin::read_json_file(instance_path(name)));
}

template <class F>
iwartin::Errc error_code(F&& f) {
  try {
    f();
  } catch (const iwartin::Error& e) {
    return e.code();
  }
  throw std::runtime_error("expected an iwartin::Error");
}

}  // namespace testing
