#pragma once

#include <string>
#include <vector>

#include "repgrowth/gmod/module.hpp"

namespace repgrowth::verify {

struct Criterion {
  int id;
  std::string name;
  std::string claim;
};

struct Outcome {
  int id = 0;
  std::string name;
  std::string claim;
  bool pass = false;
  std::vector<std::string> details;
  double seconds = 0;
};

const std::vector<Criterion>& criteria();
std::vector<std::string> suite_names();
/// Criterion ids of a named suite; throws std::invalid_argument for unknown names.
std::vector<int> suite(const std::string& name);
Outcome run(int id, std::uint64_t seed = 1);

/// Walks every proper nonzero subspace in reduced echelon form. Small modules only.
bool exhaustive_irreducible(const gmod::GModule& M);

}  // namespace repgrowth::verify
