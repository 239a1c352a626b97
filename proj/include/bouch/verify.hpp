#pragma once

#include <string>
#include <vector>

#include "bouch/lattice_tree.hpp"

namespace bouch {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Hand-built trees shared by the suites: paths, combs, root stars.
std::vector<std::pair<std::string, RootedTree>> fixture_trees();

/// Star of k <= 4 bonds around the root (0,0).
RootedTree star_tree(std::size_t k);

std::vector<CheckResult> run_core_suite();
std::vector<CheckResult> run_bouch_suite();
std::vector<CheckResult> run_bethe_suite();

}  // namespace bouch
