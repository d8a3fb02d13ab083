#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "rd/core.hpp"

namespace rd {

struct SolverStats {
  std::uint64_t nodes_explored = 0;
  std::map<std::string, std::uint64_t> rule_applications;
  std::uint64_t leaf_enumerations = 0;

  void count(const std::string& rule, std::uint64_t by = 1) {
    rule_applications[rule] += by;
  }
  void merge(const SolverStats& other) {
    nodes_explored += other.nodes_explored;
    leaf_enumerations += other.leaf_enumerations;
    for (const auto& [k, v] : other.rule_applications)
      rule_applications[k] += v;
  }
};

struct DecideOutcome {
  std::optional<DelegationSolution> solution;
  SolverStats stats;
  bool yes() const { return solution.has_value(); }
};

}  // namespace rd
