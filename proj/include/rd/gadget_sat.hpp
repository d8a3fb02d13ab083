#pragma once

// Reduction from bounded-occurrence 3-SAT (each literal in at most two
// clauses) to delegation resolution with cap 3 and all degrees at most 3.
//
// Per variable i: sinks a_i ("x_i false" side) and abar_i, plus the chain
// d_{i,2} -> d_{i,1} -> {a_i, abar_i}. Per clause j: y_j with an edge to
// the vertex of each of its literals. d_{i,1}'s choice encodes the
// assignment (delegating to a_i means x_i = false) and fills that side
// with load 3, so clause vertices survive only on literals set true.
//
// Id layout: a_i = 4(i-1)+1, abar_i = 4(i-1)+2, d_{i,1} = 4(i-1)+3,
// d_{i,2} = 4(i-1)+4, y_j = 4n + j.

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "rd/core.hpp"

namespace rd {

// Literals are signed variable indexes: +i for x_i, -i for the negation.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::array<int, 3>> clauses;
};

inline void validate_formula(const CnfFormula& f) {
  for (const auto& clause : f.clauses)
    for (int lit : clause) {
      int var = lit < 0 ? -lit : lit;
      if (var < 1 || var > f.num_vars)
        throw std::invalid_argument("literal out of range");
    }
}

// Number of clauses the literal occurs in (duplicates inside one clause
// count once).
inline int clause_occurrences(const CnfFormula& f, int lit) {
  int count = 0;
  for (const auto& clause : f.clauses)
    if (clause[0] == lit || clause[1] == lit || clause[2] == lit) ++count;
  return count;
}

// Exactly two clauses per literal and three distinct literals per clause.
inline bool is_strict_3b2(const CnfFormula& f) {
  for (const auto& c : f.clauses)
    if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2]) return false;
  for (int v = 1; v <= f.num_vars; ++v)
    if (clause_occurrences(f, v) != 2 || clause_occurrences(f, -v) != 2)
      return false;
  return true;
}

struct Assignment {
  std::vector<bool> value;  // index 0 unused; value[i] is x_i
  bool get(int var) const { return value[var]; }
};

inline bool satisfies(const CnfFormula& f, const Assignment& a) {
  for (const auto& clause : f.clauses) {
    bool sat = false;
    for (int lit : clause)
      sat |= (lit > 0) ? a.get(lit) : !a.get(-lit);
    if (!sat) return false;
  }
  return true;
}

struct SatGadgetMap {
  int n = 0, m = 0;
  VertexId a(int i) const { return 4 * (i - 1) + 1; }
  VertexId abar(int i) const { return 4 * (i - 1) + 2; }
  VertexId d1(int i) const { return 4 * (i - 1) + 3; }
  VertexId d2(int i) const { return 4 * (i - 1) + 4; }
  VertexId y(int j) const { return 4 * n + j; }
  VertexId lit_vertex(int lit) const {
    return lit > 0 ? a(lit) : abar(-lit);
  }
};

inline std::pair<Instance, SatGadgetMap> gadget_from_3b2sat(
    const CnfFormula& f) {
  validate_formula(f);
  for (int v = 1; v <= f.num_vars; ++v)
    for (int lit : {v, -v})
      if (clause_occurrences(f, lit) > 2)
        throw std::invalid_argument(
            "literal occurs in more than two clauses");

  SatGadgetMap map{f.num_vars, (int)f.clauses.size()};
  DelegationGraph g;
  for (VertexId v = 1; v <= 4 * f.num_vars + (int)f.clauses.size(); ++v)
    g.add_vertex(v);
  for (int i = 1; i <= f.num_vars; ++i) {
    g.add_edge(map.d2(i), map.d1(i));
    g.add_edge(map.d1(i), map.a(i));
    g.add_edge(map.d1(i), map.abar(i));
  }
  for (int j = 1; j <= (int)f.clauses.size(); ++j)
    for (int lit : f.clauses[j - 1])
      g.add_edge(map.y(j), map.lit_vertex(lit));  // duplicates collapse

  Instance inst{std::move(g), 3};
  return {std::move(inst), map};
}

// x_i is false iff d_{i,1} delegates to a_i.
inline Assignment extract_assignment(const SatGadgetMap& map,
                                     const DelegationSolution& sol) {
  Assignment a;
  a.value.assign(map.n + 1, false);
  for (int i = 1; i <= map.n; ++i)
    a.value[i] = sol.choice.at(map.d1(i)) != map.a(i);
  return a;
}

// First satisfying assignment with x_1 varying slowest, false before true.
inline std::optional<Assignment> sat_brute(const CnfFormula& f,
                                           int max_vars = 6) {
  validate_formula(f);
  if (f.num_vars > max_vars)
    throw BudgetExceeded("sat search limited to " + std::to_string(max_vars) +
                         " variables");
  for (unsigned mask = 0; mask < (1u << f.num_vars); ++mask) {
    Assignment a;
    a.value.assign(f.num_vars + 1, false);
    for (int i = 1; i <= f.num_vars; ++i)
      a.value[i] = (mask >> (f.num_vars - i)) & 1u;
    if (satisfies(f, a)) return a;
  }
  return std::nullopt;
}

}  // namespace rd
