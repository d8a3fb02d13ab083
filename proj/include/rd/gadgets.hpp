#pragma once

// Umbrella for the three hardness-gadget generators plus structural
// validation of generated instances.

#include <string>
#include <vector>

#include "rd/core.hpp"
#include "rd/gadget_mmo.hpp"
#include "rd/gadget_sat.hpp"
#include "rd/gadget_tvdp.hpp"

namespace rd {

enum class GadgetKind { Tvdp, Sat, Mmo };

struct StructureReport {
  bool bipartite = false;  // underlying undirected graph
  bool acyclic = false;    // directed
  int sink_count = 0;
  int max_in_degree = 0;
  int max_out_degree = 0;
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
};

namespace gadget_detail {

inline bool is_bipartite(const DelegationGraph& g) {
  std::map<VertexId, int> color;
  for (VertexId start : g.vertex_ids()) {
    if (color.count(start)) continue;
    color[start] = 0;
    std::vector<VertexId> stack{start};
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      auto visit = [&](VertexId w) {
        auto it = color.find(w);
        if (it == color.end()) {
          color[w] = color[v] ^ 1;
          stack.push_back(w);
          return true;
        }
        return it->second != color[v];
      };
      for (VertexId w : g.out_neighbors(v))
        if (!visit(w)) return false;
      for (VertexId w : g.in_neighbors(v))
        if (!visit(w)) return false;
    }
  }
  return true;
}

inline bool is_acyclic(const DelegationGraph& g) {
  std::map<VertexId, int> state;  // 0 new, 1 open, 2 done
  for (VertexId root : g.vertex_ids()) {
    if (state[root]) continue;
    std::vector<std::pair<VertexId, bool>> stack{{root, false}};
    while (!stack.empty()) {
      auto [v, leaving] = stack.back();
      stack.pop_back();
      if (leaving) {
        state[v] = 2;
        continue;
      }
      if (state[v] == 2) continue;
      if (state[v] == 1) continue;
      state[v] = 1;
      stack.push_back({v, true});
      for (VertexId w : g.out_neighbors(v)) {
        if (state[w] == 1) return false;
        if (state[w] == 0) stack.push_back({w, false});
      }
    }
  }
  return true;
}

}  // namespace gadget_detail

// Checks the structural claims a generator of the given kind must satisfy.
// Facts derivable only from the source instance (e.g. the MMO vertex count
// |V| + sum of weights) are the caller's concern.
inline StructureReport check_gadget_structure(const Instance& inst,
                                              GadgetKind kind) {
  const DelegationGraph& g = inst.graph;
  StructureReport report;
  report.bipartite = gadget_detail::is_bipartite(g);
  report.acyclic = gadget_detail::is_acyclic(g);
  report.sink_count = g.sink_count();
  for (VertexId v : g.vertex_ids()) {
    report.max_in_degree = std::max(report.max_in_degree, g.in_degree(v));
    report.max_out_degree = std::max(report.max_out_degree, g.out_degree(v));
  }
  auto require = [&](bool cond, const std::string& what) {
    if (!cond) report.issues.push_back(what);
  };
  switch (kind) {
    case GadgetKind::Tvdp: {
      require(report.sink_count == 3, "expected exactly 3 sinks");
      require(g.n() % 46 == 0, "vertex count must be 46n");
      if (g.n() % 46 == 0)
        require(inst.lambda == 17LL * (g.n() / 46), "cap must be 17n");
      break;
    }
    case GadgetKind::Sat: {
      require(report.bipartite, "graph must be bipartite");
      require(report.acyclic, "graph must be acyclic");
      require(report.max_in_degree <= 3, "in-degree must be at most 3");
      require(report.max_out_degree <= 3, "out-degree must be at most 3");
      require(inst.lambda == 3, "cap must be 3");
      break;
    }
    case GadgetKind::Mmo: {
      require(report.bipartite, "graph must be bipartite");
      require(report.acyclic, "graph must be acyclic");
      require(inst.lambda >= 2, "cap must be r + 1 >= 2");
      break;
    }
  }
  return report;
}

}  // namespace rd
