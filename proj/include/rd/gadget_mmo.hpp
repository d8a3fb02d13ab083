#pragma once

// Reduction from minimum-maximum-outdegree orientation (weights in unary)
// to delegation resolution with cap r + 1.
//
// Every source vertex u becomes a sink b_u. A weighted edge {u,v} with
// weight w becomes the chain a_{uv,w} -> ... -> a_{uv,1}, whose head
// a_{uv,1} chooses between b_u and b_v: delegating to b_u puts the whole
// chain weight w on u, i.e. orients the edge out of u.
//
// Id layout: b_u = u for u in 1..n; chain vertices follow in input edge
// order, edge j occupying base..base+w-1 as a_{uv,1}..a_{uv,w}.

#include <optional>
#include <utility>
#include <vector>

#include "rd/core.hpp"

namespace rd {

struct MmoInstance {
  struct WeightedEdge {
    VertexId u = 0, v = 0;
    Weight w = 1;
  };
  int n = 0;  // vertices are 1..n
  std::vector<WeightedEdge> edges;
  Weight r = 1;
};

inline void validate_mmo(const MmoInstance& src,
                         Weight total_weight_budget = 1'000'000) {
  if (src.r < 1) throw std::invalid_argument("bound r must be >= 1");
  Weight total = 0;
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const auto& e : src.edges) {
    if (e.u < 1 || e.u > src.n || e.v < 1 || e.v > src.n)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loops are not allowed");
    if (e.w < 1) throw std::invalid_argument("zero-weight edge");
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert({key.first, key.second}).second)
      throw std::invalid_argument("duplicate undirected edge");
    total += e.w;
  }
  if (total > total_weight_budget)
    throw BudgetExceeded("total edge weight exceeds the unary budget");
}

// dir[j] is (u,v) if edge j is oriented out of u, else (v,u).
struct Orientation {
  std::vector<std::pair<VertexId, VertexId>> dir;
};

inline std::map<VertexId, Weight> weighted_outdegrees(
    const MmoInstance& src, const Orientation& o) {
  std::map<VertexId, Weight> d;
  for (VertexId v = 1; v <= src.n; ++v) d[v] = 0;
  for (std::size_t j = 0; j < src.edges.size(); ++j)
    d[o.dir[j].first] += src.edges[j].w;
  return d;
}

struct MmoGadgetMap {
  int n = 0;
  std::vector<std::pair<VertexId, Weight>> chain;  // (base id, length) per edge
  VertexId b(VertexId u) const { return u; }
  VertexId chain_head(std::size_t edge_index) const {
    return chain[edge_index].first;  // a_{uv,1}
  }
};

inline std::pair<Instance, MmoGadgetMap> gadget_from_mmo(
    const MmoInstance& src) {
  validate_mmo(src);
  MmoGadgetMap map;
  map.n = src.n;

  DelegationGraph g;
  for (VertexId u = 1; u <= src.n; ++u) g.add_vertex(u);
  VertexId next = src.n + 1;
  for (const auto& e : src.edges) {
    const VertexId base = next;
    map.chain.emplace_back(base, e.w);
    for (Weight i = 0; i < e.w; ++i) g.add_vertex(next++);
    for (VertexId x = base + 1; x < next; ++x) g.add_edge(x, x - 1);
    g.add_edge(base, map.b(e.u));
    g.add_edge(base, map.b(e.v));
  }

  Instance inst{std::move(g), src.r + 1};
  return {std::move(inst), map};
}

inline Orientation extract_orientation(const MmoInstance& src,
                                       const MmoGadgetMap& map,
                                       const DelegationSolution& sol) {
  Orientation o;
  for (std::size_t j = 0; j < src.edges.size(); ++j) {
    const auto& e = src.edges[j];
    if (sol.choice.at(map.chain_head(j)) == map.b(e.u))
      o.dir.emplace_back(e.u, e.v);
    else
      o.dir.emplace_back(e.v, e.u);
  }
  return o;
}

// First orientation (in mask order; bit j clear = edge j as stored) with
// every weighted out-degree at most r, or nullopt.
inline std::optional<Orientation> mmo_brute(const MmoInstance& src,
                                            int max_edges = 12) {
  validate_mmo(src);
  if ((int)src.edges.size() > max_edges)
    throw BudgetExceeded("orientation search limited to " +
                         std::to_string(max_edges) + " edges");
  for (unsigned mask = 0; mask < (1u << src.edges.size()); ++mask) {
    Orientation o;
    for (std::size_t j = 0; j < src.edges.size(); ++j) {
      const auto& e = src.edges[j];
      if ((mask >> j) & 1u)
        o.dir.emplace_back(e.v, e.u);
      else
        o.dir.emplace_back(e.u, e.v);
    }
    auto deg = weighted_outdegrees(src, o);
    bool ok = true;
    for (const auto& [_, d] : deg) ok &= (d <= src.r);
    if (ok) return o;
  }
  return std::nullopt;
}

}  // namespace rd
