#pragma once

// Reduction from two-vertex-disjoint-paths to delegation resolution with
// exactly three sinks.
//
// Every source vertex v becomes a_v. Five long directed chains are added:
// D1 (10n) feeding a_{s1}, D1' (5n) fed by a_{t1} and ending in sink t1',
// D2 (5n) feeding a_{s2}, D2' (10n) fed by a_{t2} ending in sink t2', and
// D3 (15n) ending in sink t3' which every a_v can reach directly. With the
// cap 17n, the only way to keep all three sinks under the cap is to route
// D1's chain along an s1->t1 path and D2's along an s2->t2 path without
// sharing a vertex.
//
// Id layout (n = source vertex count, source ids are 1..n):
//   a_v  = v                      D2  = 16n+1 .. 21n   (end d2  = 21n)
//   D1   = n+1  .. 11n  (end d1 = 11n)
//   D1'  = 11n+1 .. 16n (start d1' = 11n+1, end t1' = 16n)
//   D2'  = 21n+1 .. 31n (start d2' = 21n+1, end t2' = 31n)
//   D3   = 31n+1 .. 46n (end t3' = 46n)
// Chains run along increasing ids.

#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "rd/core.hpp"

namespace rd {

struct TvdpInstance {
  int n = 0;  // vertices are 1..n
  std::set<std::pair<VertexId, VertexId>> edges;
  VertexId s1 = 0, t1 = 0, s2 = 0, t2 = 0;
};

inline void validate_tvdp(const TvdpInstance& src) {
  auto in_range = [&](VertexId v) { return v >= 1 && v <= src.n; };
  for (VertexId v : {src.s1, src.t1, src.s2, src.t2})
    if (!in_range(v)) throw std::invalid_argument("terminal out of range");
  std::set<VertexId> terms{src.s1, src.t1, src.s2, src.t2};
  if (terms.size() != 4)
    throw std::invalid_argument("terminals must be pairwise distinct");
  for (const auto& [u, v] : src.edges) {
    if (!in_range(u) || !in_range(v))
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
  }
}

struct DisjointPathsCertificate {
  std::vector<VertexId> p1;  // s1 .. t1
  std::vector<VertexId> p2;  // s2 .. t2
};

inline bool certificate_valid(const TvdpInstance& src,
                              const DisjointPathsCertificate& cert) {
  auto path_ok = [&](const std::vector<VertexId>& p, VertexId from,
                     VertexId to) {
    if (p.empty() || p.front() != from || p.back() != to) return false;
    std::set<VertexId> seen;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (!seen.insert(p[i]).second) return false;
      if (i + 1 < p.size() && !src.edges.count({p[i], p[i + 1]})) return false;
    }
    return true;
  };
  if (!path_ok(cert.p1, src.s1, src.t1)) return false;
  if (!path_ok(cert.p2, src.s2, src.t2)) return false;
  for (VertexId v : cert.p1)
    for (VertexId w : cert.p2)
      if (v == w) return false;
  return true;
}

struct TvdpGadgetMap {
  int n = 0;
  VertexId s1 = 0, t1 = 0, s2 = 0, t2 = 0;

  VertexId a(VertexId v) const { return v; }
  bool is_a_vertex(VertexId x) const { return x >= 1 && x <= n; }

  VertexId d1_first() const { return n + 1; }
  VertexId d1() const { return 11 * n; }          // end of D1
  VertexId d1p() const { return 11 * n + 1; }     // start of D1'
  VertexId t1p() const { return 16 * n; }         // sink
  VertexId d2_first() const { return 16 * n + 1; }
  VertexId d2() const { return 21 * n; }          // end of D2
  VertexId d2p() const { return 21 * n + 1; }     // start of D2'
  VertexId t2p() const { return 31 * n; }         // sink
  VertexId d3_first() const { return 31 * n + 1; }
  VertexId t3p() const { return 46 * n; }         // sink
};

inline std::pair<Instance, TvdpGadgetMap> gadget_from_tvdp(
    const TvdpInstance& src) {
  validate_tvdp(src);
  const int n = src.n;
  TvdpGadgetMap map{n, src.s1, src.t1, src.s2, src.t2};

  DelegationGraph g;
  for (VertexId v = 1; v <= 46 * n; ++v) g.add_vertex(v);
  auto chain = [&](VertexId first, VertexId last) {
    for (VertexId v = first; v < last; ++v) g.add_edge(v, v + 1);
  };
  chain(map.d1_first(), map.d1());
  chain(map.d1p(), map.t1p());
  chain(map.d2_first(), map.d2());
  chain(map.d2p(), map.t2p());
  chain(map.d3_first(), map.t3p());

  for (const auto& [u, v] : src.edges) g.add_edge(map.a(u), map.a(v));
  g.add_edge(map.d1(), map.a(src.s1));
  g.add_edge(map.d2(), map.a(src.s2));
  g.add_edge(map.a(src.t1), map.d1p());
  g.add_edge(map.a(src.t2), map.d2p());
  for (VertexId v = 1; v <= n; ++v) g.add_edge(map.a(v), map.t3p());

  Instance inst{std::move(g), 17LL * n};
  return {std::move(inst), map};
}

// Walks the chosen edges from a_{s1} to a_{t1} and a_{s2} to a_{t2} and
// maps back to source vertices. Throws if a walk leaves the a-layer or
// loops, which means the solution was not valid for the gadget.
inline DisjointPathsCertificate extract_disjoint_paths(
    const TvdpGadgetMap& map, const DelegationSolution& sol) {
  auto walk = [&](VertexId from, VertexId to) {
    std::vector<VertexId> path;
    std::set<VertexId> seen;
    VertexId cur = map.a(from);
    for (;;) {
      if (!map.is_a_vertex(cur))
        throw std::runtime_error("path trace left the source layer");
      if (!seen.insert(cur).second)
        throw std::runtime_error("path trace looped");
      path.push_back(cur);  // a_v = v
      if (cur == map.a(to)) return path;
      auto it = sol.choice.find(cur);
      if (it == sol.choice.end())
        throw std::runtime_error("path trace hit an unassigned vertex");
      cur = it->second;
    }
  };
  DisjointPathsCertificate cert;
  cert.p1 = walk(map.s1, map.t1);
  cert.p2 = walk(map.s2, map.t2);
  return cert;
}

// Exhaustive two-disjoint-paths search; first certificate in DFS order
// (neighbors ascending) or nullopt.
inline std::optional<DisjointPathsCertificate> tvdp_brute(
    const TvdpInstance& src, int max_vertices = 8) {
  validate_tvdp(src);
  if (src.n > max_vertices)
    throw BudgetExceeded("two-disjoint-paths search limited to " +
                         std::to_string(max_vertices) + " vertices");
  std::map<VertexId, std::vector<VertexId>> adj;
  for (const auto& [u, v] : src.edges) adj[u].push_back(v);

  std::set<VertexId> used;
  std::vector<VertexId> p1, p2;

  // enumerate simple s2->t2 paths avoiding `used`
  std::function<bool(VertexId)> find_p2 = [&](VertexId cur) {
    p2.push_back(cur);
    used.insert(cur);
    if (cur == src.t2) return true;
    for (VertexId w : adj[cur])
      if (!used.count(w) && find_p2(w)) return true;
    p2.pop_back();
    used.erase(cur);
    return false;
  };
  std::function<bool(VertexId)> find_p1 = [&](VertexId cur) {
    p1.push_back(cur);
    used.insert(cur);
    if (cur == src.t1) {
      if (!used.count(src.s2) && find_p2(src.s2)) return true;
    } else {
      for (VertexId w : adj[cur])
        if (!used.count(w) && find_p1(w)) return true;
    }
    p1.pop_back();
    used.erase(cur);
    return false;
  };
  if (!find_p1(src.s1)) return std::nullopt;
  return DisjointPathsCertificate{std::move(p1), std::move(p2)};
}

}  // namespace rd
