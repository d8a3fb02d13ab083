#pragma once

// Core types for delegation graphs: directed graphs with positive vertex
// weights, instances (graph, lambda), solutions (one chosen out-edge per
// non-sink) and sink-load accounting.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace rd {

using VertexId = int;
using Weight = long long;

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown by sink_loads when the chosen edges contain a cycle, i.e. some
// vertex never reaches a sink.
struct CycleError : std::runtime_error {
  VertexId vertex;
  explicit CycleError(VertexId v)
      : std::runtime_error("cycle through vertex " + std::to_string(v)),
        vertex(v) {}
};

// Directed graph with per-vertex weights. Sinks are derived: a vertex is a
// sink iff its out-degree is zero (a self-loop counts as an out-edge until
// normalization strips it). Vertex ids are stable: ids of deleted vertices
// are never reused.
class DelegationGraph {
 public:
  struct VertexInfo {
    Weight weight = 1;
    std::set<VertexId> out;
    std::set<VertexId> in;
  };

  bool has_vertex(VertexId v) const { return verts_.count(v) != 0; }

  void add_vertex(VertexId v, Weight w = 1) {
    if (w <= 0) throw std::invalid_argument("vertex weight must be positive");
    if (!verts_.emplace(v, VertexInfo{w, {}, {}}).second)
      throw std::invalid_argument("duplicate vertex id " + std::to_string(v));
  }

  // Inserts (u,v); returns false if the edge already exists (duplicates
  // collapse). Self-loops are accepted here; normalization removes them.
  bool add_edge(VertexId u, VertexId v) {
    VertexInfo& ui = info(u);
    VertexInfo& vi = info(v);
    if (!ui.out.insert(v).second) return false;
    vi.in.insert(u);
    ++edge_count_;
    return true;
  }

  bool has_edge(VertexId u, VertexId v) const {
    auto it = verts_.find(u);
    return it != verts_.end() && it->second.out.count(v) != 0;
  }

  void remove_edge(VertexId u, VertexId v) {
    VertexInfo& ui = info(u);
    if (ui.out.erase(v) == 0)
      throw std::invalid_argument("no such edge " + std::to_string(u) + "->" +
                                  std::to_string(v));
    info(v).in.erase(u);
    --edge_count_;
  }

  void remove_vertex(VertexId v) {
    VertexInfo& vi = info(v);
    for (VertexId w : vi.out) {
      if (w != v) verts_.at(w).in.erase(v);
      --edge_count_;
    }
    for (VertexId u : vi.in) {
      if (u != v) verts_.at(u).out.erase(v);
      if (u != v) --edge_count_;
    }
    verts_.erase(v);
  }

  Weight weight(VertexId v) const { return cinfo(v).weight; }
  void set_weight(VertexId v, Weight w) {
    if (w <= 0) throw std::invalid_argument("vertex weight must be positive");
    info(v).weight = w;
  }

  const std::set<VertexId>& out_neighbors(VertexId v) const {
    return cinfo(v).out;
  }
  const std::set<VertexId>& in_neighbors(VertexId v) const {
    return cinfo(v).in;
  }
  int out_degree(VertexId v) const { return (int)cinfo(v).out.size(); }
  int in_degree(VertexId v) const { return (int)cinfo(v).in.size(); }
  bool is_sink(VertexId v) const { return cinfo(v).out.empty(); }

  int n() const { return (int)verts_.size(); }
  int m() const { return edge_count_; }

  std::vector<VertexId> vertex_ids() const {
    std::vector<VertexId> ids;
    ids.reserve(verts_.size());
    for (const auto& [v, _] : verts_) ids.push_back(v);
    return ids;
  }

  std::vector<VertexId> sinks() const {
    std::vector<VertexId> out;
    for (const auto& [v, vi] : verts_)
      if (vi.out.empty()) out.push_back(v);
    return out;
  }

  std::vector<VertexId> non_sinks() const {
    std::vector<VertexId> out;
    for (const auto& [v, vi] : verts_)
      if (!vi.out.empty()) out.push_back(v);
    return out;
  }

  int sink_count() const { return (int)sinks().size(); }
  int non_sink_count() const { return n() - sink_count(); }

  Weight total_weight() const {
    Weight s = 0;
    for (const auto& [_, vi] : verts_) s += vi.weight;
    return s;
  }

  std::vector<std::pair<VertexId, VertexId>> edges() const {
    std::vector<std::pair<VertexId, VertexId>> es;
    es.reserve(edge_count_);
    for (const auto& [u, ui] : verts_)
      for (VertexId v : ui.out) es.emplace_back(u, v);
    return es;
  }

  bool operator==(const DelegationGraph& other) const {
    if (verts_.size() != other.verts_.size()) return false;
    for (const auto& [v, vi] : verts_) {
      auto it = other.verts_.find(v);
      if (it == other.verts_.end()) return false;
      if (vi.weight != it->second.weight || vi.out != it->second.out)
        return false;
    }
    return true;
  }

 private:
  VertexInfo& info(VertexId v) {
    auto it = verts_.find(v);
    if (it == verts_.end())
      throw std::invalid_argument("unknown vertex id " + std::to_string(v));
    return it->second;
  }
  const VertexInfo& cinfo(VertexId v) const {
    auto it = verts_.find(v);
    if (it == verts_.end())
      throw std::invalid_argument("unknown vertex id " + std::to_string(v));
    return it->second;
  }

  std::map<VertexId, VertexInfo> verts_;
  int edge_count_ = 0;
};

struct Instance {
  DelegationGraph graph;
  Weight lambda = 1;  // cap on any sink's accumulated load
};

// One chosen out-edge per non-sink vertex.
struct DelegationSolution {
  std::map<VertexId, VertexId> choice;
};

struct SinkLoadReport {
  std::map<VertexId, Weight> load;  // per sink, includes its own weight
  Weight max_load = 0;
};

// Builds a graph from explicit vertex weights and an edge list. Duplicate
// edges collapse; duplicate vertex ids, unknown endpoints and nonpositive
// weights are rejected.
inline DelegationGraph build_graph(
    const std::vector<std::pair<VertexId, Weight>>& vertex_weights,
    const std::vector<std::pair<VertexId, VertexId>>& edges) {
  DelegationGraph g;
  for (const auto& [v, w] : vertex_weights) g.add_vertex(v, w);
  for (const auto& [u, v] : edges) {
    if (!g.has_vertex(u) || !g.has_vertex(v))
      throw std::invalid_argument("edge endpoint is not a declared vertex");
    g.add_edge(u, v);
  }
  return g;
}

inline DelegationGraph build_unit_graph(
    const std::vector<VertexId>& vertices,
    const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::vector<std::pair<VertexId, Weight>> vw;
  vw.reserve(vertices.size());
  for (VertexId v : vertices) vw.emplace_back(v, 1);
  return build_graph(vw, edges);
}

namespace detail {

// Resolves every assigned vertex to the sink its chain reaches, memoized.
// Vertices whose chain dangles at an unassigned non-sink map to nullopt.
// Throws CycleError if the chain revisits a vertex.
inline std::map<VertexId, std::optional<VertexId>> resolve_chains(
    const DelegationGraph& g, const std::map<VertexId, VertexId>& choice) {
  std::map<VertexId, std::optional<VertexId>> target;
  for (const auto& [start, _] : choice) {
    if (target.count(start)) continue;
    std::vector<VertexId> path;  // assigned vertices only
    std::set<VertexId> on_path;
    VertexId cur = start;
    std::optional<VertexId> result;
    for (;;) {
      auto memo = target.find(cur);
      if (memo != target.end()) {
        result = memo->second;
        break;
      }
      auto it = choice.find(cur);
      if (it == choice.end()) {
        // either a sink (chain resolved) or an unassigned non-sink (dangling)
        result = g.is_sink(cur) ? std::optional<VertexId>(cur) : std::nullopt;
        break;
      }
      if (!on_path.insert(cur).second) throw CycleError(cur);
      path.push_back(cur);
      cur = it->second;
    }
    for (VertexId v : path) target[v] = result;
  }
  return target;
}

// Loads over all sinks of g given a (possibly partial) choice map.
inline std::map<VertexId, Weight> partial_loads(
    const DelegationGraph& g, const std::map<VertexId, VertexId>& choice) {
  std::map<VertexId, Weight> load;
  for (VertexId t : g.sinks()) load[t] = g.weight(t);
  auto target = resolve_chains(g, choice);
  for (const auto& [v, t] : target)
    if (t) load[*t] += g.weight(v);
  return load;
}

}  // namespace detail

// Computes per-sink loads for a solution. Preconditions: choice covers
// exactly the non-sinks and every chosen pair is an edge (violations throw
// std::invalid_argument). A cycle among chosen edges throws CycleError.
inline SinkLoadReport sink_loads(const DelegationGraph& g,
                                 const DelegationSolution& sol) {
  for (VertexId v : g.non_sinks())
    if (!sol.choice.count(v))
      throw std::invalid_argument("solution misses non-sink " +
                                  std::to_string(v));
  for (const auto& [v, w] : sol.choice) {
    if (!g.has_vertex(v) || g.is_sink(v))
      throw std::invalid_argument("solution assigns non-delegating vertex " +
                                  std::to_string(v));
    if (!g.has_edge(v, w))
      throw std::invalid_argument("chosen pair is not an edge: " +
                                  std::to_string(v) + "->" + std::to_string(w));
  }
  SinkLoadReport report;
  report.load = detail::partial_loads(g, sol.choice);
  for (const auto& [_, l] : report.load)
    report.max_load = std::max(report.max_load, l);
  return report;
}

struct Violation {
  enum class Kind {
    UncoveredVertex,        // non-sink without an assignment
    UnexpectedAssignment,   // assignment for a sink or unknown vertex
    MissingEdge,            // chosen pair is not an edge
    Cycle,                  // chain never reaches a sink
    SinkOverload,           // sink load exceeds lambda
  };
  Kind kind;
  VertexId vertex;
  Weight load = 0;  // set for SinkOverload
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks a solution against an instance: full coverage of the non-sinks,
// edge validity, acyclicity of the chosen edges, and the load cap. Never
// throws; all problems are reported as violations.
inline ValidationReport validate(const Instance& inst,
                                 const DelegationSolution& sol) {
  const DelegationGraph& g = inst.graph;
  ValidationReport report;
  auto add = [&](Violation::Kind k, VertexId v, Weight load,
                 const std::string& msg) {
    report.violations.push_back({k, v, load, msg});
  };

  for (VertexId v : g.non_sinks())
    if (!sol.choice.count(v))
      add(Violation::Kind::UncoveredVertex, v, 0,
          "non-sink " + std::to_string(v) + " has no chosen delegation");
  std::map<VertexId, VertexId> usable;
  for (const auto& [v, w] : sol.choice) {
    if (!g.has_vertex(v) || g.is_sink(v)) {
      add(Violation::Kind::UnexpectedAssignment, v, 0,
          "vertex " + std::to_string(v) + " must not delegate");
    } else if (!g.has_edge(v, w)) {
      add(Violation::Kind::MissingEdge, v, 0,
          "chosen pair " + std::to_string(v) + "->" + std::to_string(w) +
              " is not an edge");
    } else {
      usable.emplace(v, w);
    }
  }
  if (!report.ok()) return report;

  std::map<VertexId, std::optional<VertexId>> target;
  try {
    target = detail::resolve_chains(g, usable);
  } catch (const CycleError& e) {
    add(Violation::Kind::Cycle, e.vertex, 0,
        "chosen edges cycle through vertex " + std::to_string(e.vertex));
    return report;
  }
  for (const auto& [v, t] : target)
    if (!t)
      add(Violation::Kind::Cycle, v, 0,
          "vertex " + std::to_string(v) + " never reaches a sink");
  if (!report.ok()) return report;

  std::map<VertexId, Weight> load = detail::partial_loads(g, usable);
  for (const auto& [t, l] : load)
    if (l > inst.lambda)
      add(Violation::Kind::SinkOverload, t, l,
          "sink " + std::to_string(t) + " carries " + std::to_string(l) +
              " > " + std::to_string(inst.lambda));
  return report;
}

}  // namespace rd
