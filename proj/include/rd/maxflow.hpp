#pragma once

// Dinic max-flow over an exact value type (all comparisons and updates use
// the flow type's own arithmetic; nothing here rounds).

#include <queue>
#include <vector>

namespace rd {

template <typename Flow>
class MaxFlowNetwork {
 public:
  explicit MaxFlowNetwork(int n) : adj_(n) {}

  int add_edge(int from, int to, Flow capacity) {
    int id = (int)edges_.size();
    edges_.push_back({from, to, capacity, Flow(0)});
    edges_.push_back({to, from, Flow(0), Flow(0)});
    adj_[from].push_back(id);
    adj_[to].push_back(id + 1);
    return id;
  }

  Flow flow_on(int edge_id) const { return edges_[edge_id].flow; }

  Flow max_flow(int source, int sink) {
    Flow total(0);
    while (bfs(source, sink)) {
      ptr_.assign(adj_.size(), 0);
      for (;;) {
        Flow pushed = dfs(source, sink, Flow(-1));
        if (!(pushed > Flow(0))) break;
        total += pushed;
      }
    }
    return total;
  }

 private:
  struct Edge {
    int from, to;
    Flow capacity;
    Flow flow;
    Flow residual() const { return capacity - flow; }
  };

  bool bfs(int source, int sink) {
    level_.assign(adj_.size(), -1);
    std::queue<int> q;
    q.push(source);
    level_[source] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int id : adj_[v]) {
        const Edge& e = edges_[id];
        if (level_[e.to] == -1 && e.residual() > Flow(0)) {
          level_[e.to] = level_[v] + 1;
          q.push(e.to);
        }
      }
    }
    return level_[sink] != -1;
  }

  // limit < 0 means unconstrained
  Flow dfs(int v, int sink, Flow limit) {
    if (v == sink) return limit;
    for (std::size_t& i = ptr_[v]; i < adj_[v].size(); ++i) {
      int id = adj_[v][i];
      Edge& e = edges_[id];
      if (level_[e.to] != level_[v] + 1 || !(e.residual() > Flow(0))) continue;
      Flow cap = e.residual();
      Flow pass = (limit < Flow(0) || cap < limit) ? cap : limit;
      Flow pushed = dfs(e.to, sink, pass);
      if (pushed > Flow(0)) {
        e.flow += pushed;
        edges_[id ^ 1].flow -= pushed;
        return pushed;
      }
    }
    return Flow(0);
  }

  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> ptr_;
};

}  // namespace rd
