#pragma once

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

#include "backbone/graph.hpp"

namespace backbone {

inline bool is_connected(const Graph& g);

namespace detail {

// Unit-capacity flow network used for Menger-style path counting.
// Arcs are stored flat; arc i and i^1 are a forward/reverse pair.
class FlowNetwork {
 public:
  explicit FlowNetwork(int num_nodes) : adj_(num_nodes) {}

  void add_arc(int from, int to) {
    adj_[from].push_back(static_cast<int>(head_.size()));
    head_.push_back(to);
    cap_.push_back(1);
    adj_[to].push_back(static_cast<int>(head_.size()));
    head_.push_back(from);
    cap_.push_back(0);
  }

  // Edmonds-Karp, stopping once `limit` units have been pushed.
  int max_flow(int source, int sink, int limit) {
    int flow = 0;
    std::vector<int> pred_arc(adj_.size());
    while (flow < limit) {
      std::fill(pred_arc.begin(), pred_arc.end(), -1);
      pred_arc[source] = -2;
      std::queue<int> q;
      q.push(source);
      while (!q.empty() && pred_arc[sink] == -1) {
        int x = q.front();
        q.pop();
        for (int a : adj_[x]) {
          int y = head_[a];
          if (cap_[a] > 0 && pred_arc[y] == -1) {
            pred_arc[y] = a;
            q.push(y);
          }
        }
      }
      if (pred_arc[sink] == -1) break;
      for (int yarc = pred_arc[sink]; yarc != -2;) {
        cap_[yarc] -= 1;
        cap_[yarc ^ 1] += 1;
        int x = head_[yarc ^ 1];
        yarc = pred_arc[x];
      }
      ++flow;
    }
    return flow;
  }

 private:
  std::vector<int> head_;
  std::vector<int> cap_;
  std::vector<std::vector<int>> adj_;
};

// Max internally disjoint u-v paths, computed in the node-split digraph:
// every node w becomes w_in -> w_out with capacity 1, every edge xy becomes
// x_out -> y_in and y_out -> x_in. A direct uv edge contributes exactly one
// path. `limit` caps the answer (pass n for the exact value).
inline int disjoint_paths(const Graph& g, NodeId u, NodeId v, int limit) {
  const int n = g.node_count();
  FlowNetwork net(2 * n);
  for (int i = 0; i < n; ++i) net.add_arc(2 * i, 2 * i + 1);
  for (NodeId x : g.nodes()) {
    int ix = g.index_of(x);
    for (NodeId y : g.neighbors(x)) {
      if (y > x) {
        int iy = g.index_of(y);
        net.add_arc(2 * ix + 1, 2 * iy);
        net.add_arc(2 * iy + 1, 2 * ix);
      }
    }
  }
  return net.max_flow(2 * g.index_of(u) + 1, 2 * g.index_of(v), limit);
}

inline void check_pair(const Graph& g, NodeId u, NodeId v) {
  if (u == v) throw input_error("local connectivity requires two distinct nodes");
  if (!g.has_node(u)) throw input_error("unknown node id " + std::to_string(u));
  if (!g.has_node(v)) throw input_error("unknown node id " + std::to_string(v));
}

inline bool at_least_k_connected(const Graph& g, int k) {
  const int n = g.node_count();
  if (n < k + 1) return false;
  if (k == 1) return is_connected(g);
  if (g.is_complete()) return true;
  // Whitney: for a non-complete graph the connectivity is attained on a
  // non-adjacent pair.
  for (NodeId u : g.nodes()) {
    for (NodeId v : g.nodes()) {
      if (v <= u || g.has_edge(u, v)) continue;
      if (disjoint_paths(g, u, v, k) < k) return false;
    }
  }
  return true;
}

}  // namespace detail

// Empty graph counts as disconnected; a single node is connected.
inline bool is_connected(const Graph& g) {
  if (g.empty()) return false;
  std::vector<char> seen(g.nodes().size(), 0);
  std::vector<NodeId> stack{g.nodes().front()};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    NodeId x = stack.back();
    stack.pop_back();
    for (NodeId y : g.neighbors(x)) {
      int iy = g.index_of(y);
      if (!seen[iy]) {
        seen[iy] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == g.nodes().size();
}

// Connected components as sorted node lists, ordered by smallest member.
inline std::vector<std::vector<NodeId>> connected_components(const Graph& g) {
  std::vector<std::vector<NodeId>> comps;
  std::vector<char> seen(g.nodes().size(), 0);
  for (NodeId start : g.nodes()) {
    if (seen[g.index_of(start)]) continue;
    std::vector<NodeId> comp;
    std::vector<NodeId> stack{start};
    seen[g.index_of(start)] = 1;
    while (!stack.empty()) {
      NodeId x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (NodeId y : g.neighbors(x)) {
        int iy = g.index_of(y);
        if (!seen[iy]) {
          seen[iy] = 1;
          stack.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

// Maximum number of internally disjoint u-v paths (local connectivity).
inline int local_connectivity(const Graph& g, NodeId u, NodeId v) {
  detail::check_pair(g, u, v);
  return detail::disjoint_paths(g, u, v, g.node_count());
}

// True iff p(u,v) >= k; stops the flow early once k paths are found.
inline bool local_connectivity_at_least(const Graph& g, NodeId u, NodeId v, int k) {
  detail::check_pair(g, u, v);
  return detail::disjoint_paths(g, u, v, k) >= k;
}

// k-connectivity. For k >= 2 this demands |V| >= k+1 and k disjoint paths
// between every non-adjacent pair (complete graphs have no such pair and
// qualify whenever |V| >= k+1). k = 1 reduces to plain connectivity on at
// least two nodes.
inline bool is_k_connected(const Graph& g, int k) {
  if (k < 1) throw input_error("connectivity order k must be at least 1");
  return detail::at_least_k_connected(g, k);
}

// True iff g is a single cycle on >= 3 nodes.
inline bool is_cycle_graph(const Graph& g) {
  if (g.node_count() < 3) return false;
  for (NodeId v : g.nodes()) {
    if (g.degree(v) != 2) return false;
  }
  return is_connected(g);
}

// The cyclic node order of a cycle graph, starting at the smallest id and
// moving toward its smaller neighbor.
inline std::vector<NodeId> cycle_order(const Graph& g) {
  if (!is_cycle_graph(g)) throw input_error("graph is not a cycle");
  std::vector<NodeId> order;
  order.reserve(g.nodes().size());
  NodeId start = g.nodes().front();
  NodeId prev = start;
  NodeId cur = g.neighbors(start).front();
  order.push_back(start);
  while (cur != start) {
    order.push_back(cur);
    const auto& nb = g.neighbors(cur);
    NodeId next = (nb[0] == prev) ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  return order;
}

}  // namespace backbone
