#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "backbone/errors.hpp"
#include "backbone/node_set.hpp"

namespace backbone {

// Simple undirected graph with stable node ids. Adjacency lists are kept
// sorted, so iteration order is deterministic everywhere. Instances are
// treated as immutable once built; all algorithms take them by const ref.
class Graph {
 public:
  Graph() = default;

  // Inserting an existing node is a no-op.
  void add_node(NodeId v) {
    if (v < 0) throw input_error("node ids must be non-negative, got " + std::to_string(v));
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), v);
    if (it != nodes_.end() && *it == v) return;
    auto pos = it - nodes_.begin();
    nodes_.insert(it, v);
    adj_.insert(adj_.begin() + pos, std::vector<NodeId>{});
  }

  void add_edge(NodeId u, NodeId v) {
    if (u == v) throw input_error("self-loop at node " + std::to_string(u));
    int iu = index_of(u);
    int iv = index_of(v);
    if (iu < 0) throw input_error("unknown node id " + std::to_string(u));
    if (iv < 0) throw input_error("unknown node id " + std::to_string(v));
    auto it = std::lower_bound(adj_[iu].begin(), adj_[iu].end(), v);
    if (it != adj_[iu].end() && *it == v) {
      throw input_error("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    adj_[iu].insert(it, v);
    auto jt = std::lower_bound(adj_[iv].begin(), adj_[iv].end(), u);
    adj_[iv].insert(jt, u);
    ++edge_count_;
  }

  bool has_node(NodeId v) const { return index_of(v) >= 0; }

  bool has_edge(NodeId u, NodeId v) const {
    int iu = index_of(u);
    if (iu < 0) return false;
    return std::binary_search(adj_[iu].begin(), adj_[iu].end(), v);
  }

  const std::vector<NodeId>& nodes() const { return nodes_; }

  const std::vector<NodeId>& neighbors(NodeId v) const {
    int iv = index_of(v);
    if (iv < 0) throw input_error("unknown node id " + std::to_string(v));
    return adj_[iv];
  }

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int edge_count() const { return edge_count_; }
  bool empty() const { return nodes_.empty(); }

  int degree(NodeId v) const { return static_cast<int>(neighbors(v).size()); }

  int max_degree() const {
    int best = 0;
    for (const auto& a : adj_) best = std::max(best, static_cast<int>(a.size()));
    return best;
  }

  int min_degree() const {
    if (adj_.empty()) return 0;
    int best = node_count();
    for (const auto& a : adj_) best = std::min(best, static_cast<int>(a.size()));
    return best;
  }

  bool is_complete() const {
    std::size_t n = nodes_.size();
    return edge_count_ == static_cast<int>(n * (n - 1) / 2);
  }

  NodeSet node_set() const { return NodeSet(nodes_); }

  // Dense position of v in sorted node order, or -1. Exposed because flow
  // and BFS routines relabel into [0, n) temporaries.
  int index_of(NodeId v) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), v);
    if (it == nodes_.end() || *it != v) return -1;
    return static_cast<int>(it - nodes_.begin());
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<NodeId> nodes_;             // sorted
  std::vector<std::vector<NodeId>> adj_;  // parallel to nodes_, each sorted
  int edge_count_ = 0;
};

// Subgraph induced by c: exactly the nodes of c and the edges of g inside c.
inline Graph induced_subgraph(const Graph& g, const NodeSet& c) {
  Graph h;
  for (NodeId v : c) {
    if (!g.has_node(v)) throw input_error("unknown node id " + std::to_string(v));
    h.add_node(v);
  }
  for (NodeId v : c) {
    for (NodeId w : g.neighbors(v)) {
      if (w > v && c.contains(w)) h.add_edge(v, w);
    }
  }
  return h;
}

// N_g(v) ∩ c.
inline NodeSet neighbors_in(const Graph& g, NodeId v, const NodeSet& c) {
  NodeSet out;
  for (NodeId w : g.neighbors(v)) {
    if (c.contains(w)) out.insert(w);
  }
  return out;
}

}  // namespace backbone
