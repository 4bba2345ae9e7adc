#pragma once

#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "backbone/connectivity.hpp"
#include "backbone/graph.hpp"
#include "backbone/oracle.hpp"

namespace backbone {

struct BaseCdsResult {
  NodeSet c0;
  std::string method_name;
  std::optional<double> claimed_alpha;  // empty for heuristics
};

// Greedy set-multicover: repeatedly add the node that removes the most
// residual deficiency, where an uncovered node v contributes
// max(0, m - |N(v) ∩ D|). Ties go to the smallest id.
inline NodeSet greedy_m_fold_ds(const Graph& g, int m) {
  if (m < 1) throw input_error("m must be at least 1");
  for (NodeId v : g.nodes()) {
    if (g.degree(v) < m) {
      throw input_error("node " + std::to_string(v) + " has degree " +
                        std::to_string(g.degree(v)) + " < m = " + std::to_string(m) +
                        "; no m-fold dominating set can cover it");
    }
  }
  const int n = g.node_count();
  std::vector<int> deficiency(n, m);
  std::vector<char> in_d(n, 0);
  long long total = static_cast<long long>(n) * m;
  NodeSet d;
  while (total > 0) {
    int best_gain = 0;
    NodeId best = -1;
    for (NodeId v : g.nodes()) {
      int iv = g.index_of(v);
      if (in_d[iv]) continue;
      int gain = deficiency[iv];
      for (NodeId w : g.neighbors(v)) {
        int iw = g.index_of(w);
        if (!in_d[iw] && deficiency[iw] > 0) ++gain;
      }
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    if (best < 0) throw internal_error("greedy multicover stalled with residual deficiency");
    int ib = g.index_of(best);
    in_d[ib] = 1;
    total -= deficiency[ib];
    deficiency[ib] = 0;
    for (NodeId w : g.neighbors(best)) {
      int iw = g.index_of(w);
      if (!in_d[iw] && deficiency[iw] > 0) {
        --deficiency[iw];
        --total;
      }
    }
    d.insert(best);
  }
  return d;
}

namespace detail {

struct BfsTree {
  std::vector<int> dist;
  std::vector<NodeId> parent;
};

// Deterministic multi-source BFS in g; `blocked` (if >= 0) is skipped
// entirely. Sources get distance 0; ties resolve by queue order, which is
// fixed because sources and adjacency lists are sorted.
inline BfsTree bfs_from(const Graph& g, const std::vector<NodeId>& sources, NodeId blocked) {
  BfsTree t;
  t.dist.assign(g.nodes().size(), -1);
  t.parent.assign(g.nodes().size(), -1);
  std::queue<NodeId> q;
  for (NodeId s : sources) {
    if (s == blocked) continue;
    t.dist[g.index_of(s)] = 0;
    q.push(s);
  }
  while (!q.empty()) {
    NodeId x = q.front();
    q.pop();
    for (NodeId y : g.neighbors(x)) {
      if (y == blocked) continue;
      int iy = g.index_of(y);
      if (t.dist[iy] < 0) {
        t.dist[iy] = t.dist[g.index_of(x)] + 1;
        t.parent[iy] = x;
        q.push(y);
      }
    }
  }
  return t;
}

// Closest node of `targets` (ties: smallest id), or -1 if none reachable.
inline NodeId closest_target(const Graph& g, const BfsTree& t, const NodeSet& targets) {
  NodeId best = -1;
  int best_dist = -1;
  for (NodeId v : targets) {
    int dv = t.dist[g.index_of(v)];
    if (dv < 0) continue;
    if (best < 0 || dv < best_dist) {
      best = v;
      best_dist = dv;
    }
  }
  return best;
}

// Interior of the tree path from a source down to `target` (endpoints excluded).
inline std::vector<NodeId> path_interior(const Graph& g, const BfsTree& t, NodeId target) {
  std::vector<NodeId> interior;
  NodeId x = t.parent[g.index_of(target)];
  while (x >= 0 && t.dist[g.index_of(x)] > 0) {
    interior.push_back(x);
    x = t.parent[g.index_of(x)];
  }
  return interior;
}

}  // namespace detail

// Connect the components of G[d] by repeatedly adding the interior of a
// shortest path from the first component to the nearest other component.
// Supersets of an m-fold dominating set stay m-fold dominating, so only
// connectivity needs repairing here.
inline NodeSet connect_to_cds(const Graph& g, const NodeSet& d, int /*m*/) {
  NodeSet c = d;
  while (true) {
    auto comps = connected_components(induced_subgraph(g, c));
    if (comps.size() <= 1) break;
    NodeSet first(comps[0]);
    detail::BfsTree t = detail::bfs_from(g, comps[0], -1);
    NodeId target = detail::closest_target(g, t, c.minus(first));
    if (target < 0) throw input_error("graph is not connected");
    for (NodeId v : detail::path_interior(g, t, target)) c.insert(v);
  }
  return c;
}

// Eliminate cut vertices of G[c]: while some w disconnects G[c], join two of
// the resulting components through a shortest path in G - w and absorb its
// interior. Each pass either merges blocks or grows c, so this terminates.
inline NodeSet biconnect(const Graph& g, const NodeSet& c_in, int /*m*/) {
  NodeSet c = c_in;
  if (!is_connected(induced_subgraph(g, c))) {
    throw input_error("biconnect requires a connected G[c]");
  }
  while (true) {
    Graph sub = induced_subgraph(g, c);
    if (c.size() >= 3 && is_k_connected(sub, 2)) break;
    NodeId cut = -1;
    std::vector<std::vector<NodeId>> parts;
    for (NodeId w : c) {
      NodeSet rest = c;
      rest = rest.minus(NodeSet{w});
      if (rest.size() < 2) continue;
      auto comps = connected_components(induced_subgraph(sub, rest));
      if (comps.size() >= 2) {
        cut = w;
        parts = std::move(comps);
        break;
      }
    }
    if (cut >= 0) {
      NodeSet first(parts[0]);
      detail::BfsTree t = detail::bfs_from(g, parts[0], cut);
      NodeSet others = c.minus(first);
      others = others.minus(NodeSet{cut});
      NodeId target = detail::closest_target(g, t, others);
      if (target < 0) throw input_error("graph is not 2-connected");
      for (NodeId v : detail::path_interior(g, t, target)) c.insert(v);
    } else {
      // G[c] is connected and cut-free but too small to be 2-connected
      // (at most two nodes). Grow it by the smallest outside neighbor.
      NodeId grow = -1;
      for (NodeId v : g.nodes()) {
        if (c.contains(v)) continue;
        if (!neighbors_in(g, v, c).empty()) {
          grow = v;
          break;
        }
      }
      if (grow < 0) throw input_error("graph is not 2-connected");
      c.insert(grow);
    }
  }
  return c;
}

// Stage composition: greedy m-fold dominating set, then connect it, then
// remove cut vertices. The result is re-verified as a (2,m)-CDS before it
// is returned; a failure here is a bug, not bad input.
inline BaseCdsResult compute_2m_cds(const Graph& g, int m) {
  if (m < 3) throw input_error("m must be at least 3");
  if (!is_k_connected(g, 3)) throw input_error("input graph is not 3-connected");
  NodeSet d = greedy_m_fold_ds(g, m);
  NodeSet connected = connect_to_cds(g, d, m);
  NodeSet c0 = biconnect(g, connected, m);
  if (!verify_kmcds(g, c0, 2, m).is_valid) {
    throw internal_error("seed builder produced an invalid (2,m)-CDS");
  }
  return BaseCdsResult{c0, "greedy-stages", std::nullopt};
}

// Seed construction is pluggable by name; "greedy-stages" is the built-in
// default. Registered builders must return a verified (2,m)-CDS.
using SeedBuilderFn = std::function<BaseCdsResult(const Graph&, int)>;

inline std::map<std::string, SeedBuilderFn>& seed_builder_registry() {
  static std::map<std::string, SeedBuilderFn> registry{
      {"greedy-stages", [](const Graph& g, int m) { return compute_2m_cds(g, m); }},
  };
  return registry;
}

inline void register_seed_builder(const std::string& name, SeedBuilderFn fn) {
  seed_builder_registry()[name] = std::move(fn);
}

inline BaseCdsResult build_seed(const Graph& g, int m,
                                const std::string& name = "greedy-stages") {
  auto& registry = seed_builder_registry();
  auto it = registry.find(name);
  if (it == registry.end()) throw input_error("unknown seed builder '" + name + "'");
  return it->second(g, m);
}

}  // namespace backbone
