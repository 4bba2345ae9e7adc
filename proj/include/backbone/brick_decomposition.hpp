#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "backbone/connectivity.hpp"
#include "backbone/graph.hpp"
#include "backbone/rng.hpp"

namespace backbone {

// A graph plus the virtual edges accumulated while splitting at separators.
// Virtual edges take part in every connectivity and cycle test made during
// the decomposition (the "union graph") but never leak back into the input.
struct MarkedGraph {
  Graph base;
  std::vector<NodePair> virtual_edges;  // sorted, disjoint from real edges

  MarkedGraph() = default;

  explicit MarkedGraph(Graph base_graph, std::vector<NodePair> virtuals = {})
      : base(std::move(base_graph)), virtual_edges(std::move(virtuals)) {
    std::sort(virtual_edges.begin(), virtual_edges.end());
    virtual_edges.erase(std::unique(virtual_edges.begin(), virtual_edges.end()),
                        virtual_edges.end());
    for (const NodePair& e : virtual_edges) {
      if (!base.has_node(e.u) || !base.has_node(e.v)) {
        throw input_error("virtual edge endpoint is not a node of the graph");
      }
      if (base.has_edge(e.u, e.v)) {
        throw input_error("virtual edge duplicates a real edge");
      }
    }
  }

  bool has_union_edge(NodeId a, NodeId b) const {
    if (base.has_edge(a, b)) return true;
    NodePair p(a, b);
    return std::binary_search(virtual_edges.begin(), virtual_edges.end(), p);
  }

  // Real and virtual edges merged into one simple graph.
  Graph union_graph() const {
    Graph u = base;
    for (const NodePair& e : virtual_edges) u.add_edge(e.u, e.v);
    return u;
  }
};

enum class BrickKind { T, R };

// Terminal piece of the decomposition. With its virtual edges it is either
// 3-connected (T) or a cycle (R); nothing else survives the splitting.
struct Brick {
  NodeSet nodes;
  BrickKind kind{BrickKind::T};
  std::vector<NodeId> cycle_witness;  // cyclic order, R-bricks only
  MarkedGraph piece;                  // the terminal marked component itself
};

struct BrickDecomposition {
  std::vector<Brick> bricks;
  std::vector<NodePair> separators;             // good separators used, in split order
  std::vector<std::pair<int, int>> tree_edges;  // (brick index, separator index)
  int potential = 0;
};

enum class SeparatorPolicy { Lexicographic, Randomized };

struct DecomposeOptions {
  SeparatorPolicy policy = SeparatorPolicy::Lexicographic;
  std::uint64_t seed = 0;  // only read when policy is Randomized
  // Re-verify 2-connectivity of every piece and the cycle/3-connected
  // classification of every brick. Off by default: the checks cost a full
  // set of flow computations per piece and the solver calls decompose in
  // its inner loop.
  bool validate = false;
};

namespace detail {

inline bool pair_separates(const Graph& g, NodeId a, NodeId b) {
  const int n = g.node_count();
  if (n - 2 <= 1) return false;
  NodeId start = -1;
  for (NodeId v : g.nodes()) {
    if (v != a && v != b) {
      start = v;
      break;
    }
  }
  std::vector<char> seen(g.nodes().size(), 0);
  seen[g.index_of(start)] = 1;
  std::vector<NodeId> stack{start};
  int reached = 1;
  while (!stack.empty()) {
    NodeId x = stack.back();
    stack.pop_back();
    for (NodeId y : g.neighbors(x)) {
      if (y == a || y == b) continue;
      int iy = g.index_of(y);
      if (!seen[iy]) {
        seen[iy] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached < n - 2;
}

inline bool is_good_separator(const Graph& u, NodeId a, NodeId b) {
  return pair_separates(u, a, b) && local_connectivity_at_least(u, a, b, 3);
}

// Good-separator search on the union graph. Assumes the caller already
// knows the graph is 2-connected; decompose guarantees that for every piece.
inline std::optional<NodePair> find_good_pair(const Graph& u, SeparatorPolicy policy,
                                              std::mt19937_64& rng) {
  const auto& nodes = u.nodes();
  if (policy == SeparatorPolicy::Lexicographic) {
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
      for (std::size_t j = i + 1; j < nodes.size(); ++j) {
        if (is_good_separator(u, nodes[i], nodes[j])) {
          return NodePair(nodes[i], nodes[j]);
        }
      }
    }
    return std::nullopt;
  }
  std::vector<NodePair> good;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (is_good_separator(u, nodes[i], nodes[j])) {
        good.emplace_back(nodes[i], nodes[j]);
      }
    }
  }
  if (good.empty()) return std::nullopt;
  return good[below(rng, good.size())];
}

}  // namespace detail

// Lexicographically smallest pair {u,v} whose removal disconnects the union
// graph while u and v stay joined by at least three internally disjoint
// paths. Such pairs are exactly the places where the decomposition splits.
inline std::optional<NodePair> find_good_two_separator(const MarkedGraph& h) {
  Graph u = h.union_graph();
  if (u.node_count() < 3 || !is_k_connected(u, 2)) {
    throw input_error("good-separator search requires a 2-connected graph on at least 3 nodes");
  }
  std::mt19937_64 unused = seeded_rng(0);
  return detail::find_good_pair(u, SeparatorPolicy::Lexicographic, unused);
}

// Split h at the 2-separator s. Each connected component K of h - s yields
// one marked component on K ∪ s that inherits all real and virtual edges
// and gains s as a virtual edge unless s is already an edge of the union.
inline std::vector<MarkedGraph> marked_s_components(const MarkedGraph& h, NodePair s) {
  Graph u = h.union_graph();
  if (!u.has_node(s.u) || !u.has_node(s.v)) {
    throw input_error("separator nodes are not in the graph");
  }
  if (!detail::pair_separates(u, s.u, s.v)) {
    throw input_error("pair {" + std::to_string(s.u) + "," + std::to_string(s.v) +
                      "} is not a 2-separator");
  }
  NodeSet rest = u.node_set();
  NodeSet sep_set{s.u, s.v};
  Graph reduced = induced_subgraph(u, rest.minus(sep_set));

  std::vector<MarkedGraph> pieces;
  for (const auto& comp : connected_components(reduced)) {
    NodeSet piece_nodes(comp);
    piece_nodes.insert(s.u);
    piece_nodes.insert(s.v);
    Graph base = induced_subgraph(h.base, piece_nodes);
    std::vector<NodePair> virtuals;
    for (const NodePair& e : h.virtual_edges) {
      if (piece_nodes.contains(e.u) && piece_nodes.contains(e.v)) virtuals.push_back(e);
    }
    if (!h.has_union_edge(s.u, s.v)) virtuals.push_back(s);
    pieces.emplace_back(std::move(base), std::move(virtuals));
  }
  return pieces;
}

namespace detail {

inline void validate_brick(const Brick& b) {
  Graph u = b.piece.union_graph();
  if (!is_k_connected(u, 2)) throw internal_error("brick is not 2-connected");
  bool cyc = is_cycle_graph(u);
  bool tri = is_k_connected(u, 3);
  if (b.kind == BrickKind::R && (!cyc || tri || b.nodes.size() < 3)) {
    throw internal_error("R-brick is not a cycle");
  }
  if (b.kind == BrickKind::T && (!tri || cyc || b.nodes.size() < 4)) {
    throw internal_error("T-brick is not 3-connected");
  }
}

inline void check_brick_tree(const BrickDecomposition& d) {
  std::size_t total = d.bricks.size() + d.separators.size();
  if (d.tree_edges.size() != total - 1) {
    throw internal_error("brick-tree is not a tree (edge count mismatch)");
  }
  std::vector<int> brick_count(d.separators.size(), 0);
  for (auto [bi, si] : d.tree_edges) {
    (void)bi;
    ++brick_count[static_cast<std::size_t>(si)];
  }
  for (int count : brick_count) {
    if (count < 2) throw internal_error("separator is contained in fewer than two bricks");
  }
  // Connectivity over the bipartite brick/separator graph.
  std::vector<std::vector<std::size_t>> adj(total);
  for (auto [bi, si] : d.tree_edges) {
    std::size_t s = d.bricks.size() + static_cast<std::size_t>(si);
    adj[static_cast<std::size_t>(bi)].push_back(s);
    adj[s].push_back(static_cast<std::size_t>(bi));
  }
  std::vector<char> seen(total, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t x = stack.back();
    stack.pop_back();
    for (std::size_t y : adj[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  if (reached != total) throw internal_error("brick-tree is not connected");
}

}  // namespace detail

inline int potential(const BrickDecomposition& d) {
  int f = 0;
  for (const Brick& b : d.bricks) {
    f += (b.kind == BrickKind::T) ? 1 : 2 * static_cast<int>(b.nodes.size()) - 5;
  }
  return f;
}

// Tutte-style decomposition of a 2-connected graph: split at good
// 2-separators until every piece is brickless, i.e. a cycle (R) or
// 3-connected (T). Returns the bricks, the separators used, the brick-tree
// and the potential f = |T| + sum over R of (2|R| - 5).
//
// The outcome (brick kind/size multiset and f) does not depend on which good
// separator is chosen at each step; the Randomized policy exists so tests
// can check exactly that.
inline BrickDecomposition decompose(const Graph& g, const DecomposeOptions& opts = {}) {
  if (g.node_count() < 3 || !is_k_connected(g, 2)) {
    throw input_error("decomposition requires a 2-connected graph on at least 3 nodes");
  }
  std::mt19937_64 rng = seeded_rng(opts.seed);
  BrickDecomposition out;
  std::vector<MarkedGraph> work;
  work.emplace_back(g);
  std::size_t next = 0;
  while (next < work.size()) {
    MarkedGraph piece = std::move(work[next++]);
    Graph u = piece.union_graph();
    auto sep = detail::find_good_pair(u, opts.policy, rng);
    if (!sep) {
      Brick b;
      b.nodes = u.node_set();
      if (is_cycle_graph(u)) {
        b.kind = BrickKind::R;
        b.cycle_witness = cycle_order(u);
      } else {
        b.kind = BrickKind::T;
      }
      b.piece = std::move(piece);
      if (opts.validate) detail::validate_brick(b);
      out.bricks.push_back(std::move(b));
      continue;
    }
    for (const NodePair& used : out.separators) {
      if (used == *sep) throw internal_error("good separator reused across splits");
    }
    out.separators.push_back(*sep);
    auto comps = marked_s_components(piece, *sep);
    // Every split hands each of the l components both separator nodes, so
    // the node counts must add up to |piece| + 2(l-1).
    int total_nodes = 0;
    for (const MarkedGraph& comp : comps) total_nodes += comp.base.node_count();
    int expected = u.node_count() + 2 * (static_cast<int>(comps.size()) - 1);
    if (comps.size() < 2 || total_nodes != expected) {
      throw internal_error("split node-count ledger violated");
    }
    if (opts.validate) {
      for (const MarkedGraph& comp : comps) {
        if (!is_k_connected(comp.union_graph(), 2)) {
          throw internal_error("marked component is not 2-connected");
        }
      }
    }
    for (MarkedGraph& comp : comps) work.push_back(std::move(comp));
  }

  for (std::size_t j = 0; j < out.separators.size(); ++j) {
    const NodePair& s = out.separators[j];
    for (std::size_t i = 0; i < out.bricks.size(); ++i) {
      if (out.bricks[i].nodes.contains(s.u) && out.bricks[i].nodes.contains(s.v)) {
        out.tree_edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  detail::check_brick_tree(out);
  out.potential = potential(out);
  if (out.potential < 1) throw internal_error("potential fell below 1");
  return out;
}

// f(G[c ∪ x]) - f(G[c]), by full recomputation of both decompositions.
// Recomputing prices every byproduct bridge correctly without incremental
// bookkeeping; both induced graphs must be 2-connected.
inline int delta_f(const Graph& g, const NodeSet& c, const NodeSet& x) {
  for (NodeId v : x) {
    if (c.contains(v)) {
      throw input_error("delta_f requires x to be disjoint from c");
    }
  }
  if (x.empty()) return 0;
  int before = decompose(induced_subgraph(g, c)).potential;
  int after = decompose(induced_subgraph(g, c.united(x))).potential;
  return after - before;
}

// Debug dump: {"bricks":[{"kind":..,"nodes":[..]}],"separators":[[u,v]..],
// "tree_edges":[[brick,sep]..],"f":N}.
inline std::string decomposition_to_json(const BrickDecomposition& d) {
  std::string s = "{\"bricks\":[";
  for (std::size_t i = 0; i < d.bricks.size(); ++i) {
    const Brick& b = d.bricks[i];
    if (i) s += ',';
    s += "{\"kind\":\"";
    s += (b.kind == BrickKind::T) ? 'T' : 'R';
    s += "\",\"nodes\":[";
    for (std::size_t j = 0; j < b.nodes.size(); ++j) {
      if (j) s += ',';
      s += std::to_string(b.nodes.ids()[j]);
    }
    s += "]}";
  }
  s += "],\"separators\":[";
  for (std::size_t j = 0; j < d.separators.size(); ++j) {
    if (j) s += ',';
    s += '[' + std::to_string(d.separators[j].u) + ',' + std::to_string(d.separators[j].v) + ']';
  }
  s += "],\"tree_edges\":[";
  for (std::size_t j = 0; j < d.tree_edges.size(); ++j) {
    if (j) s += ',';
    s += '[' + std::to_string(d.tree_edges[j].first) + ',' +
         std::to_string(d.tree_edges[j].second) + ']';
  }
  s += "],\"f\":" + std::to_string(d.potential) + "}";
  return s;
}

}  // namespace backbone
