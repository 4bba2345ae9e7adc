#pragma once

#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "backbone/brick_decomposition.hpp"
#include "backbone/connectivity.hpp"
#include "backbone/graph.hpp"
#include "backbone/oracle.hpp"
#include "backbone/seed_builder.hpp"

namespace backbone {

// One augmentation candidate: the interior X of a brick-bridge with at most
// two internal nodes. witness_ends are two nodes of C certifying the bridge:
// nonadjacent in G[C], not in a common T-brick, one adjacent to each end of
// the path through X.
struct Candidate {
  NodeSet x;
  NodePair witness_ends;
  int delta_f = 0;  // f(G[C ∪ X]) - f(G[C])

  // Greedy score -delta_f / |x|. Selection compares exactly via
  // cross-multiplication; this is for reporting.
  double ratio() const {
    return static_cast<double>(-delta_f) / static_cast<double>(x.size());
  }
};

struct IterationRecord {
  NodeSet chosen_x;
  int delta_f = 0;
  int f_after = 0;
  int num_candidates = 0;
};

struct RatioReport {
  std::optional<int> opt3;
  std::optional<int> opt2;
  std::optional<double> empirical_alpha;
  std::optional<double> empirical_ratio;
  std::optional<double> gamma_bound;
};

struct RunTrace {
  std::vector<IterationRecord> iterations;
  int f0 = 0;
  int c0_size = 0;
  int final_size = 0;
  RatioReport ratio_report;
};

struct SolveResult {
  NodeSet cds;
  RunTrace trace;
};

// Approximation guarantee as a function of the seed's ratio alpha.
inline double gamma_bound(double alpha) {
  if (alpha < 1.0) throw input_error("alpha must be at least 1");
  if (alpha < 4.0) return 3.0 * alpha + 2.0 * std::log(2.0);
  return alpha + 8.0 + 2.0 * std::log(2.0 * alpha - 6.0);
}

namespace detail {

// a strictly better than b under (max -delta/|x|, then min |x|, then
// lexicographically smallest x). Ratios compare by cross-multiplication.
inline bool candidate_beats(const Candidate& a, const Candidate& b) {
  long long lhs = static_cast<long long>(-a.delta_f) * static_cast<long long>(b.x.size());
  long long rhs = static_cast<long long>(-b.delta_f) * static_cast<long long>(a.x.size());
  if (lhs != rhs) return lhs > rhs;
  if (a.x.size() != b.x.size()) return a.x.size() < b.x.size();
  return a.x < b.x;
}

inline std::vector<Candidate> enumerate_candidates_impl(const Graph& g, const NodeSet& c,
                                                        const BrickDecomposition& dec) {
  // T-brick membership; a witness pair sharing a T-brick is not a bridge.
  std::map<NodeId, std::vector<int>> t_membership;
  for (std::size_t i = 0; i < dec.bricks.size(); ++i) {
    if (dec.bricks[i].kind != BrickKind::T) continue;
    for (NodeId v : dec.bricks[i].nodes) t_membership[v].push_back(static_cast<int>(i));
  }
  auto share_t_brick = [&](NodeId a, NodeId b) {
    auto ia = t_membership.find(a);
    auto ib = t_membership.find(b);
    if (ia == t_membership.end() || ib == t_membership.end()) return false;
    for (int x : ia->second) {
      for (int y : ib->second) {
        if (x == y) return true;
      }
    }
    return false;
  };
  auto valid_witness = [&](NodeId a, NodeId b) {
    return a != b && !g.has_edge(a, b) && !share_t_brick(a, b);
  };

  const int f_before = dec.potential;
  NodeSet outside = g.node_set().minus(c);
  std::vector<Candidate> out;

  auto push_candidate = [&](NodeSet x, NodePair witness) {
    Candidate cand;
    cand.delta_f = decompose(induced_subgraph(g, c.united(x))).potential - f_before;
    cand.x = std::move(x);
    cand.witness_ends = witness;
    out.push_back(std::move(cand));
  };

  // Single internal node: path a-v-b.
  for (NodeId v : outside) {
    NodeSet cn = neighbors_in(g, v, c);
    bool done = false;
    for (std::size_t i = 0; i + 1 < cn.size() && !done; ++i) {
      for (std::size_t j = i + 1; j < cn.size() && !done; ++j) {
        NodeId a = cn.ids()[i];
        NodeId b = cn.ids()[j];
        if (valid_witness(a, b)) {
          push_candidate(NodeSet{v}, NodePair(a, b));
          done = true;
        }
      }
    }
  }

  // Two adjacent internal nodes: path a-v1-v2-b. Scanning a in N(v1) ∩ C and
  // b in N(v2) ∩ C covers both path orientations, since the witness
  // conditions are symmetric.
  for (NodeId v1 : outside) {
    for (NodeId v2 : g.neighbors(v1)) {
      if (v2 <= v1 || !outside.contains(v2)) continue;
      NodeSet cn1 = neighbors_in(g, v1, c);
      NodeSet cn2 = neighbors_in(g, v2, c);
      bool done = false;
      for (NodeId a : cn1) {
        if (done) break;
        for (NodeId b : cn2) {
          if (valid_witness(a, b)) {
            push_candidate(NodeSet{v1, v2}, NodePair(a, b));
            done = true;
            break;
          }
        }
      }
    }
  }
  return out;
}

inline bool has_long_r_brick(const BrickDecomposition& dec) {
  for (const Brick& b : dec.bricks) {
    if (b.kind == BrickKind::R && b.nodes.size() >= 4) return true;
  }
  return false;
}

}  // namespace detail

// All brick-bridge interiors X with |X| <= 2: every outside node with a
// valid witness pair, and every adjacent outside pair with one witness end
// next to each. One candidate per distinct X, first valid witness recorded,
// delta_f priced by full redecomposition.
inline std::vector<Candidate> enumerate_candidates(const Graph& g, const NodeSet& c) {
  return detail::enumerate_candidates_impl(g, c, decompose(induced_subgraph(g, c)));
}

// Greedy potential-function growth of a (2,m)-CDS seed into a (3,m)-CDS.
//
// If G[C0] is a triangle, any outside node completes it to a K4 (every
// outside node sees all three triangle nodes because m >= 3) and we are
// done. Otherwise, while f(C) > 1, the candidate maximizing -delta_f/|X|
// is absorbed; ties prefer smaller |X|, then the lexicographically smallest
// X. Termination: every step decreases f by at least 1, and f(C) = 1 means
// G[C] is 3-connected or a triangle (the triangle case cannot appear here).
//
// The guarantees the greedy relies on are asserted every iteration and
// surface as internal_error if they ever fail; the final set is re-verified
// as a (3,m)-CDS before it is returned.
inline SolveResult solve_3m_cds(const Graph& g, int m, const BaseCdsResult& seed) {
  if (m < 3) throw input_error("m must be at least 3");
  if (!is_k_connected(g, 3)) throw input_error("input graph is not 3-connected");
  if (!verify_kmcds(g, seed.c0, 2, m).is_valid) {
    throw input_error("seed is not a (2,m)-CDS of the input graph");
  }

  SolveResult result;
  NodeSet& c = result.cds;
  c = seed.c0;
  RunTrace& trace = result.trace;
  trace.c0_size = static_cast<int>(c.size());

  Graph gc = induced_subgraph(g, c);
  if (c.size() == 3 && is_cycle_graph(gc)) {
    trace.f0 = 1;
    NodeSet outside = g.node_set().minus(c);
    if (outside.empty()) throw internal_error("3-connected graph has only three nodes");
    c.insert(outside.front());
    Graph k4 = induced_subgraph(g, c);
    if (k4.node_count() != 4 || k4.edge_count() != 6) {
      throw internal_error("triangle augmentation did not induce a K4");
    }
  } else {
    BrickDecomposition dec = decompose(gc);
    int f = dec.potential;
    trace.f0 = f;
    while (f > 1) {
      std::vector<Candidate> candidates = detail::enumerate_candidates_impl(g, c, dec);
      if (candidates.empty()) {
        throw internal_error("no brick-bridge candidate although f(C) > 1");
      }
      const Candidate* best = &candidates.front();
      for (const Candidate& cand : candidates) {
        if (detail::candidate_beats(cand, *best)) best = &cand;
      }
      const int xs = static_cast<int>(best->x.size());
      if (best->delta_f > -1) {
        throw internal_error("greedy step failed to decrease the potential");
      }
      if (2 * (-best->delta_f) < xs) {
        throw internal_error("greedy step ratio fell below 1/2");
      }
      if (detail::has_long_r_brick(dec) && !is_cycle_graph(gc) && (-best->delta_f) < xs) {
        throw internal_error("greedy step ratio fell below 1 despite a long R-brick");
      }

      c = c.united(best->x);
      gc = induced_subgraph(g, c);
      dec = decompose(gc);
      if (dec.potential != f + best->delta_f) {
        throw internal_error("recomputed potential disagrees with the candidate's delta");
      }
      if (!verify_kmcds(g, c, 2, m).is_valid) {
        throw internal_error("intermediate set lost the (2,m)-CDS property");
      }
      f = dec.potential;
      trace.iterations.push_back(
          {best->x, best->delta_f, f, static_cast<int>(candidates.size())});
      if (static_cast<int>(trace.iterations.size()) > trace.f0) {
        throw internal_error("iteration count exceeded f(C0)");
      }
    }
  }

  if (!verify_kmcds(g, c, 3, m).is_valid) {
    throw internal_error("result failed (3,m)-CDS verification");
  }
  trace.final_size = static_cast<int>(c.size());
  return result;
}

namespace detail {

inline std::string json_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

template <typename T>
inline std::string json_optional(const std::optional<T>& v) {
  if (!v) return "null";
  if constexpr (std::is_same_v<T, int>) {
    return std::to_string(*v);
  } else {
    return json_number(*v);
  }
}

inline std::string json_ids(const NodeSet& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.ids()[i]);
  }
  return out + "]";
}

}  // namespace detail

// JSON-lines trace: one header record, one record per iteration, one footer
// with the final size and the ratio report. An instance id, when given, is
// prepended to every record so traces from a whole benchmark can share one
// file.
inline std::string trace_to_jsonl(const RunTrace& trace, const std::string& instance_id = "") {
  std::string prefix;
  if (!instance_id.empty()) prefix = "{\"instance_id\":\"" + instance_id + "\",";
  else prefix = "{";

  std::string out = prefix + "\"f0\":" + std::to_string(trace.f0) +
                    ",\"c0_size\":" + std::to_string(trace.c0_size) + "}\n";
  for (const IterationRecord& it : trace.iterations) {
    out += prefix + "\"chosen_x\":" + detail::json_ids(it.chosen_x) +
           ",\"delta_f\":" + std::to_string(it.delta_f) +
           ",\"f_after\":" + std::to_string(it.f_after) +
           ",\"num_candidates\":" + std::to_string(it.num_candidates) + "}\n";
  }
  const RatioReport& r = trace.ratio_report;
  out += prefix + "\"final_size\":" + std::to_string(trace.final_size) +
         ",\"ratio_report\":{\"opt3\":" + detail::json_optional(r.opt3) +
         ",\"opt2\":" + detail::json_optional(r.opt2) +
         ",\"empirical_alpha\":" + detail::json_optional(r.empirical_alpha) +
         ",\"empirical_ratio\":" + detail::json_optional(r.empirical_ratio) +
         ",\"gamma_bound\":" + detail::json_optional(r.gamma_bound) + "}}\n";
  return out;
}

}  // namespace backbone
