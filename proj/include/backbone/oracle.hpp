#pragma once

#include <optional>
#include <string>
#include <vector>

#include "backbone/connectivity.hpp"
#include "backbone/graph.hpp"

namespace backbone {

// Largest instance the exhaustive solver will accept. Roughly 4M subsets of
// cheap checks; anything bigger stops being a desk-scale tool.
inline constexpr int kOracleNodeCap = 22;

struct DominationFailure {
  NodeId node;
  int have;
  int need;
};

struct ValidityReport {
  bool is_valid = false;
  std::vector<DominationFailure> failed_domination;
  bool connectivity_ok = false;
  int k = 0;
  int m = 0;
};

// Checks both halves of the (k,m)-CDS definition: every node outside c has
// at least m neighbors inside c, and G[c] is k-connected. For k = 1 the
// connectivity half is plain connectedness, so a single dominating node is
// a valid (1,m)-CDS.
inline ValidityReport verify_kmcds(const Graph& g, const NodeSet& c, int k, int m) {
  if (k < 1 || m < 1) throw input_error("k and m must be at least 1");
  for (NodeId v : c) {
    if (!g.has_node(v)) throw input_error("unknown node id " + std::to_string(v));
  }
  ValidityReport report;
  report.k = k;
  report.m = m;
  for (NodeId v : g.nodes()) {
    if (c.contains(v)) continue;
    int have = static_cast<int>(neighbors_in(g, v, c).size());
    if (have < m) report.failed_domination.push_back({v, have, m});
  }
  Graph sub = induced_subgraph(g, c);
  report.connectivity_ok = (k == 1) ? is_connected(sub) : is_k_connected(sub, k);
  report.is_valid = report.failed_domination.empty() && report.connectivity_ok;
  return report;
}

namespace detail {

// Lexicographic combination enumeration over indices 0..n-1.
inline bool next_combination(std::vector<int>& idx, int n) {
  int s = static_cast<int>(idx.size());
  for (int i = s - 1; i >= 0; --i) {
    if (idx[i] < n - (s - i)) {
      ++idx[i];
      for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace detail

// Exhaustive minimum (k,m)-CDS: subsets are scanned in increasing size and
// lexicographic order, so the returned optimum is canonical. Subsets whose
// induced minimum degree is below k cannot be k-connected and are skipped.
inline std::optional<NodeSet> brute_min_kmcds(const Graph& g, int k, int m, int size_cap) {
  if (k < 1 || m < 1) throw input_error("k and m must be at least 1");
  const int n = g.node_count();
  if (n > kOracleNodeCap) {
    throw input_error("oracle refuses graphs with more than " +
                      std::to_string(kOracleNodeCap) + " nodes (got " +
                      std::to_string(n) + ")");
  }
  if (size_cap > n) throw input_error("size cap exceeds the number of nodes");
  const auto& all = g.nodes();
  for (int s = 1; s <= size_cap; ++s) {
    if (k >= 2 && s < k + 1) continue;
    std::vector<int> idx(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    do {
      NodeSet c;
      for (int i : idx) c.insert(all[i]);
      bool degree_ok = true;
      if (s >= 2) {
        for (NodeId v : c) {
          if (static_cast<int>(neighbors_in(g, v, c).size()) < std::min(k, s - 1)) {
            degree_ok = false;
            break;
          }
        }
      }
      if (!degree_ok) continue;
      bool dominated = true;
      for (NodeId v : all) {
        if (c.contains(v)) continue;
        if (static_cast<int>(neighbors_in(g, v, c).size()) < m) {
          dominated = false;
          break;
        }
      }
      if (!dominated) continue;
      if (verify_kmcds(g, c, k, m).is_valid) return c;
    } while (detail::next_combination(idx, n));
  }
  return std::nullopt;
}

struct RatioResult {
  int opt = 0;
  double ratio = 0.0;
};

inline RatioResult empirical_ratio(const Graph& g, int alg_size, int k, int m) {
  auto best = brute_min_kmcds(g, k, m, g.node_count());
  if (!best) {
    throw input_error("graph admits no (" + std::to_string(k) + "," +
                      std::to_string(m) + ")-CDS");
  }
  RatioResult r;
  r.opt = static_cast<int>(best->size());
  r.ratio = static_cast<double>(alg_size) / static_cast<double>(r.opt);
  return r;
}

}  // namespace backbone
