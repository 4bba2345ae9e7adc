#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "backbone/connectivity.hpp"
#include "backbone/graph.hpp"
#include "backbone/rng.hpp"

namespace backbone {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

inline long long parse_int(std::string_view tok, int line_no) {
  long long val = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), val);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw input_error("line " + std::to_string(line_no) + ": expected an integer, got '" +
                      std::string(tok) + "'");
  }
  return val;
}

inline double parse_double(std::string_view tok, int line_no) {
  try {
    std::size_t used = 0;
    double val = std::stod(std::string(tok), &used);
    if (used != tok.size()) throw std::invalid_argument("trailing");
    return val;
  } catch (const std::exception&) {
    throw input_error("line " + std::to_string(line_no) + ": expected a number, got '" +
                      std::string(tok) + "'");
  }
}

template <typename Fn>
inline void for_each_line(std::string_view text, Fn&& fn) {
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    fn(text.substr(pos, end - pos), line_no);
    pos = end + 1;
    if (end == text.size()) break;
  }
}

inline std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

}  // namespace detail

// Coordinates are rounded to six decimals before any distance test so that
// instance files reproduce identically across platforms.
inline double round6(double x) { return std::round(x * 1e6) / 1e6; }

// --- graph files -----------------------------------------------------------
//
// DIMACS-like text: comments "c ...", one header "p <n> <m>" declaring nodes
// 1..n, then m edge lines "e <u> <v>".

inline Graph parse_graph(std::string_view text) {
  Graph g;
  bool have_header = false;
  long long declared_edges = 0;
  long long n = 0;
  detail::for_each_line(text, [&](std::string_view line, int line_no) {
    auto tokens = detail::split_ws(line);
    if (tokens.empty() || tokens[0] == "c") return;
    if (!have_header) {
      if (tokens[0] != "p" || tokens.size() != 3) {
        throw input_error("line " + std::to_string(line_no) +
                          ": expected header 'p <nodes> <edges>'");
      }
      n = detail::parse_int(tokens[1], line_no);
      declared_edges = detail::parse_int(tokens[2], line_no);
      if (n < 0 || declared_edges < 0) {
        throw input_error("line " + std::to_string(line_no) + ": negative count in header");
      }
      for (long long v = 1; v <= n; ++v) g.add_node(static_cast<NodeId>(v));
      have_header = true;
      return;
    }
    if (tokens[0] != "e" || tokens.size() != 3) {
      throw input_error("line " + std::to_string(line_no) + ": expected edge line 'e <u> <v>'");
    }
    long long u = detail::parse_int(tokens[1], line_no);
    long long v = detail::parse_int(tokens[2], line_no);
    if (u < 1 || u > n || v < 1 || v > n) {
      throw input_error("line " + std::to_string(line_no) + ": node id out of range 1.." +
                        std::to_string(n));
    }
    if (u == v) {
      throw input_error("line " + std::to_string(line_no) + ": self-loop at node " +
                        std::to_string(u));
    }
    if (g.has_edge(static_cast<NodeId>(u), static_cast<NodeId>(v))) {
      throw input_error("line " + std::to_string(line_no) + ": duplicate edge " +
                        std::to_string(u) + " " + std::to_string(v));
    }
    g.add_edge(static_cast<NodeId>(u), static_cast<NodeId>(v));
  });
  if (!have_header) throw input_error("missing header line 'p <nodes> <edges>'");
  if (g.edge_count() != declared_edges) {
    throw input_error("header declares " + std::to_string(declared_edges) + " edges, found " +
                      std::to_string(g.edge_count()));
  }
  return g;
}

// Canonical text form: nodes are renumbered 1..n by rank, edges emitted in
// lexicographic order, LF line endings. parse(write(g)) == g whenever g's
// ids already are 1..n.
inline std::string write_graph(const Graph& g) {
  std::string out = "p " + std::to_string(g.node_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (NodeId v : g.nodes()) {
    for (NodeId w : g.neighbors(v)) {
      if (w > v) {
        out += "e " + std::to_string(g.index_of(v) + 1) + " " +
               std::to_string(g.index_of(w) + 1) + "\n";
      }
    }
  }
  return out;
}

// --- unit disk instances ----------------------------------------------------
//
// Point files: header "u <n> <side> <radius>", then n lines "v <x> <y>".
// The graph is always derived from the points, never stored: nodes are
// 1..n in point order, and uv is an edge iff the Euclidean distance between
// the (rounded) points is at most the radius.

struct UdgPoint {
  double x = 0.0;
  double y = 0.0;
};

struct UdgInstance {
  std::vector<UdgPoint> points;
  double side = 0.0;
  double radius = 0.0;
  Graph graph;
  int attempts = 1;  // generation attempts consumed (1 when parsed)
};

inline Graph derive_udg_graph(const std::vector<UdgPoint>& points, double radius) {
  Graph g;
  const int n = static_cast<int>(points.size());
  for (int i = 1; i <= n; ++i) g.add_node(i);
  const double r2 = radius * radius;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double dx = points[i].x - points[j].x;
      double dy = points[i].y - points[j].y;
      if (dx * dx + dy * dy <= r2) g.add_edge(i + 1, j + 1);
    }
  }
  return g;
}

inline UdgInstance parse_udg(std::string_view text) {
  UdgInstance inst;
  bool have_header = false;
  long long n = 0;
  detail::for_each_line(text, [&](std::string_view line, int line_no) {
    auto tokens = detail::split_ws(line);
    if (tokens.empty() || tokens[0] == "c") return;
    if (!have_header) {
      if (tokens[0] != "u" || tokens.size() != 4) {
        throw input_error("line " + std::to_string(line_no) +
                          ": expected header 'u <n> <side> <radius>'");
      }
      n = detail::parse_int(tokens[1], line_no);
      inst.side = detail::parse_double(tokens[2], line_no);
      inst.radius = detail::parse_double(tokens[3], line_no);
      if (n < 0) throw input_error("line " + std::to_string(line_no) + ": negative point count");
      have_header = true;
      return;
    }
    if (tokens[0] != "v" || tokens.size() != 3) {
      throw input_error("line " + std::to_string(line_no) + ": expected point line 'v <x> <y>'");
    }
    if (static_cast<long long>(inst.points.size()) >= n) {
      throw input_error("line " + std::to_string(line_no) + ": more points than declared");
    }
    inst.points.push_back({round6(detail::parse_double(tokens[1], line_no)),
                           round6(detail::parse_double(tokens[2], line_no))});
  });
  if (!have_header) throw input_error("missing header line 'u <n> <side> <radius>'");
  if (static_cast<long long>(inst.points.size()) != n) {
    throw input_error("header declares " + std::to_string(n) + " points, found " +
                      std::to_string(inst.points.size()));
  }
  inst.graph = derive_udg_graph(inst.points, inst.radius);
  return inst;
}

inline std::string write_udg(const UdgInstance& inst) {
  std::string out = "u " + std::to_string(inst.points.size()) + " " +
                    detail::fixed6(inst.side) + " " + detail::fixed6(inst.radius) + "\n";
  for (const UdgPoint& p : inst.points) {
    out += "v " + detail::fixed6(p.x) + " " + detail::fixed6(p.y) + "\n";
  }
  return out;
}

// Either file kind, sniffed from the first non-comment line.
struct ParsedInstance {
  Graph graph;
  std::optional<UdgInstance> udg;
};

inline ParsedInstance parse_instance(std::string_view text) {
  std::string_view first_token;
  detail::for_each_line(text, [&](std::string_view line, int) {
    if (!first_token.empty()) return;
    auto tokens = detail::split_ws(line);
    if (tokens.empty() || tokens[0] == "c") return;
    first_token = tokens[0];
  });
  if (first_token == "p") return {parse_graph(text), std::nullopt};
  if (first_token == "u") {
    UdgInstance inst = parse_udg(text);
    Graph g = inst.graph;
    return {std::move(g), std::move(inst)};
  }
  throw input_error("unrecognized instance file: expected a 'p' or 'u' header");
}

// --- generators -------------------------------------------------------------

// Uniform points in a square, seeded and reproducible. When require_3conn is
// set the generator retries with sub-seeds seed, seed+1, ... until the
// derived graph is 3-connected, up to 1000 attempts.
inline UdgInstance gen_udg(int n, double side, double radius, std::uint64_t seed,
                           bool require_3conn) {
  if (n < 4) throw input_error("unit disk instances need at least 4 points");
  if (side <= 0) throw input_error("region side must be positive");
  if (radius < 0) throw input_error("radius must be non-negative");
  constexpr int kMaxAttempts = 1000;
  for (int attempt = 1; attempt <= kMaxAttempts; ++attempt) {
    std::mt19937_64 rng = seeded_rng(seed + static_cast<std::uint64_t>(attempt - 1));
    UdgInstance inst;
    inst.side = side;
    inst.radius = radius;
    inst.points.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      double x = round6(unit_real(rng) * side);
      double y = round6(unit_real(rng) * side);
      inst.points.push_back({x, y});
    }
    inst.graph = derive_udg_graph(inst.points, radius);
    inst.attempts = attempt;
    if (!require_3conn || is_k_connected(inst.graph, 3)) return inst;
  }
  throw generation_error(
      "no 3-connected unit disk graph after 1000 attempts (n=" + std::to_string(n) +
      ", side=" + detail::fixed6(side) + ", radius=" + detail::fixed6(radius) +
      "); increase the radius or shrink the region");
}

// Random 3-connected graph on nodes 0..n-1: start from K4, attach each new
// node to three distinct existing nodes (which preserves 3-connectivity),
// then add every remaining pair independently with probability p. The
// result is certified before it is returned.
inline Graph gen_random_3connected(int n, double extra_edge_prob, std::uint64_t seed) {
  if (n < 4) throw input_error("random 3-connected graphs need at least 4 nodes");
  if (!(extra_edge_prob >= 0.0 && extra_edge_prob <= 1.0)) {
    throw input_error("edge probability must lie in [0,1]");
  }
  std::mt19937_64 rng = seeded_rng(seed);
  Graph g;
  for (NodeId v = 0; v < 4; ++v) g.add_node(v);
  for (NodeId u = 0; u < 4; ++u) {
    for (NodeId v = u + 1; v < 4; ++v) g.add_edge(u, v);
  }
  for (NodeId i = 4; i < n; ++i) {
    std::vector<NodeId> targets;
    while (targets.size() < 3) {
      NodeId t = static_cast<NodeId>(below(rng, static_cast<std::uint64_t>(i)));
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) {
        targets.push_back(t);
      }
    }
    std::sort(targets.begin(), targets.end());
    g.add_node(i);
    for (NodeId t : targets) g.add_edge(i, t);
  }
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      if (unit_real(rng) < extra_edge_prob) g.add_edge(u, v);
    }
  }
  if (!is_k_connected(g, 3)) {
    throw internal_error("random 3-connected generator produced a non-3-connected graph");
  }
  return g;
}

}  // namespace backbone
