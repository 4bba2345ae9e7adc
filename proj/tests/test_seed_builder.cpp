#include <catch2/catch_amalgamated.hpp>

#include "backbone/instances.hpp"
#include "backbone/oracle.hpp"
#include "backbone/seed_builder.hpp"
#include "brute_oracles.hpp"
#include "graph_fixtures.hpp"

using namespace backbone;
using namespace fixtures;

namespace {

bool m_fold_dominating(const Graph& g, const NodeSet& d, int m) {
  for (NodeId v : g.nodes()) {
    if (d.contains(v)) continue;
    if (static_cast<int>(neighbors_in(g, v, d).size()) < m) return false;
  }
  return true;
}

bool subset_of(const NodeSet& a, const NodeSet& b) {
  for (NodeId v : a) {
    if (!b.contains(v)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("greedy multicover on named graphs") {
  REQUIRE(greedy_m_fold_ds(complete_graph(5), 3) == NodeSet{1, 2, 3});
  REQUIRE(greedy_m_fold_ds(star_graph(4), 1) == NodeSet{0});
  NodeSet d = greedy_m_fold_ds(cycle_graph(6), 2);
  REQUIRE(m_fold_dominating(cycle_graph(6), d, 2));
}

TEST_CASE("greedy multicover rejects undominatable nodes by name") {
  REQUIRE_THROWS_WITH(greedy_m_fold_ds(cycle_graph(6), 3),
                      Catch::Matchers::ContainsSubstring("node 1"));
  REQUIRE_THROWS_AS(greedy_m_fold_ds(cycle_graph(6), 0), input_error);
}

TEST_CASE("connect_to_cds joins components along shortest paths") {
  // Already connected: unchanged.
  REQUIRE(connect_to_cds(complete_graph(5), NodeSet{1, 2, 3}, 1) == NodeSet{1, 2, 3});
  // Two antipodal nodes of C6 connect through one arc.
  REQUIRE(connect_to_cds(cycle_graph(6), NodeSet{1, 4}, 1) == NodeSet{1, 2, 3, 4});
}

TEST_CASE("biconnect eliminates cut vertices") {
  REQUIRE(biconnect(complete_graph(5), NodeSet{1, 2, 3}, 3) == NodeSet{1, 2, 3});
  // A path inside C6 can only become 2-connected by closing the full cycle.
  REQUIRE(biconnect(cycle_graph(6), NodeSet{1, 2, 3, 4}, 1) == NodeSet{1, 2, 3, 4, 5, 6});
  REQUIRE_THROWS_AS(biconnect(cycle_graph(6), NodeSet{1, 4}, 1), input_error);
}

TEST_CASE("compute_2m_cds composes the stages into a verified (2,m)-CDS") {
  auto k5 = compute_2m_cds(complete_graph(5), 3);
  REQUIRE(k5.c0 == NodeSet{1, 2, 3});
  REQUIRE(k5.method_name == "greedy-stages");
  REQUIRE_FALSE(k5.claimed_alpha.has_value());

  auto k4 = compute_2m_cds(complete_graph(4), 3);
  REQUIRE(k4.c0.size() == 3);
  REQUIRE(induced_subgraph(complete_graph(4), k4.c0).edge_count() == 3);

  // K_{3,3} admits no 4-node (2,3)-CDS: a 4-node set either induces a star
  // (not 2-connected) or leaves a node with only two covered neighbors. The
  // optimum has 5 nodes and the greedy stages reach it.
  Graph k33 = complete_bipartite(3, 3);
  auto opt2 = brute_min_kmcds(k33, 2, 3, 6);
  REQUIRE(opt2.has_value());
  REQUIRE(opt2->size() == 5);
  auto seed = compute_2m_cds(k33, 3);
  REQUIRE(seed.c0 == NodeSet{1, 2, 3, 4, 5});
  REQUIRE(verify_kmcds(k33, seed.c0, 2, 3).is_valid);

  REQUIRE_THROWS_AS(compute_2m_cds(cycle_graph(6), 3), input_error);
  REQUIRE_THROWS_AS(compute_2m_cds(complete_graph(5), 2), input_error);
}

TEST_CASE("seed outputs verify and stages only add nodes") {
  auto rng = seeded_rng(88);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 8 + static_cast<int>(below(rng, 9));
    int m = 3 + static_cast<int>(below(rng, 2));
    Graph g = gen_random_3connected(n, 0.45, 4000 + trial);
    if (g.min_degree() < m) continue;
    NodeSet d = greedy_m_fold_ds(g, m);
    NodeSet joined = connect_to_cds(g, d, m);
    NodeSet c0 = biconnect(g, joined, m);
    REQUIRE(subset_of(d, joined));
    REQUIRE(subset_of(joined, c0));
    REQUIRE(m_fold_dominating(g, d, m));
    REQUIRE(verify_kmcds(g, c0, 2, m).is_valid);
    REQUIRE(compute_2m_cds(g, m).c0 == c0);
  }
}

TEST_CASE("supersets of a (2,m)-CDS stay valid") {
  auto rng = seeded_rng(89);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = gen_random_3connected(9 + static_cast<int>(below(rng, 6)), 0.4, 6000 + trial);
    auto seed = compute_2m_cds(g, 3);
    NodeSet grown = seed.c0;
    for (NodeId v : g.nodes()) {
      if (!grown.contains(v) && unit_real(rng) < 0.4) grown.insert(v);
    }
    REQUIRE(verify_kmcds(g, grown, 2, 3).is_valid);
  }
}

TEST_CASE("seed builders are pluggable by name") {
  Graph k5 = complete_graph(5);
  REQUIRE(build_seed(k5, 3).c0 == NodeSet{1, 2, 3});
  REQUIRE(build_seed(k5, 3, "greedy-stages").method_name == "greedy-stages");
  REQUIRE_THROWS_AS(build_seed(k5, 3, "no-such-builder"), input_error);

  register_seed_builder("whole-graph", [](const Graph& g, int) {
    return BaseCdsResult{g.node_set(), "whole-graph", std::nullopt};
  });
  REQUIRE(build_seed(k5, 3, "whole-graph").c0.size() == 5);
  seed_builder_registry().erase("whole-graph");
}
