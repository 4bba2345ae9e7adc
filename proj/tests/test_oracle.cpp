#include <catch2/catch_amalgamated.hpp>

#include "backbone/instances.hpp"
#include "backbone/oracle.hpp"
#include "brute_oracles.hpp"
#include "graph_fixtures.hpp"

using namespace backbone;
using namespace fixtures;

TEST_CASE("verify_kmcds on named instances") {
  auto ok = verify_kmcds(complete_graph(5), NodeSet{1, 2, 3, 4}, 3, 3);
  REQUIRE(ok.is_valid);
  REQUIRE(ok.connectivity_ok);
  REQUIRE(ok.failed_domination.empty());
  REQUIRE(ok.k == 3);
  REQUIRE(ok.m == 3);

  auto path_set = verify_kmcds(cycle_graph(6), NodeSet{1, 2, 3}, 2, 1);
  REQUIRE_FALSE(path_set.is_valid);
  REQUIRE_FALSE(path_set.connectivity_ok);

  auto rim = verify_kmcds(complete_bipartite(3, 3), NodeSet{1, 2, 4, 5}, 3, 3);
  REQUIRE_FALSE(rim.is_valid);
  REQUIRE_FALSE(rim.connectivity_ok);
  REQUIRE(rim.failed_domination.size() == 2);
  REQUIRE(rim.failed_domination[0].node == 3);
  REQUIRE(rim.failed_domination[0].have == 2);
  REQUIRE(rim.failed_domination[0].need == 3);
  REQUIRE(rim.failed_domination[1].node == 6);

  REQUIRE_THROWS_AS(verify_kmcds(complete_graph(4), NodeSet{9}, 1, 1), input_error);
  REQUIRE_THROWS_AS(verify_kmcds(complete_graph(4), NodeSet{1}, 0, 1), input_error);
}

TEST_CASE("report flag is the conjunction of its parts") {
  auto rng = seeded_rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(rng, 7, 0.45);
    NodeSet c;
    for (NodeId v : g.nodes()) {
      if (unit_real(rng) < 0.5) c.insert(v);
    }
    if (c.empty()) continue;
    auto rep = verify_kmcds(g, c, 1 + static_cast<int>(below(rng, 3)), 1 + static_cast<int>(below(rng, 3)));
    REQUIRE(rep.is_valid == (rep.failed_domination.empty() && rep.connectivity_ok));
  }
}

TEST_CASE("the whole node set is valid exactly when the graph is k-connected") {
  auto rng = seeded_rng(32);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(below(rng, 7));
    Graph g = random_graph(rng, n, 0.5);
    for (int k = 1; k <= 3; ++k) {
      REQUIRE(verify_kmcds(g, g.node_set(), k, 1).is_valid == is_k_connected(g, k));
    }
  }
}

TEST_CASE("a single dominating node is a valid (1,m)-CDS") {
  Graph star = star_graph(6);
  REQUIRE(verify_kmcds(star, NodeSet{0}, 1, 1).is_valid);
  auto best = brute_min_kmcds(star, 1, 1, 7);
  REQUIRE(best.has_value());
  REQUIRE(*best == NodeSet{0});
}

TEST_CASE("brute oracle on named instances") {
  auto k5 = brute_min_kmcds(complete_graph(5), 3, 3, 5);
  REQUIRE(k5.has_value());
  REQUIRE(k5->size() == 4);
  REQUIRE(*k5 == NodeSet{1, 2, 3, 4});  // canonical: smallest lexicographic optimum

  auto k33 = brute_min_kmcds(complete_bipartite(3, 3), 3, 3, 6);
  REQUIRE(k33.has_value());
  REQUIRE(k33->size() == 6);

  // Nothing valid under a tight size cap.
  REQUIRE_FALSE(brute_min_kmcds(complete_graph(5), 3, 3, 3).has_value());
  // A 2-connected-only graph has no (3,m)-CDS at all.
  REQUIRE_FALSE(brute_min_kmcds(cycle_graph(8), 3, 1, 8).has_value());

  REQUIRE_THROWS_AS(brute_min_kmcds(path_graph(23), 1, 1, 5), input_error);
  REQUIRE_THROWS_AS(brute_min_kmcds(complete_graph(4), 3, 3, 9), input_error);
}

TEST_CASE("oracle equals unpruned double enumeration") {
  auto rng = seeded_rng(33);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 4 + static_cast<int>(below(rng, 7));  // 4..10
    Graph g = random_graph(rng, n, 0.35 + 0.4 * unit_real(rng));
    int k = 1 + static_cast<int>(below(rng, 3));
    int m = 1 + static_cast<int>(below(rng, 3));
    auto fast = brute_min_kmcds(g, k, m, n);
    auto full = brute::min_kmcds_full(g, k, m);
    INFO("trial=" << trial << " n=" << n << " k=" << k << " m=" << m);
    REQUIRE(fast.has_value() == full.has_value());
    if (fast) {
      REQUIRE(*fast == *full);
    }
  }
}

TEST_CASE("supersets of valid sets stay valid when m >= k") {
  auto rng = seeded_rng(34);
  int done = 0;
  for (int trial = 0; trial < 200 && done < 30; ++trial) {
    int n = 5 + static_cast<int>(below(rng, 5));
    Graph g = random_graph(rng, n, 0.55);
    int k = 1 + static_cast<int>(below(rng, 2));
    int m = k + static_cast<int>(below(rng, 2));
    auto best = brute_min_kmcds(g, k, m, n);
    if (!best) continue;
    NodeSet grown = *best;
    for (NodeId v : g.nodes()) {
      if (!grown.contains(v) && unit_real(rng) < 0.5) grown.insert(v);
    }
    REQUIRE(verify_kmcds(g, grown, k, m).is_valid);
    ++done;
  }
  REQUIRE(done == 30);
}

TEST_CASE("empirical ratio against the oracle") {
  auto r = empirical_ratio(complete_graph(5), 4, 3, 3);
  REQUIRE(r.opt == 4);
  REQUIRE(r.ratio == 1.0);
  auto r2 = empirical_ratio(complete_bipartite(3, 3), 6, 3, 3);
  REQUIRE(r2.opt == 6);
  REQUIRE(r2.ratio == 1.0);
  REQUIRE_THROWS_AS(empirical_ratio(cycle_graph(6), 6, 3, 3), input_error);
}
