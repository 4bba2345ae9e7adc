#include <catch2/catch_amalgamated.hpp>

#include "backbone/graph.hpp"
#include "backbone/instances.hpp"
#include "graph_fixtures.hpp"

using namespace backbone;
using namespace fixtures;

TEST_CASE("graph construction keeps the simple-graph invariants") {
  Graph g;
  g.add_node(3);
  g.add_node(1);
  g.add_node(1);  // duplicate insert is a no-op
  g.add_node(2);
  REQUIRE(g.nodes() == std::vector<NodeId>{1, 2, 3});
  g.add_edge(3, 1);
  g.add_edge(1, 2);
  REQUIRE(g.edge_count() == 2);
  REQUIRE(g.has_edge(1, 3));
  REQUIRE(g.has_edge(3, 1));
  REQUIRE_THROWS_AS(g.add_edge(1, 1), input_error);
  REQUIRE_THROWS_AS(g.add_edge(1, 2), input_error);
  REQUIRE_THROWS_AS(g.add_edge(1, 9), input_error);
  REQUIRE_THROWS_AS(g.add_node(-1), input_error);

  int degree_sum = 0;
  for (NodeId v : g.nodes()) degree_sum += g.degree(v);
  REQUIRE(degree_sum == 2 * g.edge_count());
}

TEST_CASE("induced subgraph of a complete graph restricts to a clique") {
  Graph t = induced_subgraph(complete_graph(5), NodeSet{1, 2, 3});
  REQUIRE(t.nodes() == std::vector<NodeId>{1, 2, 3});
  REQUIRE(t.edge_count() == 3);
}

TEST_CASE("induced subgraph on an independent set of a cycle is edgeless") {
  Graph h = induced_subgraph(cycle_graph(6), NodeSet{1, 3, 5});
  REQUIRE(h.node_count() == 3);
  REQUIRE(h.edge_count() == 0);
}

TEST_CASE("induced subgraph of the Petersen outer cycle is C5") {
  Graph h = induced_subgraph(petersen_graph(), NodeSet{0, 1, 2, 3, 4});
  REQUIRE(h.node_count() == 5);
  REQUIRE(h.edge_count() == 5);
  // Explicit edge list of the outer cycle.
  for (int i = 0; i < 5; ++i) REQUIRE(h.has_edge(i, (i + 1) % 5));
  REQUIRE_FALSE(h.has_edge(0, 2));
  REQUIRE_FALSE(h.has_edge(1, 3));
}

TEST_CASE("induced subgraph rejects unknown node ids") {
  REQUIRE_THROWS_AS(induced_subgraph(cycle_graph(4), NodeSet{1, 9}), input_error);
}

TEST_CASE("induced subgraph is idempotent") {
  auto rng = seeded_rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_graph(rng, 4 + static_cast<int>(below(rng, 6)), 0.5);
    NodeSet c;
    for (NodeId v : g.nodes()) {
      if (unit_real(rng) < 0.6) c.insert(v);
    }
    Graph once = induced_subgraph(g, c);
    REQUIRE(induced_subgraph(once, c) == once);
  }
}

TEST_CASE("adjacency symmetry holds after construction and parsing") {
  auto check_symmetric = [](const Graph& g) {
    for (NodeId v : g.nodes()) {
      for (NodeId w : g.neighbors(v)) {
        REQUIRE(g.has_edge(w, v));
      }
    }
  };
  auto rng = seeded_rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(rng, 8, 0.4);
    check_symmetric(g);
  }
  check_symmetric(parse_graph("p 4 3\ne 1 2\ne 2 3\ne 3 4\n"));
}

TEST_CASE("neighbors_in intersects the neighborhood with the set") {
  REQUIRE(neighbors_in(complete_graph(5), 5, NodeSet{1, 2, 3}) == NodeSet{1, 2, 3});
  REQUIRE(neighbors_in(cycle_graph(6), 1, NodeSet{2, 4}) == NodeSet{2});
  REQUIRE(neighbors_in(star_graph(4), 1, NodeSet{0, 2}) == NodeSet{0});
  REQUIRE_THROWS_AS(neighbors_in(cycle_graph(4), 99, NodeSet{1}), input_error);
}

TEST_CASE("node set operations") {
  NodeSet a{5, 1, 3, 3};
  REQUIRE(a.ids() == std::vector<NodeId>{1, 3, 5});
  REQUIRE(a.contains(3));
  REQUIRE_FALSE(a.contains(2));
  a.insert(2);
  a.insert(2);
  REQUIRE(a.ids() == std::vector<NodeId>{1, 2, 3, 5});
  REQUIRE(a.united(NodeSet{4, 5}) == NodeSet{1, 2, 3, 4, 5});
  REQUIRE(a.minus(NodeSet{1, 5}) == NodeSet{2, 3});
  REQUIRE(a.intersect(NodeSet{2, 5, 9}) == NodeSet{2, 5});
  REQUIRE(NodeSet{1, 2} < NodeSet{1, 3});
  REQUIRE(NodeSet{1, 2} < NodeSet{1, 2, 3});
  REQUIRE_THROWS_AS(NodePair(4, 4), input_error);
  REQUIRE(NodePair(7, 2).u == 2);
  REQUIRE(NodePair(7, 2).v == 7);
}
