#include <algorithm>
#include <sstream>
#include <vector>

#include "cliquecolor/constructions.hpp"
#include "cliquecolor/dimacs.hpp"
#include "cliquecolor/errors.hpp"
#include "cliquecolor/graph.hpp"
#include "doctest.h"

using namespace cliquecolor;

TEST_CASE("graph basics: edges, degrees, neighbors") {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(3, 4);

  CHECK(g.size() == 5);
  CHECK(g.edge_count() == 4);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 3));
  CHECK_FALSE(g.adjacent(2, 2));
  CHECK(g.degree(0) == 2);
  CHECK(g.degree(3) == 1);
  CHECK(g.max_degree() == 2);
  CHECK(g.min_degree() == 1);
  CHECK(g.neighbors(1) == std::vector<int>{0, 2});

  g.add_edge(0, 1);  // duplicate is a no-op
  CHECK(g.edge_count() == 4);
  g.remove_edge(0, 1);
  CHECK_FALSE(g.adjacent(0, 1));
  CHECK(g.edge_count() == 3);
}

TEST_CASE("graph rejects out-of-range vertices and loops") {
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(0, 3), contract_error);
  CHECK_THROWS_AS(g.add_edge(-1, 1), contract_error);
  CHECK_THROWS_AS(g.add_edge(2, 2), contract_error);
  CHECK_THROWS_AS((void)g.degree(5), contract_error);
}

TEST_CASE("components are sorted internally and by first vertex") {
  Graph g(7);
  g.add_edge(5, 6);
  g.add_edge(1, 3);
  g.add_edge(3, 2);

  std::vector<std::vector<int>> comps = components(g);
  REQUIRE(comps.size() == 4);
  CHECK(comps[0] == std::vector<int>{0});
  CHECK(comps[1] == std::vector<int>{1, 2, 3});
  CHECK(comps[2] == std::vector<int>{4});
  CHECK(comps[3] == std::vector<int>{5, 6});
}

TEST_CASE("components_within restricts to the given set") {
  Graph g(6);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(3, 4);

  std::vector<std::vector<int>> comps = components_within(g, {0, 2, 3, 4});
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<int>{0});  // 1 is outside, so 0-2 splits
  CHECK(comps[1] == std::vector<int>{2});
  CHECK(comps[2] == std::vector<int>{3, 4});
}

TEST_CASE("component_of_within includes the probe vertex itself") {
  Graph g(6);
  g.add_edge(0, 3);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  g.add_edge(1, 2);

  // probe 0 against the set {3,4,5}: 0 joins through its own edges
  CHECK(component_of_within(g, 0, {3, 4, 5}) == std::vector<int>{0, 3, 4, 5});
  // probe 1 against a set it has no edge into: just itself
  CHECK(component_of_within(g, 1, {3, 4, 5}) == std::vector<int>{1});
}

TEST_CASE("is_clique") {
  Graph g = complete_graph(5);
  CHECK(is_clique(g, {0, 1, 2, 3, 4}));
  CHECK(is_clique(g, {1, 3}));
  CHECK(is_clique(g, {2}));
  CHECK(is_clique(g, {}));
  g.remove_edge(1, 3);
  CHECK_FALSE(is_clique(g, {0, 1, 3}));
  CHECK(is_clique(g, {0, 2, 4}));
}

TEST_CASE("high_vertices and high_subgraph pick out maximum-degree vertices") {
  Graph g(5);  // star plus one extra edge: degrees 4,2,1,1,1
  for (int v = 1; v < 5; ++v) g.add_edge(0, v);
  g.add_edge(1, 2);
  CHECK(high_vertices(g) == std::vector<int>{0});

  Graph o5 = construct_o5();
  InducedSubgraph h = high_subgraph(o5);
  CHECK(h.graph.size() == 2);
  CHECK(h.graph.edge_count() == 0);
  for (int v : h.to_parent) CHECK(o5.degree(v) == o5.max_degree());
}

TEST_CASE("verify_coloring accepts proper colorings and rejects bad ones") {
  Graph c5 = cycle_graph(5);
  Coloring good{{0, 1, 0, 1, 2}, 3};
  CHECK(verify_coloring(c5, good));

  Coloring clash{{0, 1, 0, 1, 0}, 2};  // vertices 4 and 0 are adjacent
  CHECK_FALSE(verify_coloring(c5, clash));

  Coloring overflow{{0, 1, 0, 1, 2}, 2};  // color id outside the palette
  CHECK_FALSE(verify_coloring(c5, overflow));

  Coloring short_vec{{0, 1, 0}, 2};
  CHECK_FALSE(verify_coloring(c5, short_vec));

  Coloring negative{{0, 1, 0, 1, -1}, 3};
  CHECK_FALSE(verify_coloring(c5, negative));
}

TEST_CASE("verify_clique checks adjacency, range, duplicates, and high flag") {
  Graph g = complete_graph(4);
  CHECK(verify_clique(g, {{0, 1, 2, 3}, false}));
  CHECK(verify_clique(g, {{1, 2}, false}));
  CHECK_FALSE(verify_clique(g, {{}, false}));  // empty claims are rejected

  g.remove_edge(0, 2);
  CHECK_FALSE(verify_clique(g, {{0, 1, 2}, false}));
  CHECK_FALSE(verify_clique(g, {{0, 0, 1}, false}));
  CHECK_FALSE(verify_clique(g, {{0, 4}, false}));

  // high_only: every member must have maximum degree
  Graph h(4);  // triangle plus a pendant: degrees 3,2,2,1
  h.add_edge(0, 1);
  h.add_edge(0, 2);
  h.add_edge(1, 2);
  h.add_edge(0, 3);
  CHECK(verify_clique(h, {{0}, true}));
  CHECK_FALSE(verify_clique(h, {{0, 1}, true}));  // degree(1) = 2 < 3
  CHECK(verify_clique(h, {{0, 1}, false}));
}

TEST_CASE("induced_subgraph keeps the selected adjacency and parent map") {
  Graph g = cycle_graph(6);
  InducedSubgraph sub = induced_subgraph(g, {1, 2, 4});
  CHECK(sub.graph.size() == 3);
  CHECK(sub.to_parent == std::vector<int>{1, 2, 4});
  CHECK(sub.graph.adjacent(0, 1));       // 1-2 survives
  CHECK_FALSE(sub.graph.adjacent(0, 2)); // 1-4 was never an edge
  CHECK_FALSE(sub.graph.adjacent(1, 2)); // 2-4 was never an edge
}

TEST_CASE("join connects every cross pair and keeps both sides") {
  Graph j = join(complete_graph(2), edgeless_graph(3));
  CHECK(j.size() == 5);
  CHECK(j.adjacent(0, 1));
  for (int a = 0; a < 2; ++a)
    for (int b = 2; b < 5; ++b) CHECK(j.adjacent(a, b));
  CHECK_FALSE(j.adjacent(2, 3));
  CHECK_FALSE(j.adjacent(3, 4));
  CHECK(j.edge_count() == 1 + 6);
}

TEST_CASE("graph_hash is stable for equal graphs and sensitive to edits") {
  Graph a = cycle_graph(7);
  Graph b = cycle_graph(7);
  CHECK(graph_hash(a) == graph_hash(b));
  CHECK(graph_hash(a).size() == 16);  // 64-bit hash in hex

  b.add_edge(0, 3);
  CHECK(graph_hash(a) != graph_hash(b));

  // different vertex count, same (empty) edge set
  CHECK(graph_hash(edgeless_graph(4)) != graph_hash(edgeless_graph(5)));
}

TEST_CASE("dimacs round-trip preserves the graph") {
  Graph g = construct_bk8();
  Graph back = parse_dimacs_string(to_dimacs(g));
  CHECK(back == g);
  CHECK(graph_hash(back) == graph_hash(g));
}

TEST_CASE("dimacs parser accepts comments and blank lines") {
  const std::string text =
      "c sample instance\n"
      "\n"
      "p edge 4 3\n"
      "c interior comment\n"
      "e 1 2\n"
      "e 2 3\n"
      "e 3 4\n";
  Graph g = parse_dimacs_string(text);
  CHECK(g.size() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(2, 3));
  CHECK_FALSE(g.adjacent(0, 3));
}

TEST_CASE("dimacs parser reports malformed input with line numbers") {
  CHECK_THROWS_AS((void)parse_dimacs_string("e 1 2\n"), parse_error);  // no header
  CHECK_THROWS_AS((void)parse_dimacs_string("p edge 3 1\ne 1 9\n"), parse_error);
  CHECK_THROWS_AS((void)parse_dimacs_string("p edge 3 1\ne 2 2\n"), parse_error);
  CHECK_THROWS_AS((void)parse_dimacs_string("p edge -2 0\n"), parse_error);
  CHECK_THROWS_AS((void)parse_dimacs_string("p edge 3 1\nx 1 2\n"), parse_error);
  CHECK_THROWS_AS((void)parse_dimacs_string("p edge 3 2\ne 1 2\n"), parse_error);

  try {
    (void)parse_dimacs_string("p edge 3 1\nq 1 2\n");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("construction vocabulary") {
  CHECK(parse_construction("k5") == complete_graph(5));
  CHECK(parse_construction("c6") == cycle_graph(6));
  CHECK(parse_construction("e3") == edgeless_graph(3));
  CHECK(parse_construction("p4") == path_graph(4));
  CHECK(parse_construction("o5") == construct_o5());
  CHECK(parse_construction("bk8") == construct_bk8());
  CHECK(parse_construction("moser") == moser_spindle());
  CHECK(parse_construction("lex:5:5") == lex_product_cycle_clique(5, 5));
  CHECK(parse_construction("join:k4:e3") ==
        join(complete_graph(4), edgeless_graph(3)));
  CHECK_THROWS_AS((void)parse_construction("nosuchthing"), contract_error);
  CHECK_THROWS_AS((void)parse_construction("k-3"), contract_error);
  CHECK_THROWS_AS((void)parse_construction("lex:2:5"), contract_error);
}

TEST_CASE("fixture shapes: o5, bk8, moser spindle, lex product") {
  Graph o5 = construct_o5();
  CHECK(o5.size() == 9);
  CHECK(o5.edge_count() == 19);
  CHECK(o5.max_degree() == 5);

  Graph bk8 = construct_bk8();
  CHECK(bk8.size() == 15);
  CHECK(bk8.min_degree() == 8);
  CHECK(bk8.max_degree() == 8);

  Graph moser = moser_spindle();
  CHECK(moser.size() == 7);
  CHECK(moser.edge_count() == 11);
  CHECK(moser.max_degree() == 4);

  Graph lex = lex_product_cycle_clique(5, 5);
  CHECK(lex.size() == 25);
  CHECK(lex.max_degree() == 14);
  CHECK(lex.min_degree() == 14);
}
