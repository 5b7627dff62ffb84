#include <optional>
#include <vector>

#include "cliquecolor/constructions.hpp"
#include "cliquecolor/errors.hpp"
#include "cliquecolor/graph.hpp"
#include "cliquecolor/oracles.hpp"
#include "cliquecolor/transversal.hpp"
#include "doctest.h"

using namespace cliquecolor;

namespace {

void add_clique(Graph& g, int lo, int hi) {
  for (int v = lo; v <= hi; ++v)
    for (int u = v + 1; u <= hi; ++u) g.add_edge(v, u);
}

// Two parts of two vertices each with a perfect matching across them: the
// textbook instance whose transversal must avoid both matching edges.
TransversalInstance matched_pairs() {
  TransversalInstance t;
  t.aux_graph = Graph(4);
  t.aux_graph.add_edge(0, 2);
  t.aux_graph.add_edge(1, 3);
  t.to_parent = {0, 1, 2, 3};
  t.parts = {{0, 1}, {2, 3}};
  t.s = 1;
  t.lopsided = true;  // degree 1 <= min(s, |K|-s) = 1
  return t;
}

}  // namespace

TEST_CASE("independent transversal on the matched-pairs instance") {
  TransversalInstance t = matched_pairs();
  std::optional<std::vector<int>> found = find_independent_transversal(t);
  REQUIRE(found.has_value());
  CHECK(*found == std::vector<int>{0, 3});

  std::optional<std::vector<int>> listed = enumerate_transversal(t);
  REQUIRE(listed.has_value());
  CHECK(*listed == *found);
}

TEST_CASE("transversal search respects non-identity parent maps") {
  TransversalInstance t = matched_pairs();
  t.to_parent = {10, 11, 12, 13};
  std::optional<std::vector<int>> found = find_independent_transversal(t);
  REQUIRE(found.has_value());
  CHECK(*found == std::vector<int>{10, 13});
}

TEST_CASE("exhausted search: nullopt normally, invariant_error under the guarantee") {
  TransversalInstance t;
  t.aux_graph = Graph(2);
  t.aux_graph.add_edge(0, 1);
  t.to_parent = {0, 1};
  t.parts = {{0}, {1}};
  t.s = 1;

  t.lopsided = false;
  CHECK_FALSE(find_independent_transversal(t).has_value());
  CHECK_FALSE(enumerate_transversal(t).has_value());

  t.lopsided = true;  // falsely claimed guarantee must be loud, not absent
  CHECK_THROWS_AS((void)find_independent_transversal(t), invariant_error);
}

TEST_CASE("di_partition groups disjoint maximum cliques") {
  Graph g(13);  // two K4s, five pendants pumping vertex 0 to degree 8
  add_clique(g, 0, 3);
  add_clique(g, 4, 7);
  for (int p = 8; p <= 12; ++p) g.add_edge(0, p);
  REQUIRE(g.max_degree() == 8);

  std::vector<std::vector<int>> cliques = maximum_cliques(g);
  REQUIRE(cliques.size() == 2);

  DiPartition d = di_partition(g, cliques);
  REQUIRE(d.groups.size() == 2);
  CHECK(d.groups[0].clique == std::vector<int>{0, 1, 2, 3});
  CHECK(d.groups[0].x == -1);
  CHECK(d.groups[1].clique == std::vector<int>{4, 5, 6, 7});
  CHECK(d.groups[1].x == -1);

  TransversalInstance t = build_transversal_instance(g, d, 2);
  CHECK(t.parts.size() == 2);
  CHECK(t.aux_graph.edge_count() == 0);  // intra-part edges are stripped
  CHECK(t.lopsided);
  std::optional<std::vector<int>> found = find_independent_transversal(t);
  REQUIRE(found.has_value());
  CHECK(*found == std::vector<int>{0, 4});
}

TEST_CASE("di_partition collapses an overlapping pair to clique plus x") {
  Graph g(9);  // K4 plus an attached vertex 4 missing only vertex 3
  add_clique(g, 0, 3);
  for (int v : {0, 1, 2}) g.add_edge(4, v);
  for (int p = 5; p <= 8; ++p) g.add_edge(0, p);
  REQUIRE(g.max_degree() == 8);

  std::vector<std::vector<int>> cliques = maximum_cliques(g);
  REQUIRE(cliques.size() == 2);

  DiPartition d = di_partition(g, cliques);
  REQUIRE(d.groups.size() == 1);
  CHECK(d.groups[0].clique == std::vector<int>{0, 1, 2, 3});
  CHECK(d.groups[0].x == 4);

  // the part shrinks to the common neighborhood of x
  TransversalInstance t = build_transversal_instance(g, d, 2);
  REQUIRE(t.parts.size() == 1);
  CHECK(t.parts[0].size() == 3);
  std::optional<std::vector<int>> found = find_independent_transversal(t);
  REQUIRE(found.has_value());
  CHECK(*found == std::vector<int>{0});
}

TEST_CASE("di_partition rejects a clique meeting two others") {
  Graph g(10);  // K4 with two attached vertices on different triples
  add_clique(g, 0, 3);
  for (int v : {0, 1, 2}) g.add_edge(4, v);
  for (int v : {1, 2, 3}) g.add_edge(5, v);
  for (int p = 6; p <= 9; ++p) g.add_edge(0, p);
  REQUIRE(g.max_degree() == 8);

  std::vector<std::vector<int>> cliques = maximum_cliques(g);
  REQUIRE(cliques.size() == 3);
  CHECK_THROWS_AS((void)di_partition(g, cliques), structural_error);
}

TEST_CASE("di_partition rejects overlaps of the wrong size") {
  Graph g(11);  // two K4s glued along an edge
  add_clique(g, 0, 3);
  add_clique(g, 2, 5);
  for (int p = 6; p <= 10; ++p) g.add_edge(0, p);
  REQUIRE(g.max_degree() == 8);

  std::vector<std::vector<int>> cliques = maximum_cliques(g);
  REQUIRE(cliques.size() == 2);
  CHECK_THROWS_AS((void)di_partition(g, cliques), structural_error);
}

TEST_CASE("di_partition rejects cliques of the wrong size outright") {
  Graph g(13);
  add_clique(g, 0, 3);
  add_clique(g, 4, 7);
  for (int p = 8; p <= 12; ++p) g.add_edge(0, p);
  CHECK_THROWS_AS((void)di_partition(g, {{0, 1, 2}}), contract_error);
}

TEST_CASE("hitting_set on a two-clique graph in the guaranteed regime") {
  Graph g(17);  // two K6s, pendants lifting vertex 0 to degree 10
  add_clique(g, 0, 5);
  add_clique(g, 6, 11);
  for (int p = 12; p <= 16; ++p) g.add_edge(0, p);
  REQUIRE(g.max_degree() == 10);
  REQUIRE(static_cast<int>(max_clique_exact(g).size()) == 6);

  std::optional<std::vector<int>> hit = hitting_set(g);
  REQUIRE(hit.has_value());
  CHECK(*hit == std::vector<int>{0, 6});
}

TEST_CASE("hitting_set outside the guaranteed regime") {
  // omega != delta - 4: absent by contract
  CHECK_FALSE(hitting_set(complete_graph(5)).has_value());
  Graph k5_tail(6);
  add_clique(k5_tail, 0, 4);
  k5_tail.add_edge(0, 5);
  CHECK_FALSE(hitting_set(k5_tail).has_value());

  // no vertices, no cliques to hit
  std::optional<std::vector<int>> empty = hitting_set(Graph(0));
  REQUIRE(empty.has_value());
  CHECK(empty->empty());
}

TEST_CASE("hitting_set surfaces structural surprises instead of guessing") {
  Graph g(10);  // the two-attachment shape from the di_partition test
  add_clique(g, 0, 3);
  for (int v : {0, 1, 2}) g.add_edge(4, v);
  for (int v : {1, 2, 3}) g.add_edge(5, v);
  for (int p = 6; p <= 9; ++p) g.add_edge(0, p);
  CHECK_THROWS_AS((void)hitting_set(g), structural_error);
}
