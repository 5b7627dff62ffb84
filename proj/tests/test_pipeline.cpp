#include <vector>

#include "cliquecolor/constructions.hpp"
#include "cliquecolor/graph.hpp"
#include "cliquecolor/mozhan.hpp"
#include "cliquecolor/pipeline.hpp"
#include "doctest.h"

using namespace cliquecolor;

namespace {

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, 5 + i);
  }
  return g;
}

}  // namespace

TEST_CASE("trivial and low-degree graphs") {
  Outcome empty = color_or_clique(Graph(0));
  REQUIRE(empty.kind == OutcomeKind::coloring);
  CHECK(empty.coloring->palette == 0);

  // an edgeless graph cannot be colored with max_degree - 1 = -1 colors, so
  // the dichotomy reports the true maximum clique: a single vertex
  Outcome e5 = color_or_clique(edgeless_graph(5));
  REQUIRE(e5.kind == OutcomeKind::clique);
  CHECK(e5.clique->vertices.size() == 1);

  Outcome c7 = color_or_clique(cycle_graph(7));
  REQUIRE(c7.kind == OutcomeKind::clique);
  CHECK(verify_clique(cycle_graph(7), *c7.clique));
  CHECK(c7.clique->vertices.size() == 2);

  Outcome c4 = color_or_clique(cycle_graph(4));
  REQUIRE(c4.kind == OutcomeKind::clique);
  CHECK(c4.clique->vertices.size() == 2);
}

TEST_CASE("an easy coloring short-circuits everything else") {
  Graph star(6);
  for (int v = 1; v < 6; ++v) star.add_edge(0, v);
  Outcome out = color_or_clique(star);
  REQUIRE(out.kind == OutcomeKind::coloring);
  CHECK(verify_coloring(star, *out.coloring));
  CHECK(out.coloring->palette <= 4);
}

TEST_CASE("chromatic number above the degree: exact maximum cliques") {
  Outcome k5 = color_or_clique(complete_graph(5));
  REQUIRE(k5.kind == OutcomeKind::clique);
  CHECK(verify_clique(complete_graph(5), *k5.clique));
  CHECK(k5.clique->vertices.size() == 5);
}

TEST_CASE("critical core with smaller degree: clique mapped back to the input") {
  Graph p = petersen();
  Outcome out = color_or_clique(p);
  REQUIRE(out.kind == OutcomeKind::clique);
  CHECK(verify_clique(p, *out.clique));
  CHECK(out.clique->vertices.size() == 2);
}

TEST_CASE("five-chromatic fixture lands on its true maximum clique") {
  Graph o5 = construct_o5();
  Outcome out = color_or_clique(o5);
  REQUIRE(out.kind == OutcomeKind::clique);
  CHECK(verify_clique(o5, *out.clique));
  CHECK(out.clique->vertices.size() == 4);
}

TEST_CASE("engine regime: the triangle-ring fixture certifies a clique") {
  Graph bk8 = construct_bk8();

  Outcome t1 = color_or_clique(bk8, EngineMode::theorem1);
  REQUIRE(t1.kind == OutcomeKind::clique);
  CHECK(verify_clique(bk8, *t1.clique));
  CHECK(static_cast<int>(t1.clique->vertices.size()) >= 4);  // delta - 4

  Outcome t2 = color_or_clique(bk8, EngineMode::theorem2);
  REQUIRE(t2.kind == OutcomeKind::clique);
  CHECK(verify_clique(bk8, *t2.clique));
  CHECK(static_cast<int>(t2.clique->vertices.size()) >= 3);  // delta - 5
}

TEST_CASE("high-degree round graph is exactly (delta - 1)-colorable") {
  Graph lex = lex_product_cycle_clique(5, 5);
  REQUIRE(lex.max_degree() == 14);
  Outcome out = color_or_clique(lex);
  REQUIRE(out.kind == OutcomeKind::coloring);
  CHECK(verify_coloring(lex, *out.coloring));
  CHECK(out.coloring->palette <= 13);
}

TEST_CASE("large complete graph exits through the greedy clique gate") {
  Graph k17 = complete_graph(17);
  Outcome out = color_or_clique(k17);
  REQUIRE(out.kind == OutcomeKind::clique);
  CHECK(verify_clique(k17, *out.clique));
  CHECK(out.clique->vertices.size() == 17);
}

TEST_CASE("outcomes are deterministic") {
  Graph bk8 = construct_bk8();
  Outcome a = color_or_clique(bk8);
  Outcome b = color_or_clique(bk8);
  CHECK(a.kind == b.kind);
  CHECK(a.clique->vertices == b.clique->vertices);
}
