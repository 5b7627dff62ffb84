#include <vector>

#include "cliquecolor/constructions.hpp"
#include "cliquecolor/errors.hpp"
#include "cliquecolor/graph.hpp"
#include "cliquecolor/small_graphs.hpp"
#include "doctest.h"

using namespace cliquecolor;

namespace {

// C5 with vertices renumbered by the permutation 0->3, 1->0, 2->4, 3->1, 4->2
Graph relabeled_c5() {
  Graph g(5);
  g.add_edge(3, 0);
  g.add_edge(0, 4);
  g.add_edge(4, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  return g;
}

}  // namespace

TEST_CASE("canonical_key is invariant under relabeling") {
  CHECK(canonical_key(cycle_graph(5)) == canonical_key(relabeled_c5()));

  Graph p4a = path_graph(4);
  Graph p4b(4);  // the same path written 2-0-3-1
  p4b.add_edge(2, 0);
  p4b.add_edge(0, 3);
  p4b.add_edge(3, 1);
  CHECK(canonical_key(p4a) == canonical_key(p4b));

  CHECK(canonical_key(cycle_graph(4)) != canonical_key(path_graph(4)));
  CHECK(canonical_key(complete_graph(3)) != canonical_key(path_graph(3)));
}

TEST_CASE("canonical_key refuses graphs beyond the permutation budget") {
  CHECK_THROWS_AS((void)canonical_key(edgeless_graph(9)), refusal_error);
}

TEST_CASE("are_isomorphic") {
  CHECK(are_isomorphic(cycle_graph(5), relabeled_c5()));
  CHECK(are_isomorphic(edgeless_graph(3), edgeless_graph(3)));
  CHECK_FALSE(are_isomorphic(cycle_graph(4), path_graph(4)));
  CHECK_FALSE(are_isomorphic(cycle_graph(4), cycle_graph(5)));

  Graph claw(4);
  claw.add_edge(0, 1);
  claw.add_edge(0, 2);
  claw.add_edge(0, 3);
  Graph co_claw = complete_graph(3);  // different vertex count entirely
  CHECK_FALSE(are_isomorphic(claw, co_claw));
}

TEST_CASE("graph_isomorphism_classes matches the known census") {
  CHECK(graph_isomorphism_classes(1).size() == 1);
  CHECK(graph_isomorphism_classes(2).size() == 2);
  CHECK(graph_isomorphism_classes(3).size() == 4);
  CHECK(graph_isomorphism_classes(4).size() == 11);
  CHECK(graph_isomorphism_classes(5).size() == 34);

  // pairwise non-isomorphic and of the right order
  std::vector<Graph> classes = graph_isomorphism_classes(4);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    CHECK(classes[i].size() == 4);
    for (std::size_t j = i + 1; j < classes.size(); ++j)
      CHECK_FALSE(are_isomorphic(classes[i], classes[j]));
  }
}

TEST_CASE("is_edgeless and is_claw") {
  CHECK(is_edgeless(edgeless_graph(3)));
  CHECK(is_edgeless(Graph(0)));
  CHECK_FALSE(is_edgeless(path_graph(2)));

  Graph claw(4);
  claw.add_edge(0, 1);
  claw.add_edge(0, 2);
  claw.add_edge(0, 3);
  CHECK(is_claw(claw));

  Graph center_last(4);  // same star, center at index 3
  center_last.add_edge(3, 0);
  center_last.add_edge(3, 1);
  center_last.add_edge(3, 2);
  CHECK(is_claw(center_last));

  CHECK_FALSE(is_claw(path_graph(4)));
  CHECK_FALSE(is_claw(edgeless_graph(4)));
  CHECK_FALSE(is_claw(complete_graph(4)));
  CHECK_FALSE(is_claw(edgeless_graph(3)));
}
