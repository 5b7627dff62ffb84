#include <vector>

#include "cliquecolor/classify_join.hpp"
#include "cliquecolor/constructions.hpp"
#include "cliquecolor/errors.hpp"
#include "cliquecolor/graph.hpp"
#include "cliquecolor/list_coloring.hpp"
#include "cliquecolor/small_graphs.hpp"
#include "doctest.h"

using namespace cliquecolor;

namespace {

Graph claw() {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(0, 3);
  return g;
}

}  // namespace

TEST_CASE("exceptional cases of the join classification") {
  // the two t=4 exceptions and the single t=5 exception
  CHECK_FALSE(classify_join(4, edgeless_graph(3)));
  CHECK_FALSE(classify_join(4, claw()));
  CHECK_FALSE(classify_join(5, edgeless_graph(3)));

  // the same shapes stop being exceptional one row up or over
  CHECK(classify_join(5, claw()));
  CHECK(classify_join(6, edgeless_graph(3)));
  CHECK(classify_join(4, edgeless_graph(4)));
  CHECK(classify_join(5, edgeless_graph(4)));

  // near-complete remainders are never choosable: omega(b) >= |b| - 1
  CHECK_FALSE(classify_join(4, complete_graph(3)));
  CHECK_FALSE(classify_join(7, complete_graph(2)));
  CHECK_FALSE(classify_join(4, path_graph(3)));  // omega = 2 = |b| - 1
  CHECK_FALSE(classify_join(4, edgeless_graph(0)));
  CHECK_FALSE(classify_join(6, edgeless_graph(1)));
  CHECK_FALSE(classify_join(5, edgeless_graph(2)));

  // sparse enough remainders are choosable
  CHECK(classify_join(4, cycle_graph(4)));  // omega = 2 < 3 = |b| - 1
}

TEST_CASE("classification rejects complete parts below four vertices") {
  CHECK_THROWS_AS((void)classify_join(3, edgeless_graph(3)), contract_error);
  CHECK_THROWS_AS((void)classify_join(0, edgeless_graph(3)), contract_error);
}

TEST_CASE("formula agrees with exhaustive list search for t=4, |b| <= 3") {
  CHECK(classify_join(4, edgeless_graph(0)) ==
        is_d1_choosable(complete_graph(4)));
  for (int n = 1; n <= 3; ++n) {
    for (const Graph& b : graph_isomorphism_classes(n)) {
      Graph host = join(complete_graph(4), b);
      CHECK_MESSAGE(classify_join(4, b) == is_d1_choosable(host),
                    "mismatch at |b| = " << n);
    }
  }
}

TEST_CASE("formula agrees with exhaustive list search for t=5, |b| <= 3") {
  for (int n = 1; n <= 3; ++n) {
    for (const Graph& b : graph_isomorphism_classes(n)) {
      Graph host = join(complete_graph(5), b);
      CHECK(classify_join(5, b) == is_d1_choosable(host));
    }
  }
}
