#include <vector>

#include "cliquecolor/constructions.hpp"
#include "cliquecolor/errors.hpp"
#include "cliquecolor/graph.hpp"
#include "cliquecolor/list_coloring.hpp"
#include "doctest.h"

using namespace cliquecolor;

TEST_CASE("degree size functions") {
  Graph g(4);  // triangle plus pendant: degrees 3,2,2,1
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(0, 3);
  CHECK(degree_sizes(g) == ListSizeFunction{3, 2, 2, 1});
  CHECK(degree_minus_one_sizes(g) == ListSizeFunction{2, 1, 1, 0});
  CHECK(degree_minus_one_sizes(edgeless_graph(2)) == ListSizeFunction{0, 0});
}

TEST_CASE("l_colorable solves concrete assignments") {
  Graph c4 = cycle_graph(4);

  std::optional<Coloring> ok =
      l_colorable(c4, {{0, 1}, {0, 1}, {0, 1}, {0, 1}});
  REQUIRE(ok.has_value());
  CHECK(verify_coloring(c4, *ok));
  for (int v = 0; v < 4; ++v) {
    CHECK(ok->color[static_cast<std::size_t>(v)] >= 0);
    CHECK(ok->color[static_cast<std::size_t>(v)] <= 1);
  }

  // identical singleton lists on an edge cannot work
  Graph k2 = complete_graph(2);
  CHECK_FALSE(l_colorable(k2, {{7}, {7}}).has_value());
  CHECK(l_colorable(k2, {{7}, {8}}).has_value());

  // an empty list kills the instance outright
  CHECK_FALSE(l_colorable(c4, {{0, 1}, {}, {0, 1}, {0, 1}}).has_value());
}

TEST_CASE("f_choosable on knowns") {
  // even cycles are 2-choosable, odd cycles are not
  CHECK(f_choosable(cycle_graph(4), {2, 2, 2, 2}));
  CHECK(f_choosable(cycle_graph(6), {2, 2, 2, 2, 2, 2}));
  CHECK_FALSE(f_choosable(cycle_graph(5), {2, 2, 2, 2, 2}));
  CHECK(f_choosable(cycle_graph(5), {3, 2, 2, 2, 2}));

  // lists one short of the degree fail on a cycle
  CHECK_FALSE(f_choosable(cycle_graph(4), {1, 1, 1, 1}));

  // K4 with d-1 = 2 colors per vertex is not choosable
  CHECK_FALSE(f_choosable(complete_graph(4), {2, 2, 2, 2}));
  // complete graphs are not even degree-choosable (identical lists clash)
  CHECK_FALSE(f_choosable(complete_graph(4), {3, 3, 3, 3}));
  // the diamond is 2-connected, neither complete nor an odd cycle, so
  // degree lists suffice
  Graph diamond = complete_graph(4);
  diamond.remove_edge(0, 3);
  CHECK(f_choosable(diamond, {2, 3, 3, 2}));

  // a single vertex with an empty list is trivially uncolorable
  CHECK_FALSE(f_choosable(edgeless_graph(1), {0}));
  CHECK(f_choosable(Graph(0), {}));
}

TEST_CASE("f_choosable validates its size function") {
  Graph c4 = cycle_graph(4);
  CHECK_THROWS_AS((void)f_choosable(c4, {2, 2, 2}), contract_error);
  CHECK_THROWS_AS((void)f_choosable(c4, {2, 2, 2, -1}), contract_error);
  CHECK_THROWS_AS((void)f_choosable(c4, {2, 2, 2, 4}), contract_error);
}

TEST_CASE("f_choosable refuses graphs above its vertex budget") {
  Graph big = cycle_graph(11);
  ListSizeFunction f(11, 2);
  CHECK_THROWS_AS((void)f_choosable(big, f), refusal_error);
}

TEST_CASE("naive oracle agrees with the small-pot search on spot checks") {
  struct Case {
    Graph g;
    ListSizeFunction f;
  };
  std::vector<Case> cases;
  // every case keeps the naive product-of-combinations inside its budget
  cases.push_back({cycle_graph(4), {2, 2, 2, 2}});
  cases.push_back({cycle_graph(5), {2, 2, 2, 1, 1}});
  cases.push_back({complete_graph(4), {2, 2, 2, 2}});
  cases.push_back({complete_graph(3), {2, 2, 2}});
  cases.push_back({path_graph(4), {1, 2, 2, 1}});
  cases.push_back({path_graph(4), {1, 1, 2, 1}});
  cases.push_back({edgeless_graph(3), {1, 1, 1}});
  cases.push_back({join(complete_graph(2), edgeless_graph(3)), {2, 2, 1, 1, 1}});

  for (const Case& c : cases)
    CHECK(f_choosable(c.g, c.f) == f_choosable_naive(c.g, c.f));
}

TEST_CASE("naive oracle refuses instances beyond its enumeration budget") {
  CHECK_THROWS_AS((void)f_choosable_naive(cycle_graph(8), ListSizeFunction(8, 2)),
                  refusal_error);
}

TEST_CASE("d1-choosability of joins with a complete part") {
  // K4 * E4: remainder vertices have degree 4, lists of size 3 beat the
  // adversary, so the join is d1-choosable.
  CHECK(is_d1_choosable(join(complete_graph(4), edgeless_graph(4))));
  // K4 * E3 is one of the exceptional non-choosable joins.
  CHECK_FALSE(is_d1_choosable(join(complete_graph(4), edgeless_graph(3))));
  // complete graphs themselves are never d1-choosable
  CHECK_FALSE(is_d1_choosable(complete_graph(4)));
  // odd cycle: regular of degree 2, lists of size 1 fail
  CHECK_FALSE(is_d1_choosable(cycle_graph(5)));
}

TEST_CASE("join_bad_assignment_exists matches is_d1_choosable and exports lists") {
  ListAssignment bad;
  REQUIRE(join_bad_assignment_exists(4, edgeless_graph(3), &bad));
  REQUIRE(bad.size() == 3);
  // remainder vertices of K4 * E3 have degree 4, so each bad list holds 3
  // colors from a universe of t + |b| - 1 = 6
  for (const std::vector<int>& list : bad) {
    CHECK(list.size() == 3);
    for (int color : list) {
      CHECK(color >= 0);
      CHECK(color < 6);
    }
  }
  CHECK_FALSE(is_d1_choosable(join(complete_graph(4), edgeless_graph(3))));

  // K4 * E4 admits no bad assignment
  CHECK_FALSE(join_bad_assignment_exists(4, edgeless_graph(4)));

  // t joined to nothing: the complete part alone is never d1-choosable
  CHECK(join_bad_assignment_exists(4, edgeless_graph(0)));
}
