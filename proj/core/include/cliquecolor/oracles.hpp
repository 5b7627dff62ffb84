#pragma once

#include <optional>
#include <vector>

#include "cliquecolor/graph.hpp"

namespace cliquecolor {

// ---- heuristics (never refuse, no optimality promise) ----

// DSATUR: repeatedly color the vertex with the most distinctly-colored
// neighbors (ties: higher degree, then lower index) with the least feasible
// color. Deterministic.
Coloring dsatur_coloring(const Graph& g);

// Ascending-index clique expansion: scan vertices 0..n-1 and keep those
// adjacent to everything kept so far; repeat from each start vertex and
// return the best. Deterministic.
std::vector<int> greedy_clique(const Graph& g);

// ---- exact, desk-scale (refuse beyond limits().max_exact_*) ----

// Branch-and-bound k-colorability with a static vertex order (descending
// degree, ties by lower index), canonical color introduction (a vertex may
// use at most one color beyond those already used), and forward checking.
bool is_k_colorable(const Graph& g, int k);
std::optional<Coloring> find_k_coloring(const Graph& g, int k);

int chromatic_number_exact(const Graph& g);

// Lexicographically-least maximum clique (sorted ascending).
std::vector<int> max_clique_exact(const Graph& g);
// All maximum cliques, each sorted, in lexicographic order.
std::vector<std::vector<int>> maximum_cliques(const Graph& g);

// True iff chromatic number is exactly k and every vertex deletion drops it.
bool is_vertex_critical(const Graph& g, int k);

// A vertex-critical k-chromatic induced subgraph of g (requires chi(g) >= k):
// repeatedly deletes any vertex whose removal keeps the chromatic number at
// least k. Deterministic (always deletes the lowest eligible vertex).
InducedSubgraph critical_subgraph(const Graph& g, int k);

// Extends `seed` (must be independent) to a maximal independent set by
// ascending vertex index.
std::vector<int> maximal_independent_set(const Graph& g,
                                         const std::vector<int>& seed = {});

}  // namespace cliquecolor
