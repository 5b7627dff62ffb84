#pragma once

#include <cstdint>
#include <vector>

#include "cliquecolor/graph.hpp"

namespace cliquecolor {

// Canonical key of a labelled graph on at most 8 vertices: the minimum,
// over all vertex permutations, of the upper-triangle adjacency bits read
// in row-major order. Two graphs get the same key iff they are isomorphic.
std::uint64_t canonical_key(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

// One representative per isomorphism class of graphs on exactly n vertices,
// ordered by canonical key. Counts for n = 1..5: 1, 2, 4, 11, 34.
std::vector<Graph> graph_isomorphism_classes(int n);

// Named small graphs used by the join classification.
bool is_edgeless(const Graph& g);
bool is_claw(const Graph& g);  // K_{1,3}

}  // namespace cliquecolor
