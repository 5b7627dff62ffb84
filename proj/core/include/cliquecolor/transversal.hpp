#pragma once

#include <optional>
#include <vector>

#include "cliquecolor/graph.hpp"

namespace cliquecolor {

// One group of the maximum-clique cover: either a bare clique, or a clique
// plus an attached vertex x adjacent to all but one of its members (the
// shape two overlapping maximum cliques collapse to).
struct DiGroup {
  std::vector<int> clique;
  int x = -1;  // -1 = absent
};

struct DiPartition {
  std::vector<DiGroup> groups;
};

// Auxiliary instance for the independent-transversal search. The part lists
// index into aux_graph; to_parent maps those indices back to the original
// graph. `lopsided` records whether every v in part K_i satisfies
// d(v) <= min(s, |K_i| - s) in aux_graph — the hypothesis under which a
// transversal is guaranteed to exist.
struct TransversalInstance {
  Graph aux_graph;
  std::vector<int> to_parent;
  std::vector<std::vector<int>> parts;
  int s = 0;
  bool lopsided = false;
};

// Groups the maximum cliques of g. Requires every clique to have size
// Δ(g)−4. Two cliques may overlap only in exactly Δ(g)−5 vertices, and no
// clique may overlap two others; any other shape throws structural_error
// describing the offending cliques.
DiPartition di_partition(const Graph& g,
                         const std::vector<std::vector<int>>& cliques);

// K_i = C_i when x is absent, otherwise C_i ∩ N(x_i). The auxiliary graph
// is induced on the union of the K_i with all intra-part edges removed.
TransversalInstance build_transversal_instance(const Graph& g,
                                               const DiPartition& d, int s);

// One vertex per part, pairwise nonadjacent in aux_graph, returned in parent
// ids ordered by part. Backtracking, most-constrained part first, lowest
// vertex first. When the instance is lopsided, absence is impossible and
// exhausting the search throws invariant_error.
std::optional<std::vector<int>> find_independent_transversal(
    const TransversalInstance& t);

// Exhaustive cross-check: first independent transversal in plain
// lexicographic part-by-part order, with no search-order heuristics.
std::optional<std::vector<int>> enumerate_transversal(
    const TransversalInstance& t);

// Independent set meeting every maximum clique of g, built through
// di_partition and the transversal search with s = Δ/2 − 2, and verified
// against the enumerated maximum cliques before returning. Guaranteed to
// exist when ω(g) = Δ(g)−4 and the lopsided hypothesis holds; callable
// outside that regime, where absence (nullopt) is possible. Returns nullopt
// immediately when ω(g) ≠ Δ(g)−4.
std::optional<std::vector<int>> hitting_set(const Graph& g);

}  // namespace cliquecolor
