#pragma once

#include <optional>
#include <vector>

#include "cliquecolor/graph.hpp"

namespace cliquecolor {

// A concrete list assignment: L[v] = the colors available to v (distinct,
// any non-negative ints). A list size function f[v] prescribes |L(v)|.
using ListAssignment = std::vector<std::vector<int>>;
using ListSizeFunction = std::vector<int>;

ListSizeFunction degree_sizes(const Graph& g);            // f(v) = d(v)
ListSizeFunction degree_minus_one_sizes(const Graph& g);  // f(v) = d(v) - 1, floored at 0

// Exact list coloring: picks the uncolored vertex with the fewest remaining
// colors (ties: lower index) and backtracks. Returns a coloring that uses
// the actual list colors, or nullopt.
std::optional<Coloring> l_colorable(const Graph& g, const ListAssignment& lists);

// Is g L-colorable for EVERY assignment with |L(v)| = f(v)? Implemented with
// the small-pot reduction: only assignments whose color universe has fewer
// than |g| colors are enumerated, in canonical first-use order. f values must
// lie in {0,...,|g|-1}; refuses graphs above limits().max_choosable.
bool f_choosable(const Graph& g, const ListSizeFunction& f);

// Independent oracle for the same predicate: enumerates EVERY assignment
// over a fixed universe of sum(f) colors, with no pot restriction and no
// canonicalization. Requires |g| <= 7 and a small total assignment count
// (refuses when the product of binomials exceeds its pinned budget).
bool f_choosable_naive(const Graph& g, const ListSizeFunction& f);

// d1-choosability: f(v) = d(v) - 1. When the graph has at least one
// universal vertex it decomposes as K_t (the universal vertices) joined to
// the rest, and an exact Hall-collapse analysis over the remainder's lists
// replaces the full enumeration; otherwise falls back to f_choosable.
bool is_d1_choosable(const Graph& g);

// The join analysis, exposed for cross-validation: decides whether a bad
// degree-minus-one assignment exists for K_t joined to b. If one exists and
// `bad_example` is non-null, stores the remainder-side lists that defeat
// every coloring (indices into b, colors from a universe of t+|b|-1).
bool join_bad_assignment_exists(int t, const Graph& b,
                                ListAssignment* bad_example = nullptr);

}  // namespace cliquecolor
