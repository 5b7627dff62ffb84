#pragma once

#include <string>

#include "cliquecolor/graph.hpp"

namespace cliquecolor {

Graph complete_graph(int n);
Graph edgeless_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

// Lexicographic product C_a[K_b]: a blocks of b mutually adjacent vertices,
// consecutive blocks (cyclically) completely joined. (a*b vertices,
// (b-1) + 2b regular.)
Graph lex_product_cycle_clique(int a, int b);

// Five triangles D1..D5 with D_i completely joined to D_{i+1} (indices mod
// 5): 15 vertices, 8-regular, clique number 6, chromatic number 8.
Graph construct_bk8();

// The 9-vertex, 19-edge graph with maximum degree 5 and chromatic number 5
// whose two degree-5 vertices are non-adjacent (so its high-vertex subgraph
// is edgeless). Vertex-critical.
Graph construct_o5();

// The 7-vertex, 11-edge, 4-chromatic vertex-critical unit-distance graph
// (two rhombi sharing an apex, tips joined). Maximum degree 4.
Graph moser_spindle();

// Construction vocabulary used by the command-line tools:
//   o5 | bk8 | moser | lex:<a>:<b> | join:<g>:<h> | k<n> | c<n> | e<n> | p<n>
// join arguments recurse, e.g. "join:k4:e3". Throws contract_error on
// unknown names or malformed parameters.
Graph parse_construction(const std::string& name);

}  // namespace cliquecolor
