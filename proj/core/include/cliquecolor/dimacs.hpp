#pragma once

#include <iosfwd>
#include <string>

#include "cliquecolor/graph.hpp"

namespace cliquecolor {

// DIMACS graph format: comment lines start with 'c', a single problem line
// "p edge <n> <m>" precedes the edges, and each edge line is "e <u> <v>"
// with 1-based endpoints. Parsing is strict and reports 1-based line
// numbers on failure. Duplicate edges are tolerated; loops are not.
Graph parse_dimacs(std::istream& in);
Graph parse_dimacs_string(const std::string& text);
Graph parse_dimacs_file(const std::string& path);

std::string to_dimacs(const Graph& g);

}  // namespace cliquecolor
