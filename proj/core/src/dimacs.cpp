#include "cliquecolor/dimacs.hpp"

#include <fstream>
#include <sstream>

#include "cliquecolor/errors.hpp"

namespace cliquecolor {

Graph parse_dimacs(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool have_problem = false;
  long long declared_edges = 0;
  long long seen_edges = 0;
  Graph g;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank line
    if (tag == "c") continue;
    if (tag == "p") {
      if (have_problem) throw parse_error("duplicate problem line", lineno);
      std::string kind;
      long long n = -1, m = -1;
      if (!(ls >> kind >> n >> m))
        throw parse_error("problem line must read 'p edge <n> <m>'", lineno);
      if (kind != "edge" && kind != "col")
        throw parse_error("unsupported problem kind '" + kind + "'", lineno);
      if (n < 0 || m < 0) throw parse_error("negative size on problem line", lineno);
      if (n > 1000000) throw parse_error("vertex count unreasonably large", lineno);
      g = Graph(static_cast<int>(n));
      declared_edges = m;
      have_problem = true;
      continue;
    }
    if (tag == "e") {
      if (!have_problem) throw parse_error("edge before problem line", lineno);
      long long u = 0, v = 0;
      if (!(ls >> u >> v)) throw parse_error("edge line must read 'e <u> <v>'", lineno);
      if (u < 1 || u > g.size() || v < 1 || v > g.size())
        throw parse_error("edge endpoint out of range", lineno);
      if (u == v) throw parse_error("loops are not allowed", lineno);
      g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
      ++seen_edges;
      continue;
    }
    throw parse_error("unrecognized line tag '" + tag + "'", lineno);
  }
  if (!have_problem) throw parse_error("missing problem line", lineno == 0 ? 1 : lineno);
  // Duplicate edge lines are tolerated, so only complain when fewer lines
  // arrived than the header promised.
  if (seen_edges < declared_edges)
    throw parse_error("fewer edge lines than declared (" +
                          std::to_string(seen_edges) + " < " +
                          std::to_string(declared_edges) + ")",
                      lineno == 0 ? 1 : lineno);
  return g;
}

Graph parse_dimacs_string(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

Graph parse_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw contract_error("cannot open file: " + path);
  return parse_dimacs(in);
}

std::string to_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.size() << " " << g.edge_count() << "\n";
  for (int v = 0; v < g.size(); ++v)
    for (int u : g.neighbors(v))
      if (u > v) out << "e " << (v + 1) << " " << (u + 1) << "\n";
  return out.str();
}

}  // namespace cliquecolor
