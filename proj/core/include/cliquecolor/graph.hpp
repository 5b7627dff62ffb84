#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cliquecolor {

// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
// No loops, no multi-edges. Designed for desk-scale exact work: adjacency
// tests and neighborhood intersections are word-parallel.
class Graph {
 public:
  Graph() : n_(0), words_(0) {}
  explicit Graph(int n);

  int size() const { return n_; }
  int words() const { return words_; }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool adjacent(int u, int v) const {
    return (adj_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >>
            (v & 63)) & 1ULL;
  }

  const std::uint64_t* row(int v) const {
    return adj_.data() + static_cast<std::size_t>(v) * words_;
  }

  int degree(int v) const;
  int max_degree() const;
  int min_degree() const;
  long long edge_count() const;
  std::vector<int> neighbors(int v) const;

  // Number of neighbors of v among `verts` (vertices need not be sorted).
  int degree_in(int v, const std::vector<int>& verts) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
  }

 private:
  void check_vertex(int v, const char* who) const;

  int n_;
  int words_;
  std::vector<std::uint64_t> adj_;
};

// A (partial or total) vertex coloring. color[v] == -1 means uncolored;
// palette is the number of colors the coloring claims to stay within.
struct Coloring {
  std::vector<int> color;
  int palette = 0;
};

// A clique witness. When high_only is set the certificate additionally
// claims every member has degree exactly the graph's maximum degree.
struct CliqueCertificate {
  std::vector<int> vertices;
  bool high_only = false;
};

// An induced subgraph together with the map back to parent vertex ids.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_parent;
};

// Verification. These recompute everything from scratch on purpose: they are
// the trust anchor for every certificate the library emits.
bool verify_coloring(const Graph& g, const Coloring& c);
bool verify_clique(const Graph& g, const CliqueCertificate& cert);

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& verts);

// Connected components; each component is sorted ascending, components
// ordered by smallest member.
std::vector<std::vector<int>> components(const Graph& g);
// Components of the subgraph induced on `verts` (reported in parent ids).
std::vector<std::vector<int>> components_within(const Graph& g,
                                                const std::vector<int>& verts);
// Component of `v` within `verts` (v need not belong to verts; it is added).
std::vector<int> component_of_within(const Graph& g, int v,
                                     const std::vector<int>& verts);

bool is_clique(const Graph& g, const std::vector<int>& verts);

// Vertices of maximum degree.
std::vector<int> high_vertices(const Graph& g);
// Induced subgraph on the vertices of maximum degree, with the index map.
InducedSubgraph high_subgraph(const Graph& g);

// FNV-1a (64-bit) fingerprint of the labelled graph, returned as 16 hex
// digits. Covers the vertex count and every adjacency row, so any edge or
// size change alters the digest.
std::string graph_hash(const Graph& g);

// Union of two graphs on disjoint vertex sets plus all cross edges.
Graph join(const Graph& a, const Graph& b);

}  // namespace cliquecolor
