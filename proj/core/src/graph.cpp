#include "cliquecolor/graph.hpp"

#include <algorithm>
#include <bit>

#include "cliquecolor/errors.hpp"

namespace cliquecolor {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0) throw contract_error("graph size must be non-negative");
  adj_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::check_vertex(int v, const char* who) const {
  if (v < 0 || v >= n_)
    throw contract_error(std::string(who) + ": vertex " + std::to_string(v) +
                         " out of range [0," + std::to_string(n_) + ")");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u, "add_edge");
  check_vertex(v, "add_edge");
  if (u == v) throw contract_error("add_edge: loops are not allowed");
  adj_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ULL << (v & 63);
  adj_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= 1ULL << (u & 63);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u, "remove_edge");
  check_vertex(v, "remove_edge");
  adj_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(1ULL << (v & 63));
  adj_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(1ULL << (u & 63));
}

int Graph::degree(int v) const {
  check_vertex(v, "degree");
  int d = 0;
  const std::uint64_t* r = row(v);
  for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
  return d;
}

int Graph::max_degree() const {
  int m = 0;
  for (int v = 0; v < n_; ++v) m = std::max(m, degree(v));
  return m;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int m = degree(0);
  for (int v = 1; v < n_; ++v) m = std::min(m, degree(v));
  return m;
}

long long Graph::edge_count() const {
  long long total = 0;
  for (int v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v, "neighbors");
  std::vector<int> out;
  const std::uint64_t* r = row(v);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      int b = std::countr_zero(bits);
      out.push_back(w * 64 + b);
      bits &= bits - 1;
    }
  }
  return out;
}

int Graph::degree_in(int v, const std::vector<int>& verts) const {
  check_vertex(v, "degree_in");
  int d = 0;
  for (int u : verts)
    if (u != v && adjacent(v, u)) ++d;
  return d;
}

bool verify_coloring(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.color.size()) != g.size()) return false;
  if (c.palette < 0) return false;
  for (int v = 0; v < g.size(); ++v) {
    if (c.color[v] < 0 || c.color[v] >= c.palette) return false;
    for (int u : g.neighbors(v))
      if (u > v && c.color[u] == c.color[v]) return false;
  }
  return true;
}

bool verify_clique(const Graph& g, const CliqueCertificate& cert) {
  const auto& vs = cert.vertices;
  if (vs.empty()) return false;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] < 0 || vs[i] >= g.size()) return false;
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (vs[i] == vs[j]) return false;
      if (!g.adjacent(vs[i], vs[j])) return false;
    }
  }
  if (cert.high_only) {
    int delta = g.max_degree();
    for (int v : vs)
      if (g.degree(v) != delta) return false;
  }
  return true;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
  std::vector<int> sorted = verts;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw contract_error("induced_subgraph: duplicate vertices");
  InducedSubgraph out;
  out.graph = Graph(static_cast<int>(sorted.size()));
  out.to_parent = sorted;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j)
      if (g.adjacent(sorted[i], sorted[j]))
        out.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

std::vector<std::vector<int>> components_within(const Graph& g,
                                                const std::vector<int>& verts) {
  std::vector<int> sorted = verts;
  std::sort(sorted.begin(), sorted.end());
  std::vector<char> in(static_cast<std::size_t>(g.size()), 0);
  for (int v : sorted) in[static_cast<std::size_t>(v)] = 1;
  std::vector<char> seen(static_cast<std::size_t>(g.size()), 0);
  std::vector<std::vector<int>> out;
  for (int s : sorted) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> comp;
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u : g.neighbors(v)) {
        if (in[static_cast<std::size_t>(u)] && !seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = 1;
          stack.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<int> all(static_cast<std::size_t>(g.size()));
  for (int v = 0; v < g.size(); ++v) all[static_cast<std::size_t>(v)] = v;
  return components_within(g, all);
}

std::vector<int> component_of_within(const Graph& g, int v,
                                     const std::vector<int>& verts) {
  std::vector<int> with = verts;
  if (std::find(with.begin(), with.end(), v) == with.end()) with.push_back(v);
  for (auto& comp : components_within(g, with))
    if (std::binary_search(comp.begin(), comp.end(), v)) return comp;
  throw invariant_error("component_of_within: vertex vanished");
}

bool is_clique(const Graph& g, const std::vector<int>& verts) {
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (!g.adjacent(verts[i], verts[j])) return false;
  return true;
}

std::vector<int> high_vertices(const Graph& g) {
  std::vector<int> out;
  int delta = g.max_degree();
  for (int v = 0; v < g.size(); ++v)
    if (g.degree(v) == delta) out.push_back(v);
  return out;
}

InducedSubgraph high_subgraph(const Graph& g) {
  return induced_subgraph(g, high_vertices(g));
}

std::string graph_hash(const Graph& g) {
  std::uint64_t h = 14695981039346656037ULL;
  auto mix = [&h](std::uint64_t value, int bytes) {
    for (int i = 0; i < bytes; ++i) {
      h ^= (value >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(g.size()), 4);
  for (int v = 0; v < g.size(); ++v) {
    const std::uint64_t* r = g.row(v);
    for (int w = 0; w < g.words(); ++w) mix(r[w], 8);
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

Graph join(const Graph& a, const Graph& b) {
  Graph out(a.size() + b.size());
  for (int v = 0; v < a.size(); ++v)
    for (int u : a.neighbors(v))
      if (u > v) out.add_edge(v, u);
  for (int v = 0; v < b.size(); ++v)
    for (int u : b.neighbors(v))
      if (u > v) out.add_edge(a.size() + v, a.size() + u);
  for (int v = 0; v < a.size(); ++v)
    for (int u = 0; u < b.size(); ++u) out.add_edge(v, a.size() + u);
  return out;
}

}  // namespace cliquecolor
