#include "cliquecolor/small_graphs.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cliquecolor/errors.hpp"

namespace cliquecolor {

namespace {

// Upper-triangle bit index for pair (i, j), i < j, on n vertices.
inline int pair_bit(int n, int i, int j) {
  // bits laid out row by row: (0,1),(0,2),...,(0,n-1),(1,2),...
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::uint64_t key_under_permutation(const Graph& g, const std::vector<int>& perm) {
  const int n = g.size();
  std::uint64_t key = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]))
        key |= 1ULL << pair_bit(n, i, j);
  return key;
}

}  // namespace

std::uint64_t canonical_key(const Graph& g) {
  const int n = g.size();
  if (n > 8) throw refusal_error("canonical_key: supports at most 8 vertices");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~0ULL;
  do {
    best = std::min(best, key_under_permutation(g, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return false;
  return canonical_key(a) == canonical_key(b);
}

std::vector<Graph> graph_isomorphism_classes(int n) {
  if (n < 0 || n > 5)
    throw refusal_error("graph_isomorphism_classes: supports 0..5 vertices");
  const int bits = n * (n - 1) / 2;
  std::map<std::uint64_t, Graph> reps;
  for (std::uint64_t mask = 0; mask < (1ULL << bits); ++mask) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if ((mask >> pair_bit(n, i, j)) & 1ULL) g.add_edge(i, j);
    reps.emplace(canonical_key(g), std::move(g));
  }
  std::vector<Graph> out;
  out.reserve(reps.size());
  for (auto& [key, g] : reps) out.push_back(std::move(g));
  return out;
}

bool is_edgeless(const Graph& g) { return g.edge_count() == 0; }

bool is_claw(const Graph& g) {
  if (g.size() != 4 || g.edge_count() != 3) return false;
  int deg3 = 0, deg1 = 0;
  for (int v = 0; v < 4; ++v) {
    if (g.degree(v) == 3) ++deg3;
    if (g.degree(v) == 1) ++deg1;
  }
  return deg3 == 1 && deg1 == 3;
}

}  // namespace cliquecolor
