#include "cliquecolor/oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "cliquecolor/config.hpp"
#include "cliquecolor/errors.hpp"

namespace cliquecolor {

Coloring dsatur_coloring(const Graph& g) {
  const int n = g.size();
  Coloring out;
  out.color.assign(static_cast<std::size_t>(n), -1);
  if (n == 0) return out;
  std::vector<std::vector<char>> seen(
      static_cast<std::size_t>(n));  // seen[v][c]: a neighbor of v has color c
  for (auto& s : seen) s.assign(static_cast<std::size_t>(n), 0);
  std::vector<int> sat(static_cast<std::size_t>(n), 0);
  int colored = 0, palette = 0;
  while (colored < n) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (out.color[static_cast<std::size_t>(v)] >= 0) continue;
      if (best < 0 || sat[static_cast<std::size_t>(v)] > sat[static_cast<std::size_t>(best)] ||
          (sat[static_cast<std::size_t>(v)] == sat[static_cast<std::size_t>(best)] &&
           g.degree(v) > g.degree(best)))
        best = v;
    }
    int c = 0;
    while (seen[static_cast<std::size_t>(best)][static_cast<std::size_t>(c)]) ++c;
    out.color[static_cast<std::size_t>(best)] = c;
    palette = std::max(palette, c + 1);
    for (int u : g.neighbors(best)) {
      if (out.color[static_cast<std::size_t>(u)] >= 0) continue;
      if (!seen[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)]) {
        seen[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)] = 1;
        ++sat[static_cast<std::size_t>(u)];
      }
    }
    ++colored;
  }
  out.palette = palette;
  return out;
}

std::vector<int> greedy_clique(const Graph& g) {
  std::vector<int> best;
  for (int start = 0; start < g.size(); ++start) {
    std::vector<int> cur{start};
    for (int v = 0; v < g.size(); ++v) {
      if (v == start) continue;
      bool ok = true;
      for (int u : cur)
        if (!g.adjacent(u, v)) {
          ok = false;
          break;
        }
      if (ok) cur.push_back(v);
    }
    if (cur.size() > best.size()) {
      std::sort(cur.begin(), cur.end());
      best = cur;
    }
  }
  return best;
}

namespace {

// Exact k-coloring search. Colors are capped at 63 so availability masks fit
// one word; desk-scale budgets keep us far below that anyway.
struct KColorSolver {
  const Graph& g;
  int k;
  std::vector<int> order;            // static order: descending degree, ties by index
  std::vector<int> color;            // by vertex id, -1 = uncolored
  std::vector<std::uint64_t> nbhd;   // colors used in each vertex's neighborhood (multiset as counts)
  std::vector<std::vector<int>> cnt; // cnt[v][c] = colored neighbors of v with color c
  std::uint64_t full;

  KColorSolver(const Graph& graph, int kk) : g(graph), k(kk) {
    const int n = g.size();
    order.resize(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      int da = g.degree(a), db = g.degree(b);
      if (da != db) return da > db;
      return a < b;
    });
    color.assign(static_cast<std::size_t>(n), -1);
    nbhd.assign(static_cast<std::size_t>(n), 0);
    cnt.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(k), 0));
    full = (k >= 64) ? ~0ULL : ((1ULL << k) - 1);
  }

  bool assign(int v, int c) {  // returns false if a neighbor runs dry
    color[static_cast<std::size_t>(v)] = c;
    bool ok = true;
    for (int u : g.neighbors(v)) {
      if (color[static_cast<std::size_t>(u)] >= 0) continue;
      if (cnt[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)]++ == 0) {
        nbhd[static_cast<std::size_t>(u)] |= 1ULL << c;
        if ((nbhd[static_cast<std::size_t>(u)] & full) == full) ok = false;
      }
    }
    return ok;
  }

  void unassign(int v, int c) {
    color[static_cast<std::size_t>(v)] = -1;
    for (int u : g.neighbors(v)) {
      if (color[static_cast<std::size_t>(u)] >= 0) continue;
      if (--cnt[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)] == 0)
        nbhd[static_cast<std::size_t>(u)] &= ~(1ULL << c);
    }
  }

  bool solve(std::size_t idx, int used) {
    if (idx == order.size()) return true;
    int v = order[idx];
    int cap = std::min(used + 1, k);  // canonical: at most one brand-new color
    std::uint64_t avail = ~nbhd[static_cast<std::size_t>(v)] &
                          ((cap >= 64) ? ~0ULL : ((1ULL << cap) - 1));
    while (avail) {
      int c = std::countr_zero(avail);
      avail &= avail - 1;
      bool viable = assign(v, c);
      if (viable && solve(idx + 1, std::max(used, c + 1))) return true;
      unassign(v, c);
    }
    return false;
  }
};

void check_coloring_budget(const Graph& g, const char* who) {
  if (g.size() > limits().max_exact_chromatic)
    throw refusal_error(std::string(who) + ": " + std::to_string(g.size()) +
                        " vertices exceeds exact budget " +
                        std::to_string(limits().max_exact_chromatic));
}

}  // namespace

bool is_k_colorable(const Graph& g, int k) {
  if (k < 0) throw contract_error("is_k_colorable: negative k");
  check_coloring_budget(g, "is_k_colorable");
  if (g.size() == 0) return true;
  if (k == 0) return false;
  if (k >= g.size()) return true;
  if (k > 63) throw refusal_error("is_k_colorable: k > 63 unsupported");
  KColorSolver solver(g, k);
  return solver.solve(0, 0);
}

std::optional<Coloring> find_k_coloring(const Graph& g, int k) {
  if (k < 0) throw contract_error("find_k_coloring: negative k");
  check_coloring_budget(g, "find_k_coloring");
  Coloring out;
  out.color.assign(static_cast<std::size_t>(g.size()), -1);
  out.palette = k;
  if (g.size() == 0) return out;
  if (k == 0) return std::nullopt;
  if (k > 63) throw refusal_error("find_k_coloring: k > 63 unsupported");
  if (k >= g.size()) {
    for (int v = 0; v < g.size(); ++v) out.color[static_cast<std::size_t>(v)] = v;
    return out;
  }
  KColorSolver solver(g, k);
  if (!solver.solve(0, 0)) return std::nullopt;
  out.color = solver.color;
  return out;
}

int chromatic_number_exact(const Graph& g) {
  check_coloring_budget(g, "chromatic_number_exact");
  if (g.size() == 0) return 0;
  int lower = std::max<int>(1, static_cast<int>(greedy_clique(g).size()));
  int upper = std::max(1, dsatur_coloring(g).palette);
  for (int k = lower; k < upper; ++k)
    if (is_k_colorable(g, k)) return k;
  return upper;
}

namespace {

// Max-clique branch and bound with a greedy-coloring upper bound.
struct CliqueSolver {
  const Graph& g;
  std::vector<int> best;
  std::vector<int> cur;

  explicit CliqueSolver(const Graph& graph) : g(graph) {}

  // Greedy-color the candidates; a vertex in color class i can extend the
  // clique by at most i+1, so process candidates in class order.
  void expand(std::vector<int>& cand) {
    if (cand.empty()) {
      if (cur.size() > best.size()) best = cur;
      return;
    }
    std::vector<int> klass(cand.size(), 0);
    int classes = 0;
    {
      std::vector<std::vector<int>> buckets;
      for (std::size_t i = 0; i < cand.size(); ++i) {
        int v = cand[i];
        std::size_t b = 0;
        for (; b < buckets.size(); ++b) {
          bool clash = false;
          for (int u : buckets[b])
            if (g.adjacent(u, v)) {
              clash = true;
              break;
            }
          if (!clash) break;
        }
        if (b == buckets.size()) buckets.emplace_back();
        buckets[b].push_back(v);
        klass[i] = static_cast<int>(b) + 1;
      }
      classes = static_cast<int>(buckets.size());
      // reorder candidates by class ascending, stable on index
      std::vector<int> idx(cand.size());
      std::iota(idx.begin(), idx.end(), 0);
      std::stable_sort(idx.begin(), idx.end(),
                       [&](int a, int b) { return klass[a] < klass[b]; });
      std::vector<int> nc(cand.size());
      std::vector<int> nk(cand.size());
      for (std::size_t i = 0; i < idx.size(); ++i) {
        nc[i] = cand[static_cast<std::size_t>(idx[i])];
        nk[i] = klass[static_cast<std::size_t>(idx[i])];
      }
      cand = std::move(nc);
      klass = std::move(nk);
    }
    (void)classes;
    for (std::size_t i = cand.size(); i-- > 0;) {
      if (cur.size() + static_cast<std::size_t>(klass[i]) <= best.size()) return;
      int v = cand[i];
      cur.push_back(v);
      std::vector<int> next;
      for (std::size_t j = 0; j < i; ++j)
        if (g.adjacent(cand[j], v)) next.push_back(cand[j]);
      expand(next);
      cur.pop_back();
    }
  }
};

}  // namespace

namespace {

void enumerate_cliques(const Graph& g, std::size_t target, std::vector<int>& cur,
                       std::vector<int>& cand, std::vector<std::vector<int>>& out) {
  if (cur.size() == target) {
    out.push_back(cur);
    return;
  }
  if (cur.size() + cand.size() < target) return;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    int v = cand[i];
    cur.push_back(v);
    std::vector<int> next;
    for (std::size_t j = i + 1; j < cand.size(); ++j)
      if (g.adjacent(cand[j], v)) next.push_back(cand[j]);
    enumerate_cliques(g, target, cur, next, out);
    cur.pop_back();
  }
}

std::size_t clique_number_internal(const Graph& g) {
  CliqueSolver solver(g);
  std::vector<int> cand(static_cast<std::size_t>(g.size()));
  std::iota(cand.begin(), cand.end(), 0);
  solver.best = greedy_clique(g);
  std::vector<int> seed = solver.best;
  if (!solver.best.empty()) solver.best.pop_back();
  solver.expand(cand);
  std::size_t size = std::max(solver.best.size(), seed.size());
  return size;
}

}  // namespace

std::vector<std::vector<int>> maximum_cliques(const Graph& g) {
  if (g.size() > limits().max_exact_clique)
    throw refusal_error("maximum_cliques: " + std::to_string(g.size()) +
                        " vertices exceeds exact budget " +
                        std::to_string(limits().max_exact_clique));
  if (g.size() == 0) return {};
  std::size_t omega = clique_number_internal(g);
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<int> cand(static_cast<std::size_t>(g.size()));
  std::iota(cand.begin(), cand.end(), 0);
  enumerate_cliques(g, omega, cur, cand, out);
  return out;  // ascending start vertices => lexicographic order
}

std::vector<int> max_clique_exact(const Graph& g) {
  if (g.size() == 0) return {};
  return maximum_cliques(g).front();
}

bool is_vertex_critical(const Graph& g, int k) {
  if (g.size() == 0) return false;
  if (chromatic_number_exact(g) != k) return false;
  for (int v = 0; v < g.size(); ++v) {
    std::vector<int> rest;
    for (int u = 0; u < g.size(); ++u)
      if (u != v) rest.push_back(u);
    if (!is_k_colorable(induced_subgraph(g, rest).graph, k - 1)) return false;
  }
  return true;
}

InducedSubgraph critical_subgraph(const Graph& g, int k) {
  if (is_k_colorable(g, k - 1))
    throw contract_error("critical_subgraph: input is (k-1)-colorable");
  std::vector<int> keep(static_cast<std::size_t>(g.size()));
  std::iota(keep.begin(), keep.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < keep.size(); ++i) {
      std::vector<int> rest;
      rest.reserve(keep.size() - 1);
      for (std::size_t j = 0; j < keep.size(); ++j)
        if (j != i) rest.push_back(keep[j]);
      if (!is_k_colorable(induced_subgraph(g, rest).graph, k - 1)) {
        keep = std::move(rest);
        changed = true;
        break;
      }
    }
  }
  return induced_subgraph(g, keep);
}

std::vector<int> maximal_independent_set(const Graph& g,
                                         const std::vector<int>& seed) {
  for (std::size_t i = 0; i < seed.size(); ++i)
    for (std::size_t j = i + 1; j < seed.size(); ++j)
      if (g.adjacent(seed[i], seed[j]))
        throw contract_error("maximal_independent_set: seed is not independent");
  std::vector<int> out = seed;
  for (int v = 0; v < g.size(); ++v) {
    if (std::find(out.begin(), out.end(), v) != out.end()) continue;
    bool ok = true;
    for (int u : out)
      if (g.adjacent(u, v)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cliquecolor
