#include "cliquecolor/list_coloring.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>

#include "cliquecolor/config.hpp"
#include "cliquecolor/errors.hpp"

namespace cliquecolor {

ListSizeFunction degree_sizes(const Graph& g) {
  ListSizeFunction f(static_cast<std::size_t>(g.size()));
  for (int v = 0; v < g.size(); ++v) f[static_cast<std::size_t>(v)] = g.degree(v);
  return f;
}

ListSizeFunction degree_minus_one_sizes(const Graph& g) {
  ListSizeFunction f(static_cast<std::size_t>(g.size()));
  for (int v = 0; v < g.size(); ++v)
    f[static_cast<std::size_t>(v)] = std::max(0, g.degree(v) - 1);
  return f;
}

namespace {

// Backtracking list-coloring over bitmask lists (colors are bit positions).
// Picks the uncolored vertex with the fewest remaining colors.
struct MaskListSolver {
  const Graph& g;
  std::vector<std::uint64_t> avail;  // list minus colors of colored neighbors
  std::vector<int> assigned;         // -1 = uncolored

  MaskListSolver(const Graph& graph, const std::vector<std::uint64_t>& lists)
      : g(graph), avail(lists),
        assigned(static_cast<std::size_t>(graph.size()), -1) {}

  bool solve(int remaining) {
    if (remaining == 0) return true;
    int v = -1;
    int best = 65;
    for (int u = 0; u < g.size(); ++u) {
      if (assigned[static_cast<std::size_t>(u)] >= 0) continue;
      int c = std::popcount(avail[static_cast<std::size_t>(u)]);
      if (c < best) {
        best = c;
        v = u;
        if (c == 0) return false;
      }
    }
    std::uint64_t options = avail[static_cast<std::size_t>(v)];
    while (options) {
      int c = std::countr_zero(options);
      options &= options - 1;
      assigned[static_cast<std::size_t>(v)] = c;
      std::uint64_t bit = 1ULL << c;
      // strip c from uncolored neighbors, remembering which to restore
      std::vector<int> touched;
      bool dead = false;
      for (int u : g.neighbors(v)) {
        if (assigned[static_cast<std::size_t>(u)] >= 0) continue;
        if (avail[static_cast<std::size_t>(u)] & bit) {
          avail[static_cast<std::size_t>(u)] &= ~bit;
          touched.push_back(u);
          if (avail[static_cast<std::size_t>(u)] == 0) dead = true;
        }
      }
      if (!dead && solve(remaining - 1)) return true;
      for (int u : touched) avail[static_cast<std::size_t>(u)] |= bit;
      assigned[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  }
};

bool mask_l_colorable(const Graph& g, const std::vector<std::uint64_t>& lists,
                      std::vector<int>* out_bits) {
  MaskListSolver solver(g, lists);
  if (!solver.solve(g.size())) return false;
  if (out_bits) *out_bits = solver.assigned;
  return true;
}

}  // namespace

std::optional<Coloring> l_colorable(const Graph& g, const ListAssignment& lists) {
  if (static_cast<int>(lists.size()) != g.size())
    throw contract_error("l_colorable: one list per vertex required");
  // Compact the color space so lists fit machine words.
  std::map<int, int> id;
  for (const auto& list : lists)
    for (int c : list) {
      if (c < 0) throw contract_error("l_colorable: negative color");
      id.emplace(c, 0);
    }
  if (id.size() > 63)
    throw refusal_error("l_colorable: more than 63 distinct colors");
  int next = 0;
  std::vector<int> back(id.size());
  for (auto& [color, compact] : id) {
    compact = next;
    back[static_cast<std::size_t>(next)] = color;
    ++next;
  }
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(g.size()), 0);
  for (int v = 0; v < g.size(); ++v) {
    std::uint64_t m = 0;
    for (int c : lists[static_cast<std::size_t>(v)]) {
      std::uint64_t bit = 1ULL << id[c];
      if (m & bit) throw contract_error("l_colorable: duplicate color in list");
      m |= bit;
    }
    masks[static_cast<std::size_t>(v)] = m;
  }
  std::vector<int> bits;
  if (!mask_l_colorable(g, masks, &bits)) return std::nullopt;
  Coloring out;
  out.color.resize(static_cast<std::size_t>(g.size()));
  int maxc = -1;
  for (int v = 0; v < g.size(); ++v) {
    out.color[static_cast<std::size_t>(v)] = back[static_cast<std::size_t>(bits[static_cast<std::size_t>(v)])];
    maxc = std::max(maxc, out.color[static_cast<std::size_t>(v)]);
  }
  out.palette = maxc + 1;
  return out;
}

namespace {

void validate_size_function(const Graph& g, const ListSizeFunction& f,
                            const char* who, bool small_pot_range) {
  if (static_cast<int>(f.size()) != g.size())
    throw contract_error(std::string(who) + ": one size per vertex required");
  for (int v = 0; v < g.size(); ++v) {
    int fv = f[static_cast<std::size_t>(v)];
    if (fv < 0) throw contract_error(std::string(who) + ": negative list size");
    if (small_pot_range && fv > g.size() - 1)
      throw contract_error(std::string(who) +
                           ": list size exceeds the small-pot range |g|-1");
  }
}

// Enumerates list assignments in canonical first-use color order: each list
// takes some already-used colors plus a consecutive block of new ones.
// Calls `leaf` with the masks; stops (returns false) when leaf returns false.
template <typename Leaf>
bool canonical_assignments(const ListSizeFunction& f, int pot_cap,
                           std::vector<std::uint64_t>& lists, std::size_t v,
                           int used, Leaf&& leaf) {
  if (v == lists.size()) return leaf(lists);
  int want = f[v];
  int max_new = std::min(want, pot_cap - used);
  for (int fresh = 0; fresh <= max_new; ++fresh) {
    int from_used = want - fresh;
    if (from_used > used) continue;
    std::uint64_t fresh_block = fresh == 0 ? 0ULL
                                           : (((1ULL << fresh) - 1) << used);
    if (from_used == 0) {
      lists[v] = fresh_block;
      if (!canonical_assignments(f, pot_cap, lists, v + 1, used + fresh, leaf))
        return false;
      continue;
    }
    // Gosper's hack over from_used-subsets of the `used` low bits.
    std::uint64_t sub = (1ULL << from_used) - 1;
    std::uint64_t limit = 1ULL << used;
    while (sub < limit) {
      lists[v] = sub | fresh_block;
      if (!canonical_assignments(f, pot_cap, lists, v + 1, used + fresh, leaf))
        return false;
      std::uint64_t c = sub & (0 - sub);
      std::uint64_t r = sub + c;
      sub = (((r ^ sub) >> 2) / c) | r;
    }
  }
  return true;
}

}  // namespace

bool f_choosable(const Graph& g, const ListSizeFunction& f) {
  validate_size_function(g, f, "f_choosable", true);
  if (g.size() > limits().max_choosable)
    throw refusal_error("f_choosable: " + std::to_string(g.size()) +
                        " vertices exceeds enumeration budget " +
                        std::to_string(limits().max_choosable));
  if (g.size() == 0) return true;
  for (int v = 0; v < g.size(); ++v)
    if (f[static_cast<std::size_t>(v)] == 0) return false;  // an empty list defeats it
  int pot_cap = g.size() - 1;  // small-pot reduction
  std::vector<std::uint64_t> lists(static_cast<std::size_t>(g.size()), 0);
  return canonical_assignments(
      f, pot_cap, lists, 0, 0,
      [&](const std::vector<std::uint64_t>& ls) {
        return mask_l_colorable(g, ls, nullptr);
      });
}

bool f_choosable_naive(const Graph& g, const ListSizeFunction& f) {
  validate_size_function(g, f, "f_choosable_naive", false);
  if (g.size() > 7)
    throw refusal_error("f_choosable_naive: supports at most 7 vertices");
  if (g.size() == 0) return true;
  long long universe = 0;
  for (int v = 0; v < g.size(); ++v) universe += f[static_cast<std::size_t>(v)];
  for (int v = 0; v < g.size(); ++v)
    if (f[static_cast<std::size_t>(v)] == 0) return false;
  if (universe > 63)
    throw refusal_error("f_choosable_naive: total list size exceeds 63");
  // Pinned budget on the raw product of per-vertex combination counts.
  static constexpr double kAssignmentBudget = 5e6;
  double total = 1.0;
  std::vector<std::vector<std::uint64_t>> choices(static_cast<std::size_t>(g.size()));
  for (int v = 0; v < g.size(); ++v) {
    int fv = f[static_cast<std::size_t>(v)];
    std::uint64_t sub = (1ULL << fv) - 1;
    std::uint64_t limit = (universe >= 64) ? 0 : (1ULL << universe);
    while (sub < limit) {
      choices[static_cast<std::size_t>(v)].push_back(sub);
      std::uint64_t c = sub & (0 - sub);
      std::uint64_t r = sub + c;
      sub = (((r ^ sub) >> 2) / c) | r;
      if (static_cast<double>(choices[static_cast<std::size_t>(v)].size()) >
          kAssignmentBudget)
        break;
    }
    total *= static_cast<double>(choices[static_cast<std::size_t>(v)].size());
    if (total > kAssignmentBudget)
      throw refusal_error(
          "f_choosable_naive: assignment count exceeds pinned budget");
  }
  std::vector<std::size_t> idx(static_cast<std::size_t>(g.size()), 0);
  std::vector<std::uint64_t> lists(static_cast<std::size_t>(g.size()));
  for (;;) {
    for (int v = 0; v < g.size(); ++v)
      lists[static_cast<std::size_t>(v)] =
          choices[static_cast<std::size_t>(v)][idx[static_cast<std::size_t>(v)]];
    if (!mask_l_colorable(g, lists, nullptr)) return false;
    int v = 0;
    while (v < g.size()) {
      if (++idx[static_cast<std::size_t>(v)] <
          choices[static_cast<std::size_t>(v)].size())
        break;
      idx[static_cast<std::size_t>(v)] = 0;
      ++v;
    }
    if (v == g.size()) return true;
  }
}

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Does B admit a proper coloring from `lists` using at most max_colors
// distinct colors? Straight DFS over vertices.
bool small_image_coloring(const Graph& b, const std::vector<std::uint64_t>& lists,
                          std::size_t v, std::vector<int>& color,
                          std::uint64_t used, int max_colors) {
  if (v == lists.size()) return true;
  std::uint64_t options = lists[v];
  for (std::size_t u = 0; u < v; ++u)
    if (b.adjacent(static_cast<int>(v), static_cast<int>(u)))
      options &= ~(1ULL << color[u]);
  while (options) {
    int c = std::countr_zero(options);
    options &= options - 1;
    bool fresh = !(used & (1ULL << c));
    if (fresh && std::popcount(used) >= max_colors) continue;
    color[v] = c;
    if (small_image_coloring(b, lists, v + 1, color, used | (1ULL << c), max_colors))
      return true;
  }
  return false;
}

// Accumulates the union of all exact-size-`target` color images of proper
// colorings of B from `lists` into cover; stops early when cover == full.
void accumulate_images(const Graph& b, const std::vector<std::uint64_t>& lists,
                       std::size_t v, std::vector<int>& color, std::uint64_t used,
                       int target, std::uint64_t full, std::uint64_t& cover) {
  if (cover == full) return;
  if (std::popcount(used) > target) return;
  if (v == lists.size()) {
    if (std::popcount(used) == target) cover |= used;
    return;
  }
  std::uint64_t options = lists[v];
  for (std::size_t u = 0; u < v; ++u)
    if (b.adjacent(static_cast<int>(v), static_cast<int>(u)))
      options &= ~(1ULL << color[u]);
  while (options) {
    int c = std::countr_zero(options);
    options &= options - 1;
    color[v] = c;
    accumulate_images(b, lists, v + 1, color, used | (1ULL << c), target, full, cover);
    if (cover == full) return;
  }
}

// The Hall-collapse family test: with the K-side lists pinned to
// (universe minus one common color m), a family of B-lists defeats every
// coloring iff no proper B-coloring uses <= |B|-2 colors and some universe
// color m lies outside every exact (|B|-1)-sized image.
bool family_is_bad(const Graph& b, const std::vector<std::uint64_t>& lists,
                   int w, std::vector<int>& scratch) {
  const int k = b.size();
  if (k >= 2 && small_image_coloring(b, lists, 0, scratch, 0, k - 2))
    return false;  // a thrifty coloring leaves the K-side enough room
  std::uint64_t full = (1ULL << w) - 1;
  std::uint64_t cover = 0;
  accumulate_images(b, lists, 0, scratch, 0, k - 1, full, cover);
  return cover != full;
}

}  // namespace

bool join_bad_assignment_exists(int t, const Graph& b, ListAssignment* bad_example) {
  if (t < 1) throw contract_error("join_bad_assignment_exists: t must be >= 1");
  const int k = b.size();
  const int w = t + k - 1;  // the small-pot universe
  if (w > 31)
    throw refusal_error("join_bad_assignment_exists: universe exceeds 31 colors");
  if (k == 0) {
    // K_t by itself: every assignment of (t-2)-lists from a (t-1)-universe
    // repeats a list, so t >= 2 is never d1-choosable; K_1 has an empty list.
    return true;
  }
  ListSizeFunction f(static_cast<std::size_t>(k));
  bool edgeless = true;
  for (int v = 0; v < k; ++v) {
    f[static_cast<std::size_t>(v)] = t - 1 + b.degree(v);
    if (b.degree(v) > 0) edgeless = false;
  }
  for (int v = 0; v < k; ++v)
    if (f[static_cast<std::size_t>(v)] == 0)
      return true;  // an empty list defeats the join outright
  if (edgeless && k >= 2) {
    // Counting bound: each list of size t-1 "dodges" binom(w-(t-1), k-2) of
    // the (k-2)-subsets of the universe. If the k lists cannot dodge them
    // all, every family admits a thrifty coloring and no bad family exists.
    long long dodged = static_cast<long long>(k) * binomial(w - (t - 1), k - 2);
    if (dodged < binomial(w, k - 2)) return false;
  }
  std::vector<std::uint64_t> lists(static_cast<std::size_t>(k), 0);
  std::vector<int> scratch(static_cast<std::size_t>(k), -1);
  bool found_bad = false;
  canonical_assignments(
      f, w, lists, 0, 0, [&](const std::vector<std::uint64_t>& ls) {
        if (family_is_bad(b, ls, w, scratch)) {
          found_bad = true;
          if (bad_example) {
            bad_example->assign(static_cast<std::size_t>(k), {});
            for (int v = 0; v < k; ++v) {
              std::uint64_t m = ls[static_cast<std::size_t>(v)];
              while (m) {
                (*bad_example)[static_cast<std::size_t>(v)].push_back(
                    std::countr_zero(m));
                m &= m - 1;
              }
            }
          }
          return false;  // stop the enumeration
        }
        return true;
      });
  return found_bad;
}

bool is_d1_choosable(const Graph& g) {
  if (g.size() == 0) return true;
  std::vector<int> universal, rest;
  for (int v = 0; v < g.size(); ++v) {
    if (g.degree(v) == g.size() - 1)
      universal.push_back(v);
    else
      rest.push_back(v);
  }
  if (!universal.empty()) {
    Graph b = induced_subgraph(g, rest).graph;
    return !join_bad_assignment_exists(static_cast<int>(universal.size()), b);
  }
  return f_choosable(g, degree_minus_one_sizes(g));
}

}  // namespace cliquecolor
