#include <algorithm>
#include <deque>
#include <limits>

#include "cliquecolor/mozhan.hpp"
#include "cliquecolor/oracles.hpp"
#include "mozhan_internal.hpp"

namespace cliquecolor {
namespace detail {

Coloring assemble_full(const PartitionState& s) {
  std::vector<int> base = s.palette_base();
  Coloring out;
  out.color.assign(static_cast<std::size_t>(s.graph.size()), -1);
  out.palette = s.sum_r();
  for (int v = 0; v < s.graph.size(); ++v) {
    int c = s.color_of[static_cast<std::size_t>(v)];
    if (c < 0) throw invariant_error("assemble_full: uncolored vertex");
    out.color[static_cast<std::size_t>(v)] =
        base[static_cast<std::size_t>(s.house_of[static_cast<std::size_t>(v)])] + c;
  }
  if (!verify_coloring(s.graph, out))
    throw invariant_error("assemble_full: stored colors are improper");
  return out;
}

void reset_clubs(PartitionState& s, std::vector<int> active_members) {
  s.clubs.clear();
  Club c;
  c.id = 0;
  c.house = s.active_house;
  c.members = std::move(active_members);
  c.activation_count = 1;
  c.activation_moves = {-1};
  s.clubs.push_back(std::move(c));
  s.active_club = 0;
  s.moved.assign(static_cast<std::size_t>(s.graph.size()), 0);
  s.move_log.clear();
  s.trail_house_of = {s.house_of};
}

namespace {

void erase_from_house(PartitionState& s, int v) {
  std::vector<int>& house =
      s.houses[static_cast<std::size_t>(s.house_of[static_cast<std::size_t>(v)])];
  house.erase(std::find(house.begin(), house.end(), v));
}

void insert_into_house(PartitionState& s, int v, int h) {
  std::vector<int>& house = s.houses[static_cast<std::size_t>(h)];
  house.insert(std::upper_bound(house.begin(), house.end(), v), v);
  s.house_of[static_cast<std::size_t>(v)] = h;
}

// Lowest house color unused among the colored house-neighbors of v.
int spare_color(const PartitionState& s, int v, int h) {
  int rh = s.r[static_cast<std::size_t>(h)];
  std::vector<char> used(static_cast<std::size_t>(rh), 0);
  for (int w : s.houses[static_cast<std::size_t>(h)]) {
    if (w == v || !s.graph.adjacent(v, w)) continue;
    int c = s.color_of[static_cast<std::size_t>(w)];
    if (c >= 0 && c < rh) used[static_cast<std::size_t>(c)] = 1;
  }
  for (int c = 0; c < rh; ++c)
    if (!used[static_cast<std::size_t>(c)]) return c;
  return -1;
}

}  // namespace

std::optional<Coloring> repair_to_active(PartitionState& s, int free_vertex,
                                         int house) {
  const Graph& g = s.graph;
  int f = free_vertex;
  int h = house;
  long long guard = 4 * g.edge_count() + g.size() + 16;
  while (true) {
    if (guard-- <= 0)
      throw_violation(s, "repair-budget",
                      "repair loop exceeded its potential budget");
    const int rj = s.r[static_cast<std::size_t>(h)];
    std::vector<int> comp = component_of_within(g, f, s.houses[static_cast<std::size_t>(h)]);

    // Over-budget member at minimum distance from the free vertex.
    std::vector<int> dist, parent;
    {
      dist.assign(static_cast<std::size_t>(g.size()), -1);
      parent.assign(static_cast<std::size_t>(g.size()), -1);
      std::deque<int> q;
      dist[static_cast<std::size_t>(f)] = 0;
      q.push_back(f);
      while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int y : comp)
          if (g.adjacent(x, y) && dist[static_cast<std::size_t>(y)] < 0) {
            dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
            parent[static_cast<std::size_t>(y)] = x;
            q.push_back(y);
          }
      }
    }
    int u = -1;
    for (int v : comp) {
      if (v == f || g.degree_in(v, comp) <= rj) continue;
      if (u < 0 || dist[static_cast<std::size_t>(v)] < dist[static_cast<std::size_t>(u)] ||
          (dist[static_cast<std::size_t>(v)] == dist[static_cast<std::size_t>(u)] && v < u))
        u = v;
    }

    if (u < 0) {
      // The component respects the budget: it is either the complete
      // component we want or it colors exactly.
      if (static_cast<int>(comp.size()) == rj + 1 && is_clique(g, comp)) {
        for (int v : comp) s.color_of[static_cast<std::size_t>(v)] = -1;
        s.active_house = h;
        s.epoch++;
        reset_clubs(s, comp);
        return std::nullopt;
      }
      InducedSubgraph sub = induced_subgraph(g, comp);
      std::optional<Coloring> c = find_k_coloring(sub.graph, rj);
      if (!c)
        throw_violation(s, "repair-brooks",
                        "budget-respecting component is neither complete nor "
                        "colorable within its budget");
      for (std::size_t i = 0; i < comp.size(); ++i)
        s.color_of[static_cast<std::size_t>(comp[i])] = c->color[i];
      return assemble_full(s);
    }

    // Relocate u. Some other house must take it under or at its budget.
    int dest = -1;
    bool fits = false;
    for (int k = 0; k < s.house_count(); ++k) {
      if (k == h) continue;
      int d = g.degree_in(u, s.houses[static_cast<std::size_t>(k)]);
      int rk = s.r[static_cast<std::size_t>(k)];
      if (d < rk) { dest = k; fits = true; break; }
      if (d == rk && dest < 0) dest = k;
    }
    if (dest < 0)
      throw_violation(s, "relocation",
                      "over-budget member exceeds every house budget");

    // Uncolor the path from the free vertex to u, move u, then re-color the
    // path from the free end: every path vertex respects the budget and has
    // its successor uncolored when its turn comes.
    std::vector<int> path;  // u back to f
    for (int x = u; x != -1; x = parent[static_cast<std::size_t>(x)]) path.push_back(x);
    for (int x : path) s.color_of[static_cast<std::size_t>(x)] = -1;
    erase_from_house(s, u);
    insert_into_house(s, u, dest);
    for (std::size_t i = path.size(); i-- > 1;) {  // f first, u excluded
      int x = path[i];
      int c = spare_color(s, x, h);
      if (c < 0)
        throw invariant_error("repair path re-coloring ran out of colors");
      s.color_of[static_cast<std::size_t>(x)] = c;
    }

    if (fits) {
      int c = spare_color(s, u, dest);
      if (c < 0) throw invariant_error("repair relocation lost its spare color");
      s.color_of[static_cast<std::size_t>(u)] = c;
      return assemble_full(s);
    }
    f = u;
    h = dest;
  }
}

std::optional<Coloring> enforce_properties(PartitionState& s) {
  const Graph& g = s.graph;
  const long long epoch_cap = g.edge_count() + 8;
  bool rescan = true;
  while (rescan) {
    rescan = false;
    const std::vector<int> members = s.active().members;
    for (int v : members) {
      for (int i = 0; i < s.house_count() && !rescan; ++i) {
        if (i == s.active_house) continue;
        const std::vector<int>& house = s.houses[static_cast<std::size_t>(i)];
        const int ri = s.r[static_cast<std::size_t>(i)];
        const int d = g.degree_in(v, house);
        if (d == ri) {
          std::vector<int> land = component_of_within(g, v, house);
          if (static_cast<int>(land.size()) != ri + 1 || !is_clique(g, land)) {
            // Property (3) exploit: park v in that house. Either everything
            // re-colors (done) or the tangled component forces a fresh
            // repair epoch with v as the free vertex.
            std::optional<Coloring> c =
                execute_relocations(g, s.r, s.house_of, {{v, i}});
            if (c) return c;
            if (s.epoch > epoch_cap)
              throw_violation(s, "epoch-budget",
                              "property repairs exceeded the epoch budget");
            std::vector<int> old_members = s.active().members;
            int next = 0;
            for (int m : old_members) {
              if (m == v) continue;
              s.color_of[static_cast<std::size_t>(m)] = next++;
            }
            erase_from_house(s, v);
            insert_into_house(s, v, i);
            s.color_of[static_cast<std::size_t>(v)] = -1;
            std::optional<Coloring> c2 = repair_to_active(s, v, i);
            if (c2) return c2;
            rescan = true;
            break;
          }
        }
        const int threshold = std::max(1, d + 1 - ri);
        for (const std::vector<int>& cc : components_within(g, house)) {
          if (g.degree_in(v, cc) < threshold) continue;
          std::vector<int> with = cc;
          with.push_back(v);
          InducedSubgraph sub = induced_subgraph(g, with);
          bool colorable;
          try {
            colorable = is_k_colorable(sub.graph, ri);
          } catch (const refusal_error&) {
            colorable = false;
          }
          if (colorable) {
            // Property (4) exploit: the heavy landing colors, so parking v
            // there recolors the whole graph (other components touched by v
            // keep a spare class to trade away from v's color).
            std::optional<Coloring> c =
                execute_relocations(g, s.r, s.house_of, {{v, i}});
            if (!c)
              throw_violation(s, "property4-exploit",
                              "colorable heavy landing failed to extend");
            return c;
          }
        }
      }
      if (rescan) break;
    }
  }
  return std::nullopt;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// build_partition
// ---------------------------------------------------------------------------

namespace {

void validate_witness(const Graph& g, const RVector& r,
                      const ChromaticWitness& w) {
  const int n = g.size();
  const int sum = sum_of(r);
  if (r.size() < 2) throw contract_error("build_partition: needs two houses");
  for (int ri : r)
    if (ri < 1) throw contract_error("build_partition: house budgets start at 1");
  if (w.free_vertex < 0 || w.free_vertex >= n)
    throw contract_error("build_partition: free vertex out of range");
  if (static_cast<int>(w.coloring.color.size()) != n)
    throw contract_error("build_partition: witness has the wrong size");
  if (w.coloring.palette != sum)
    throw contract_error("build_partition: witness palette must equal the budget sum");
  for (int v = 0; v < n; ++v) {
    int c = w.coloring.color[static_cast<std::size_t>(v)];
    if (v == w.free_vertex) {
      if (c != -1)
        throw contract_error("build_partition: free vertex must be uncolored");
      continue;
    }
    if (c < 0 || c >= sum)
      throw contract_error("build_partition: witness color out of range");
  }
  for (int a = 0; a < n; ++a) {
    if (a == w.free_vertex) continue;
    for (int b = a + 1; b < n; ++b) {
      if (b == w.free_vertex) continue;
      if (w.coloring.color[static_cast<std::size_t>(a)] ==
              w.coloring.color[static_cast<std::size_t>(b)] &&
          g.adjacent(a, b))
        throw contract_error("build_partition: witness coloring is improper");
    }
  }
}

}  // namespace

BuildResult build_partition(const Graph& g, const RVector& r,
                            const ChromaticWitness& witness) {
  validate_witness(g, r, witness);
  const int n = g.size();
  const int sum = sum_of(r);
  const int k = static_cast<int>(r.size());
  const int f = witness.free_vertex;

  // Pairwise edge counts between witness color classes.
  std::vector<std::vector<int>> cls(static_cast<std::size_t>(sum));
  for (int v = 0; v < n; ++v) {
    if (v == f) continue;
    cls[static_cast<std::size_t>(witness.coloring.color[static_cast<std::size_t>(v)])]
        .push_back(v);
  }
  std::vector<std::vector<long long>> cost(
      static_cast<std::size_t>(sum), std::vector<long long>(static_cast<std::size_t>(sum), 0));
  for (int a = 0; a < sum; ++a)
    for (int b = a + 1; b < sum; ++b) {
      long long e = 0;
      for (int x : cls[static_cast<std::size_t>(a)])
        e += g.degree_in(x, cls[static_cast<std::size_t>(b)]);
      cost[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = e;
      cost[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = e;
    }

  // Greedy local search over class-to-house assignments: apply the best
  // intra-edge-reducing swap until none remains. Deterministic tie-breaks.
  std::vector<int> house_of_class(static_cast<std::size_t>(sum));
  {
    int next = 0;
    for (int h = 0; h < k; ++h)
      for (int t = 0; t < r[static_cast<std::size_t>(h)]; ++t)
        house_of_class[static_cast<std::size_t>(next++)] = h;
  }
  auto cost_to_house = [&](int c, int h, int skip) {
    long long total = 0;
    for (int d = 0; d < sum; ++d)
      if (d != c && d != skip && house_of_class[static_cast<std::size_t>(d)] == h)
        total += cost[static_cast<std::size_t>(c)][static_cast<std::size_t>(d)];
    return total;
  };
  while (true) {
    long long best = 0;
    int best_a = -1, best_b = -1;
    for (int a = 0; a < sum; ++a)
      for (int b = a + 1; b < sum; ++b) {
        int ha = house_of_class[static_cast<std::size_t>(a)];
        int hb = house_of_class[static_cast<std::size_t>(b)];
        if (ha == hb) continue;
        long long delta = cost_to_house(a, hb, b) + cost_to_house(b, ha, a) -
                          cost_to_house(a, ha, -1) - cost_to_house(b, hb, -1);
        if (delta < best) { best = delta; best_a = a; best_b = b; }
      }
    if (best_a < 0) break;
    std::swap(house_of_class[static_cast<std::size_t>(best_a)],
              house_of_class[static_cast<std::size_t>(best_b)]);
  }

  PartitionState s;
  s.graph = g;
  s.r = r;
  s.houses.assign(static_cast<std::size_t>(k), {});
  s.house_of.assign(static_cast<std::size_t>(n), -1);
  s.color_of.assign(static_cast<std::size_t>(n), -1);
  s.moved.assign(static_cast<std::size_t>(n), 0);
  s.high.assign(static_cast<std::size_t>(n), 0);
  const int maxdeg = g.max_degree();
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == maxdeg) s.high[static_cast<std::size_t>(v)] = 1;

  for (int h = 0; h < k; ++h) {
    int local = 0;
    for (int c = 0; c < sum; ++c) {
      if (house_of_class[static_cast<std::size_t>(c)] != h) continue;
      for (int v : cls[static_cast<std::size_t>(c)]) {
        s.house_of[static_cast<std::size_t>(v)] = h;
        s.color_of[static_cast<std::size_t>(v)] = local;
        s.houses[static_cast<std::size_t>(h)].push_back(v);
      }
      ++local;
    }
    std::sort(s.houses[static_cast<std::size_t>(h)].begin(),
              s.houses[static_cast<std::size_t>(h)].end());
  }

  // Place the free vertex: under some budget means the graph colors at once;
  // otherwise it joins the first house where it exactly meets the budget.
  for (int h = 0; h < k; ++h) {
    if (g.degree_in(f, s.houses[static_cast<std::size_t>(h)]) >=
        s.r[static_cast<std::size_t>(h)])
      continue;
    detail::insert_into_house(s, f, h);
    int c = detail::spare_color(s, f, h);
    if (c < 0) throw invariant_error("build_partition: spare color vanished");
    s.color_of[static_cast<std::size_t>(f)] = c;
    BuildResult out;
    out.coloring = detail::assemble_full(s);
    return out;
  }
  int placed = -1;
  for (int h = 0; h < k; ++h) {
    if (g.degree_in(f, s.houses[static_cast<std::size_t>(h)]) ==
        s.r[static_cast<std::size_t>(h)]) {
      placed = h;
      break;
    }
  }
  if (placed < 0)
    detail::throw_violation(s, "placement",
                            "free vertex exceeds every house budget");
  detail::insert_into_house(s, f, placed);

  BuildResult out;
  std::optional<Coloring> c = detail::repair_to_active(s, f, placed);
  if (c) { out.coloring = c; return out; }
  std::optional<Coloring> c2 = detail::enforce_properties(s);
  if (c2) { out.coloring = c2; return out; }
  s.epoch = 0;
  out.state = std::move(s);
  return out;
}

}  // namespace cliquecolor
