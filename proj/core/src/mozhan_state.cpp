#include "cliquecolor/mozhan.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "cliquecolor/list_coloring.hpp"
#include "cliquecolor/mixed_join.hpp"
#include "cliquecolor/oracles.hpp"
#include "json.hpp"
#include "mozhan_internal.hpp"

namespace cliquecolor {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// r-vectors and witnesses
// ---------------------------------------------------------------------------

RVector default_r_vector(int max_degree) {
  if (max_degree < 7)
    throw contract_error("default_r_vector: needs max degree >= 7");
  int fours = 0;
  switch (max_degree % 3) {
    case 1: fours = 0; break;
    case 2: fours = 1; break;
    default: fours = 2; break;
  }
  int rest = max_degree - 1 - 4 * fours;
  RVector r(static_cast<std::size_t>(rest / 3), 3);
  r.insert(r.end(), static_cast<std::size_t>(fours), 4);
  return r;
}

int sum_of(const RVector& r) {
  return std::accumulate(r.begin(), r.end(), 0);
}

std::optional<ChromaticWitness> find_witness(const Graph& g, int palette) {
  const int n = g.size();
  for (int v = 0; v < n; ++v) {
    std::vector<int> rest;
    rest.reserve(static_cast<std::size_t>(n) - 1);
    for (int u = 0; u < n; ++u)
      if (u != v) rest.push_back(u);
    InducedSubgraph sub = induced_subgraph(g, rest);
    std::optional<Coloring> c = find_k_coloring(sub.graph, palette);
    if (!c) continue;
    ChromaticWitness w;
    w.free_vertex = v;
    w.coloring.color.assign(static_cast<std::size_t>(n), -1);
    w.coloring.palette = palette;
    for (std::size_t i = 0; i < rest.size(); ++i)
      w.coloring.color[static_cast<std::size_t>(rest[i])] = c->color[i];
    return w;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// PartitionState plumbing
// ---------------------------------------------------------------------------

int PartitionState::sum_r() const { return sum_of(r); }

int PartitionState::house_count() const { return static_cast<int>(r.size()); }

const Club& PartitionState::active() const {
  if (active_club < 0 || active_club >= static_cast<int>(clubs.size()))
    throw invariant_error("partition state has no active club");
  return clubs[static_cast<std::size_t>(active_club)];
}

Club& PartitionState::active() {
  return const_cast<Club&>(std::as_const(*this).active());
}

std::vector<int> PartitionState::palette_base() const {
  std::vector<int> base(r.size() + 1, 0);
  for (std::size_t i = 0; i < r.size(); ++i) base[i + 1] = base[i] + r[i];
  return base;
}

std::string to_string(EngineMode mode) {
  return mode == EngineMode::theorem1 ? "theorem1" : "theorem2";
}

assumption_violation::assumption_violation(const std::string& claim_id,
                                           const std::string& what_arg,
                                           std::string snapshot_json)
    : error("assumption violation [" + claim_id + "]: " + what_arg),
      claim(claim_id),
      snapshot(std::move(snapshot_json)) {}

std::string state_snapshot_json(const PartitionState& s) {
  ordered_json j;
  j["graph_hash"] = graph_hash(s.graph);
  j["epoch"] = s.epoch;
  j["r"] = s.r;
  j["active_house"] = s.active_house;
  j["active_club"] = s.active_club;
  j["houses"] = s.houses;
  j["colors"] = s.color_of;
  ordered_json clubs = ordered_json::array();
  for (const Club& c : s.clubs) {
    ordered_json cj;
    cj["id"] = c.id;
    cj["house"] = c.house;
    cj["members"] = c.members;
    cj["activation_count"] = c.activation_count;
    cj["activation_moves"] = c.activation_moves;
    ordered_json sends = ordered_json::array();
    for (const Club::Send& e : c.sends)
      sends.push_back({{"member", e.member},
                       {"dest_club", e.dest_club},
                       {"move_index", e.move_index},
                       {"swap", e.swap}});
    cj["sends"] = sends;
    clubs.push_back(cj);
  }
  j["clubs"] = clubs;
  ordered_json log = ordered_json::array();
  for (const MoveRecord& m : s.move_log)
    log.push_back({{"index", m.index},
                   {"vertex", m.vertex},
                   {"from_house", m.from_house},
                   {"to_house", m.to_house},
                   {"from_club", m.from_club},
                   {"to_club", m.to_club},
                   {"swap", m.swap}});
  j["move_log"] = log;
  std::vector<int> moved, high;
  for (int v = 0; v < s.graph.size(); ++v) {
    if (v < static_cast<int>(s.moved.size()) && s.moved[static_cast<std::size_t>(v)])
      moved.push_back(v);
    if (v < static_cast<int>(s.high.size()) && s.high[static_cast<std::size_t>(v)])
      high.push_back(v);
  }
  j["moved"] = moved;
  j["high"] = high;
  return j.dump();
}

// ---------------------------------------------------------------------------
// shared helpers
// ---------------------------------------------------------------------------

namespace detail {

std::vector<int> landing_component(const Graph& g,
                                   const std::vector<int>& house_vertices,
                                   int v) {
  return component_of_within(g, v, house_vertices);
}

bool complete_between(const Graph& g, const std::vector<int>& a,
                      const std::vector<int>& b) {
  for (int x : a)
    for (int y : b) {
      if (x == y) return false;
      if (!g.adjacent(x, y)) return false;
    }
  return true;
}

std::optional<Coloring> color_placement(const Graph& g, const RVector& r,
                                        const std::vector<int>& house_of) {
  const int n = g.size();
  const int k = static_cast<int>(r.size());
  std::vector<int> base(r.size() + 1, 0);
  for (std::size_t i = 0; i < r.size(); ++i) base[i + 1] = base[i] + r[i];

  Coloring out;
  out.color.assign(static_cast<std::size_t>(n), -1);
  out.palette = base.back();

  for (int h = 0; h < k; ++h) {
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if (house_of[static_cast<std::size_t>(v)] == h) verts.push_back(v);
    for (const std::vector<int>& comp : components_within(g, verts)) {
      InducedSubgraph sub = induced_subgraph(g, comp);
      std::optional<Coloring> c;
      try {
        c = find_k_coloring(sub.graph, r[static_cast<std::size_t>(h)]);
      } catch (const refusal_error&) {
        return std::nullopt;  // over-budget component: treat as inextensible
      }
      if (!c) return std::nullopt;
      for (std::size_t i = 0; i < comp.size(); ++i)
        out.color[static_cast<std::size_t>(comp[i])] =
            base[static_cast<std::size_t>(h)] + c->color[i];
    }
  }
  if (!verify_coloring(g, out)) return std::nullopt;
  return out;
}

std::optional<Coloring> execute_relocations(
    const Graph& g, const RVector& r, std::vector<int> house_of,
    const std::vector<std::pair<int, int>>& relocations) {
  const int n = g.size();
  const int k = static_cast<int>(r.size());
  for (const auto& [v, h] : relocations) {
    if (v < 0 || v >= n || h < 0 || h >= k)
      throw contract_error("execute_relocations: relocation out of range");
    house_of[static_cast<std::size_t>(v)] = h;
  }
  return color_placement(g, r, house_of);
}

std::vector<std::pair<int, int>> relocations_toward(const PartitionState& s,
                                                    int x, int target_house) {
  const Club& a = s.active();
  if (std::binary_search(a.members.begin(), a.members.end(), x))
    return {{x, target_house}};
  if (a.members.empty())
    throw invariant_error("relocations_toward: active club is empty");
  return {{a.members.front(), s.house_of[static_cast<std::size_t>(x)]},
          {x, target_house}};
}

void throw_violation(const PartitionState& s, const std::string& claim_id,
                     const std::string& what) {
  throw assumption_violation(claim_id, what, state_snapshot_json(s));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// verify_state
// ---------------------------------------------------------------------------

namespace {

StateCheck fail(int property, const std::string& detail) {
  return StateCheck{false, property, detail};
}

bool house_coloring_proper(const PartitionState& s, int h,
                           bool skip_active_members) {
  const std::vector<int>& verts = s.houses[static_cast<std::size_t>(h)];
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      int a = verts[i], b = verts[j];
      int ca = s.color_of[static_cast<std::size_t>(a)];
      int cb = s.color_of[static_cast<std::size_t>(b)];
      if (skip_active_members && (ca == -1 || cb == -1)) continue;
      if (ca == cb && s.graph.adjacent(a, b)) return false;
    }
  return true;
}

}  // namespace

StateCheck verify_state(const PartitionState& s) {
  const Graph& g = s.graph;
  const int n = g.size();
  const int k = s.house_count();

  // Shape: the houses partition the vertices, colors sit inside the house
  // budgets, the active ids are coherent.
  if (k < 1 || static_cast<int>(s.houses.size()) != k ||
      static_cast<int>(s.house_of.size()) != n ||
      static_cast<int>(s.color_of.size()) != n)
    return fail(0, "malformed state arrays");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int h = 0; h < k; ++h)
    for (int v : s.houses[static_cast<std::size_t>(h)]) {
      if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
        return fail(0, "houses do not partition the vertices");
      seen[static_cast<std::size_t>(v)] = 1;
      if (s.house_of[static_cast<std::size_t>(v)] != h)
        return fail(0, "house_of disagrees with houses");
    }
  for (int v = 0; v < n; ++v)
    if (!seen[static_cast<std::size_t>(v)]) return fail(0, "vertex missing from houses");
  if (s.active_house < 0 || s.active_house >= k ||
      s.active_club < 0 || s.active_club >= static_cast<int>(s.clubs.size()))
    return fail(0, "no active club");

  const Club& active = s.clubs[static_cast<std::size_t>(s.active_club)];
  const int j = s.active_house;
  const int rj = s.r[static_cast<std::size_t>(j)];
  if (active.house != j) return fail(0, "active club in wrong house");

  // Property (2): the active component is a complete subgraph one larger
  // than the house budget, and the rest of the house is properly colored
  // within the budget.
  if (static_cast<int>(active.members.size()) != rj + 1)
    return fail(2, "active component has the wrong size");
  if (!is_clique(g, active.members))
    return fail(2, "active component is not complete");
  std::vector<int> comp =
      component_of_within(g, active.members.front(), s.houses[static_cast<std::size_t>(j)]);
  if (comp != active.members)
    return fail(2, "active members are not a component of their house");
  for (int v : s.houses[static_cast<std::size_t>(j)]) {
    bool in_active =
        std::binary_search(active.members.begin(), active.members.end(), v);
    int c = s.color_of[static_cast<std::size_t>(v)];
    if (in_active && c != -1) return fail(2, "active member carries a color");
    if (!in_active && (c < 0 || c >= rj))
      return fail(2, "house remainder not colored within budget");
  }
  if (!house_coloring_proper(s, j, true))
    return fail(2, "house remainder coloring is improper");

  // Property (1): every other house is colored with exactly its budget and
  // cannot do better.
  for (int h = 0; h < k; ++h) {
    if (h == j) continue;
    int rh = s.r[static_cast<std::size_t>(h)];
    for (int v : s.houses[static_cast<std::size_t>(h)]) {
      int c = s.color_of[static_cast<std::size_t>(v)];
      if (c < 0 || c >= rh) return fail(1, "house not colored within budget");
    }
    if (!house_coloring_proper(s, h, false))
      return fail(1, "stored house coloring is improper");
    InducedSubgraph sub = induced_subgraph(g, s.houses[static_cast<std::size_t>(h)]);
    if (chromatic_number_exact(sub.graph) != rh)
      return fail(1, "house chromatic number differs from its budget");
  }

  // Properties (3) and (4) over the active members.
  for (int v : active.members) {
    for (int h = 0; h < k; ++h) {
      if (h == j) continue;
      const std::vector<int>& house = s.houses[static_cast<std::size_t>(h)];
      int rh = s.r[static_cast<std::size_t>(h)];
      int d = g.degree_in(v, house);
      if (d == rh) {
        std::vector<int> land = component_of_within(g, v, house);
        if (static_cast<int>(land.size()) != rh + 1 || !is_clique(g, land))
          return fail(3, "exact-budget landing is not a complete component");
      }
      int threshold = std::max(1, d + 1 - rh);
      for (const std::vector<int>& cc : components_within(g, house)) {
        if (g.degree_in(v, cc) < threshold) continue;
        std::vector<int> with = cc;
        with.push_back(v);
        InducedSubgraph sub = induced_subgraph(g, with);
        bool colorable;
        try {
          colorable = is_k_colorable(sub.graph, rh);
        } catch (const refusal_error&) {
          return fail(4, "component too large for the exact check");
        }
        if (colorable)
          return fail(4, "heavy landing component stays colorable");
      }
    }
  }
  return StateCheck{};
}

// ---------------------------------------------------------------------------
// recolor_low_degree
// ---------------------------------------------------------------------------

Coloring recolor_low_degree(const PartitionState& s, int u, int dest_house) {
  const Graph& g = s.graph;
  const Club& active = s.active();
  if (dest_house < 0 || dest_house >= s.house_count() ||
      dest_house == s.active_house)
    throw contract_error("recolor_low_degree: bad destination house");
  if (!std::binary_search(active.members.begin(), active.members.end(), u))
    throw contract_error("recolor_low_degree: vertex is not an active member");
  const int re = s.r[static_cast<std::size_t>(dest_house)];
  const std::vector<int>& house = s.houses[static_cast<std::size_t>(dest_house)];
  if (g.degree_in(u, house) >= re)
    throw contract_error("recolor_low_degree: no spare color in destination");

  std::vector<int> base = s.palette_base();
  Coloring out;
  out.color.assign(static_cast<std::size_t>(g.size()), -1);
  out.palette = s.sum_r();
  for (int v = 0; v < g.size(); ++v) {
    int c = s.color_of[static_cast<std::size_t>(v)];
    if (c >= 0)
      out.color[static_cast<std::size_t>(v)] =
          base[static_cast<std::size_t>(s.house_of[static_cast<std::size_t>(v)])] + c;
  }
  // u takes a spare color of the destination house.
  std::vector<char> used(static_cast<std::size_t>(re), 0);
  for (int w : house)
    if (g.adjacent(u, w)) {
      int c = s.color_of[static_cast<std::size_t>(w)];
      if (c >= 0 && c < re) used[static_cast<std::size_t>(c)] = 1;
    }
  int cu = -1;
  for (int c = 0; c < re; ++c)
    if (!used[static_cast<std::size_t>(c)]) { cu = c; break; }
  if (cu < 0) throw invariant_error("recolor_low_degree: spare color vanished");
  out.color[static_cast<std::size_t>(u)] =
      base[static_cast<std::size_t>(dest_house)] + cu;
  // The shrunken active component is a complete graph of exactly the house
  // budget: give its members distinct house colors.
  int next = 0;
  for (int v : active.members) {
    if (v == u) continue;
    out.color[static_cast<std::size_t>(v)] =
        base[static_cast<std::size_t>(s.active_house)] + next++;
  }
  if (next > s.r[static_cast<std::size_t>(s.active_house)])
    throw invariant_error("recolor_low_degree: active remainder too large");
  if (!verify_coloring(g, out))
    throw invariant_error("recolor_low_degree: assembled coloring is improper");
  return out;
}

// ---------------------------------------------------------------------------
// recolor_claim
// ---------------------------------------------------------------------------

namespace {

const Club& claim_club(const PartitionState& s, int id, const char* who) {
  if (id < 0 || id >= static_cast<int>(s.clubs.size()))
    throw contract_error(std::string(who) + ": unknown club id");
  return s.clubs[static_cast<std::size_t>(id)];
}

std::optional<Coloring> run_recipe(const PartitionState& s,
                                   const std::vector<int>& placement,
                                   const std::vector<std::pair<int, int>>& relocs,
                                   const char* claim_id) {
  std::optional<Coloring> c =
      detail::execute_relocations(s.graph, s.r, placement, relocs);
  if (!c)
    detail::throw_violation(s, claim_id,
                            "recipe failed to extend to a full coloring");
  return c;
}

// The disjoint-palette coloring of everything outside `host`, taken straight
// from the state; active members outside the host get fresh distinct colors
// (their component shrank because the host contains an active member).
std::vector<int> outside_colors(const PartitionState& s,
                                const std::vector<int>& host) {
  std::vector<int> base = s.palette_base();
  std::vector<int> out(static_cast<std::size_t>(s.graph.size()), -1);
  for (int v = 0; v < s.graph.size(); ++v) {
    if (std::find(host.begin(), host.end(), v) != host.end()) continue;
    int c = s.color_of[static_cast<std::size_t>(v)];
    if (c >= 0)
      out[static_cast<std::size_t>(v)] =
          base[static_cast<std::size_t>(s.house_of[static_cast<std::size_t>(v)])] + c;
  }
  const Club& active = s.active();
  int rj = s.r[static_cast<std::size_t>(s.active_house)];
  int next = 0;
  for (int v : active.members) {
    if (std::find(host.begin(), host.end(), v) != host.end()) continue;
    if (next >= rj)
      throw contract_error(
          "mixed-host recipe needs an active member inside the host");
    out[static_cast<std::size_t>(v)] =
        base[static_cast<std::size_t>(s.active_house)] + next++;
  }
  return out;
}

}  // namespace

std::optional<Coloring> recolor_claim(const PartitionState& s, ClaimKind claim,
                                      const ClaimContext& ctx) {
  const Graph& g = s.graph;
  switch (claim) {
    case ClaimKind::C1: {
      const Club& active = s.active();
      const Club& y = claim_club(s, ctx.club_a, "recolor_claim C1");
      if (!std::binary_search(active.members.begin(), active.members.end(), ctx.u))
        throw contract_error("recolor_claim C1: u is not an active member");
      if (!is_clique(g, y.members))
        throw contract_error("recolor_claim C1: target club is not a clique");
      std::vector<int> rest;
      for (int m : active.members)
        if (m != ctx.u) rest.push_back(m);
      if (!detail::complete_between(g, rest, y.members))
        throw contract_error("recolor_claim C1: remainder not complete to club");
      int v = ctx.v;
      if (v < 0) {
        for (int cand : y.members)
          if (!g.adjacent(ctx.u, cand)) { v = cand; break; }
      }
      if (v < 0 || g.adjacent(ctx.u, v)) return std::nullopt;
      if (rest.empty())
        throw contract_error("recolor_claim C1: active club too small");
      std::vector<std::pair<int, int>> relocs = {
          {rest.front(), y.house}, {v, s.active_house}};
      return run_recipe(s, s.house_of, relocs, "claim1-recipe");
    }
    case ClaimKind::C2: {
      const Club& active = s.active();
      const Club& cs = claim_club(s, ctx.club_a, "recolor_claim C2");
      const Club& ct = claim_club(s, ctx.club_b, "recolor_claim C2");
      if (!detail::complete_between(g, active.members, cs.members) ||
          !detail::complete_between(g, active.members, ct.members))
        throw contract_error("recolor_claim C2: active club not complete to both");
      if (!std::binary_search(cs.members.begin(), cs.members.end(), ctx.u) ||
          !std::binary_search(ct.members.begin(), ct.members.end(), ctx.v))
        throw contract_error("recolor_claim C2: pair outside the clubs");
      if (active.members.size() < 2)
        throw contract_error("recolor_claim C2: active club too small");
      if (g.adjacent(ctx.u, ctx.v)) return std::nullopt;
      int w1 = active.members[0], w2 = active.members[1];
      std::vector<std::pair<int, int>> relocs;
      int ds = g.degree_in(ctx.v, s.houses[static_cast<std::size_t>(cs.house)]);
      if (ds < s.r[static_cast<std::size_t>(cs.house)]) {
        relocs = {{w1, ct.house}, {ctx.v, cs.house}};
      } else {
        relocs = {{w1, cs.house},
                  {ctx.u, s.active_house},
                  {w2, ct.house},
                  {ctx.v, s.active_house}};
      }
      return run_recipe(s, s.house_of, relocs, "claim2-recipe");
    }
    case ClaimKind::C3i:
    case ClaimKind::C3ii: {
      if (ctx.relocations.empty())
        throw contract_error("recolor_claim C3: no relocations supplied");
      if (ctx.u >= 0 && ctx.v >= 0 && g.adjacent(ctx.u, ctx.v))
        return std::nullopt;
      const std::vector<int>& placement =
          ctx.snapshot_house_of.empty() ? s.house_of : ctx.snapshot_house_of;
      if (static_cast<int>(placement.size()) != g.size())
        throw contract_error("recolor_claim C3: snapshot has the wrong size");
      return run_recipe(s, placement, ctx.relocations,
                        claim == ClaimKind::C3i ? "claim3-case-i-recipe"
                                                : "claim3-case-ii-recipe");
    }
    case ClaimKind::Join4:
    case ClaimKind::Join3: {
      const std::size_t want = claim == ClaimKind::Join4 ? 4 : 3;
      if (ctx.join_complete.size() != want || ctx.join_pair.size() != 2)
        throw contract_error("recolor_claim join: host has the wrong shape");
      std::vector<int> host = ctx.join_complete;
      host.insert(host.end(), ctx.join_pair.begin(), ctx.join_pair.end());
      std::set<int> distinct(host.begin(), host.end());
      if (distinct.size() != host.size())
        throw contract_error("recolor_claim join: repeated host vertex");
      for (int v : host)
        if (v < 0 || v >= g.size())
          throw contract_error("recolor_claim join: vertex out of range");
      if (!is_clique(g, ctx.join_complete))
        throw contract_error("recolor_claim join: complete part is not a clique");
      for (int p : ctx.join_pair)
        for (int c : ctx.join_complete)
          if (!g.adjacent(p, c))
            throw contract_error("recolor_claim join: pair not joined to part");
      if (g.adjacent(ctx.join_pair[0], ctx.join_pair[1])) return std::nullopt;

      std::vector<int> outside = outside_colors(s, host);
      const int palette = s.sum_r();
      MixedKind kind = claim == ClaimKind::Join4 ? MixedKind::K4E2 : MixedKind::K3E2;
      ListAssignment lists(host.size());
      for (std::size_t i = 0; i < host.size(); ++i) {
        for (int c = 0; c < palette; ++c) {
          bool clashes = false;
          for (int nb : g.neighbors(host[i])) {
            if (outside[static_cast<std::size_t>(nb)] == c) { clashes = true; break; }
          }
          if (!clashes) lists[i].push_back(c);
        }
      }
      Coloring mixed = color_mixed_join(kind, lists);
      Coloring out;
      out.color = outside;
      out.palette = palette;
      for (std::size_t i = 0; i < host.size(); ++i)
        out.color[static_cast<std::size_t>(host[i])] = mixed.color[i];
      if (!verify_coloring(g, out))
        detail::throw_violation(s, claim == ClaimKind::Join4 ? "join4-recipe"
                                                             : "join3-recipe",
                                "mixed-host extension is improper");
      return out;
    }
  }
  throw contract_error("recolor_claim: unknown claim kind");
}

// ---------------------------------------------------------------------------
// clubgroups
// ---------------------------------------------------------------------------

namespace {

struct GroupNode {
  std::vector<int> members;
  int house = -1;
  int tracked_id = -1;
};

void bron_kerbosch(const std::vector<std::vector<char>>& adj,
                   std::vector<int>& r, std::vector<int> p, std::vector<int> x,
                   std::vector<std::vector<int>>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  std::vector<int> p_copy = p;
  for (int v : p_copy) {
    r.push_back(v);
    std::vector<int> np, nx;
    for (int w : p)
      if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) np.push_back(w);
    for (int w : x)
      if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) nx.push_back(w);
    bron_kerbosch(adj, r, np, nx, out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

std::vector<Clubgroup> clubgroups(const PartitionState& s) {
  const Graph& g = s.graph;
  std::vector<GroupNode> nodes;
  const std::vector<int>& active_members = s.active().members;
  for (int h = 0; h < s.house_count(); ++h) {
    for (const std::vector<int>& comp :
         components_within(g, s.houses[static_cast<std::size_t>(h)])) {
      bool qualifies = false;
      if (h == s.active_house && comp == active_members) {
        qualifies = true;  // the active component always participates
      } else if (static_cast<int>(comp.size()) == s.r[static_cast<std::size_t>(h)] &&
                 is_clique(g, comp)) {
        qualifies = true;
      }
      if (!qualifies) continue;
      GroupNode node;
      node.members = comp;
      node.house = h;
      for (const Club& c : s.clubs)
        if (c.house == h && c.members == comp) { node.tracked_id = c.id; break; }
      nodes.push_back(std::move(node));
    }
  }

  const int m = static_cast<int>(nodes.size());
  std::vector<std::vector<char>> adj(
      static_cast<std::size_t>(m), std::vector<char>(static_cast<std::size_t>(m), 0));
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      if (nodes[static_cast<std::size_t>(a)].house ==
          nodes[static_cast<std::size_t>(b)].house)
        continue;
      if (detail::complete_between(g, nodes[static_cast<std::size_t>(a)].members,
                                   nodes[static_cast<std::size_t>(b)].members)) {
        adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
        adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;
      }
    }

  std::vector<int> p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> cliques;
  std::vector<int> r;
  bron_kerbosch(adj, r, p, {}, cliques);

  std::vector<Clubgroup> out;
  for (std::vector<int>& q : cliques) {
    std::sort(q.begin(), q.end(), [&](int a, int b) {
      const GroupNode& na = nodes[static_cast<std::size_t>(a)];
      const GroupNode& nb = nodes[static_cast<std::size_t>(b)];
      return std::make_pair(na.house, na.members) <
             std::make_pair(nb.house, nb.members);
    });
    Clubgroup cg;
    for (int idx : q) {
      const GroupNode& node = nodes[static_cast<std::size_t>(idx)];
      cg.member_sets.push_back(node.members);
      cg.club_ids.push_back(node.tracked_id);
      cg.spanned_houses.push_back(node.house);
    }
    std::sort(cg.spanned_houses.begin(), cg.spanned_houses.end());
    cg.spanned_houses.erase(
        std::unique(cg.spanned_houses.begin(), cg.spanned_houses.end()),
        cg.spanned_houses.end());
    cg.spans_all = static_cast<int>(cg.spanned_houses.size()) == s.house_count();
    cg.big = static_cast<int>(cg.spanned_houses.size()) == s.house_count() - 1;
    out.push_back(std::move(cg));
  }
  std::sort(out.begin(), out.end(), [](const Clubgroup& a, const Clubgroup& b) {
    return a.member_sets < b.member_sets;
  });
  return out;
}

}  // namespace cliquecolor
