#include <algorithm>
#include <set>
#include <tuple>

#include "cliquecolor/mozhan.hpp"
#include "cliquecolor/oracles.hpp"
#include "mozhan_internal.hpp"

namespace cliquecolor {

namespace {

using detail::complete_between;
using detail::execute_relocations;
using detail::relocations_toward;
using detail::throw_violation;

// ---------------------------------------------------------------------------
// club plumbing
// ---------------------------------------------------------------------------

int find_tracked_club(const PartitionState& s, int house,
                      const std::vector<int>& members) {
  for (const Club& c : s.clubs)
    if (c.house == house && c.members == members) return c.id;
  return -1;
}

void erase_member(std::vector<int>& sorted, int v) {
  sorted.erase(std::find(sorted.begin(), sorted.end(), v));
}

void insert_member(std::vector<int>& sorted, int v) {
  sorted.insert(std::upper_bound(sorted.begin(), sorted.end(), v), v);
}

void move_between_houses(PartitionState& s, int v, int dest) {
  std::vector<int>& from =
      s.houses[static_cast<std::size_t>(s.house_of[static_cast<std::size_t>(v)])];
  erase_member(from, v);
  insert_member(s.houses[static_cast<std::size_t>(dest)], v);
  s.house_of[static_cast<std::size_t>(v)] = dest;
}

// Club members at the moment right after move `move_idx` (-1 = build),
// reconstructed by undoing later arrivals and departures.
std::vector<int> members_at(const PartitionState& s, int club_id,
                            int move_idx) {
  std::vector<int> members = s.clubs[static_cast<std::size_t>(club_id)].members;
  for (auto it = s.move_log.rbegin(); it != s.move_log.rend(); ++it) {
    if (it->index <= move_idx) break;
    if (it->to_club == club_id) erase_member(members, it->vertex);
    if (it->from_club == club_id) insert_member(members, it->vertex);
  }
  return members;
}

const std::vector<int>& placement_after(const PartitionState& s, int move_idx) {
  std::size_t pos = static_cast<std::size_t>(move_idx + 1);
  if (pos >= s.trail_house_of.size())
    throw invariant_error("placement trail is missing an entry");
  return s.trail_house_of[pos];
}

// Applies one relocation of the process (normal send or clubgroup-internal
// swap), with all bookkeeping: houses, colors, club histories, move log and
// placement trail. `landing` is the complete component u joins, without u.
int apply_move(PartitionState& s, int u, int dest_house,
               const std::vector<int>& landing, bool swap) {
  const int idx = static_cast<int>(s.move_log.size());
  const int from_house = s.house_of[static_cast<std::size_t>(u)];
  const int from_club = s.active_club;

  int dest_id = find_tracked_club(s, dest_house, landing);
  if (dest_id < 0) {
    Club fresh;
    fresh.id = static_cast<int>(s.clubs.size());
    fresh.house = dest_house;
    fresh.members = landing;
    s.clubs.push_back(std::move(fresh));
    dest_id = s.clubs.back().id;
  }

  Club& from = s.clubs[static_cast<std::size_t>(from_club)];
  from.sends.push_back(Club::Send{u, dest_id, idx, swap});
  erase_member(from.members, u);

  Club& dest = s.clubs[static_cast<std::size_t>(dest_id)];
  insert_member(dest.members, u);
  dest.activation_count++;
  dest.activation_moves.push_back(idx);

  // The new active component sheds its colors; the shrunken old component is
  // a complete graph of exactly its budget and takes fresh distinct colors.
  for (int m : dest.members) s.color_of[static_cast<std::size_t>(m)] = -1;
  int next = 0;
  for (int m : from.members) s.color_of[static_cast<std::size_t>(m)] = next++;

  move_between_houses(s, u, dest_house);
  s.moved[static_cast<std::size_t>(u)] = 1;
  s.active_house = dest_house;
  s.active_club = dest_id;
  s.move_log.push_back(MoveRecord{idx, u, from_house, dest_house, from_club,
                                  dest_id, swap});
  s.trail_house_of.push_back(s.house_of);
  return dest_id;
}

// ---------------------------------------------------------------------------
// completeness monitor
// ---------------------------------------------------------------------------

// A pair of clubs must never change completeness. Both directions reduce to
// one premise on the relocated member u of club R: R minus u is complete to
// some other clique club Y while u misses a vertex of Y. Run before a move
// (R = departing club) and after it (R = receiving club); any hit either
// re-colors the graph or is a genuine violation.
std::optional<Coloring> claim1_monitor(const PartitionState& s, int club_id,
                                       int u) {
  const Graph& g = s.graph;
  const Club& r_club = s.clubs[static_cast<std::size_t>(club_id)];
  std::vector<int> rest;
  for (int m : r_club.members)
    if (m != u) rest.push_back(m);
  if (rest.empty()) return std::nullopt;
  for (const Club& y : s.clubs) {
    if (y.id == club_id || y.members.empty()) continue;
    if (!is_clique(g, y.members)) continue;
    if (!complete_between(g, rest, y.members)) continue;
    int miss = -1;
    for (int cand : y.members)
      if (cand != u && !g.adjacent(u, cand)) { miss = cand; break; }
    if (miss < 0) continue;
    std::vector<std::pair<int, int>> relocs = {{rest.front(), y.house},
                                               {miss, r_club.house}};
    std::optional<Coloring> c =
        execute_relocations(g, s.r, s.house_of, relocs);
    if (!c)
      throw_violation(s, "claim1",
                      "pair completeness changed and the exchange recipe "
                      "failed to re-color");
    return c;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// double-send analysis
// ---------------------------------------------------------------------------

struct PairEdge {
  int x = -1;
  int y = -1;
  std::vector<std::pair<int, int>> relocs;
  const std::vector<int>* placement = nullptr;
};

std::optional<Coloring> derive_edges(const PartitionState& s,
                                     const std::vector<PairEdge>& edges,
                                     const char* claim_id) {
  const Graph& g = s.graph;
  for (const PairEdge& e : edges) {
    if (g.adjacent(e.x, e.y)) continue;
    std::optional<Coloring> c =
        execute_relocations(g, s.r, *e.placement, e.relocs);
    if (!c)
      throw_violation(s, claim_id, "edge derivation recipe failed to extend");
    return c;
  }
  return std::nullopt;
}

void require_clique(const PartitionState& s, const std::vector<int>& verts,
                    const char* who) {
  if (!is_clique(s.graph, verts))
    throw_violation(s, "claim3-structure",
                    std::string(who) + " is not a complete subgraph");
}

// The club's last send repeated an earlier destination. Depending on whether
// the two sends were adjacent or one apart, re-derive the forced adjacencies
// between the sender and the receiver; any genuinely missing edge re-colors
// the graph, and full adjacency contradicts the send filter.
std::optional<Coloring> analyze_double_send(const PartitionState& s,
                                            const Club& x, int i1, int i2) {
  const Graph& g = s.graph;
  const int house_a = x.house;
  const int r_a = s.r[static_cast<std::size_t>(house_a)];
  const Club& dest =
      s.clubs[static_cast<std::size_t>(x.sends[static_cast<std::size_t>(i1)].dest_club)];
  const int house_b = dest.house;
  const int r_b = s.r[static_cast<std::size_t>(house_b)];
  const int gap = i2 - i1;

  auto arrival_of = [&](int activation) {
    int mv = x.activation_moves[static_cast<std::size_t>(activation)];
    if (mv < 0)
      throw_violation(s, "claim3-roles", "activation without an arrival move");
    return s.move_log[static_cast<std::size_t>(mv)].vertex;
  };

  const std::vector<int> originals =
      members_at(s, x.id, x.activation_moves[static_cast<std::size_t>(i1)]);
  if (static_cast<int>(originals.size()) != r_a + 1)
    throw_violation(s, "claim3-roles", "sender had the wrong size");
  require_clique(s, originals, "the sender at the first send");

  const std::vector<int>& now = x.members;
  const std::vector<int>& dest_now = dest.members;
  if (static_cast<int>(dest_now.size()) != r_b)
    throw_violation(s, "claim3-roles", "receiver has the wrong size");
  require_clique(s, dest_now, "the receiver");
  require_clique(s, now, "the sender");

  auto contains = [](const std::vector<int>& sorted, int v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
  };

  if (gap == 1) {
    const int a1 = x.sends[static_cast<std::size_t>(i1)].member;
    const int a2 = x.sends[static_cast<std::size_t>(i1 + 1)].member;
    const int v1 = arrival_of(i1 + 1);
    const int v2 = arrival_of(i1 + 2);
    std::vector<int> o;
    for (int m : originals)
      if (m != a1 && m != a2) o.push_back(m);
    if (static_cast<int>(o.size()) != r_a - 1 || !contains(dest_now, a1) ||
        !contains(dest_now, a2))
      throw_violation(s, "claim3-roles", "send pair does not match histories");
    std::vector<int> expect = o;
    insert_member(expect, v1);
    insert_member(expect, v2);
    if (expect != now)
      throw_violation(s, "claim3-roles", "sender membership drifted");
    std::vector<int> mid = o;  // sender right after the second arrival
    insert_member(mid, a2);
    insert_member(mid, v1);
    require_clique(s, mid, "the sender between the sends");

    std::vector<int> b_part;
    for (int b : dest_now)
      if (b != a1 && b != a2) b_part.push_back(b);
    const int spare = o.empty() ? v1 : o.front();

    const std::vector<int>& after_second =
        placement_after(s, x.sends[static_cast<std::size_t>(i1 + 1)].move_index);
    std::vector<PairEdge> edges;
    edges.push_back({a1, v1, {{a1, house_a}}, &after_second});
    edges.push_back(
        {v2, a1, {{spare, house_b}, {a1, house_a}}, &s.house_of});
    edges.push_back(
        {v2, a2, {{spare, house_b}, {a2, house_a}}, &s.house_of});
    for (int m : now)
      for (int b : b_part)
        edges.push_back({m, b, {{m, house_b}}, &s.house_of});
    if (std::optional<Coloring> c = derive_edges(s, edges, "claim3-recipe"))
      return c;
    throw_violation(s, "claim3-complete",
                    "sender turned out complete to the repeated receiver");
  }

  if (gap == 2) {
    const int a1 = x.sends[static_cast<std::size_t>(i1)].member;
    const int a_mid = x.sends[static_cast<std::size_t>(i1 + 1)].member;
    const int a3 = x.sends[static_cast<std::size_t>(i1 + 2)].member;
    const int v1 = arrival_of(i1 + 1);
    const int v2 = arrival_of(i1 + 2);
    const int v3 = arrival_of(i1 + 3);
    std::vector<int> o;
    for (int m : originals)
      if (m != a1 && m != a_mid && m != a3) o.push_back(m);
    if (static_cast<int>(o.size()) != r_a - 2 || !contains(dest_now, a1) ||
        !contains(dest_now, a3))
      throw_violation(s, "claim3-roles", "send triple does not match histories");
    std::vector<int> expect = o;
    insert_member(expect, v1);
    insert_member(expect, v2);
    insert_member(expect, v3);
    if (expect != now)
      throw_violation(s, "claim3-roles", "sender membership drifted");
    std::vector<int> mid = o;  // sender right before its third send
    insert_member(mid, a3);
    insert_member(mid, v1);
    insert_member(mid, v2);
    require_clique(s, mid, "the sender before the repeated send");

    std::vector<int> b_part;
    for (int b : dest_now)
      if (b != a1 && b != a3) b_part.push_back(b);
    const int spare = o.empty() ? v1 : o.front();
    int low_unmoved = -1;  // lowest original other than a1: unmoved then
    for (int m : originals)
      if (m != a1) { low_unmoved = m; break; }

    const std::vector<int>& after_first_arrival = placement_after(
        s, x.activation_moves[static_cast<std::size_t>(i1 + 1)]);
    const std::vector<int>& after_third_send =
        placement_after(s, x.sends[static_cast<std::size_t>(i1 + 2)].move_index);
    std::vector<PairEdge> edges;
    edges.push_back({a1, v1,
                     {{low_unmoved, house_b}, {a1, house_a}},
                     &after_first_arrival});
    edges.push_back({a1, v2, {{a1, house_a}}, &after_third_send});
    edges.push_back(
        {a1, v3, {{spare, house_b}, {a1, house_a}}, &s.house_of});
    edges.push_back(
        {a3, v3, {{spare, house_b}, {a3, house_a}}, &s.house_of});
    for (int m : now)
      for (int b : b_part)
        edges.push_back({m, b, {{m, house_b}}, &s.house_of});
    if (std::optional<Coloring> c = derive_edges(s, edges, "claim3-recipe"))
      return c;
    throw_violation(s, "claim3-complete",
                    "sender turned out complete to the repeated receiver");
  }

  throw_violation(s, "claim3-gap",
                  "repeated destination with too many sends in between");
}

// Runs at every activation, before the club sends anything: find the first
// repeated destination among its non-swap sends and analyze it; otherwise a
// fourth activation without a repeat is itself a violation.
std::optional<Coloring> scan_activation(const PartitionState& s,
                                        const Club& x) {
  const int m = static_cast<int>(x.sends.size());
  for (int j = 0; j < m; ++j) {
    if (x.sends[static_cast<std::size_t>(j)].swap) continue;
    for (int i = 0; i < j; ++i) {
      if (x.sends[static_cast<std::size_t>(i)].swap) continue;
      if (x.sends[static_cast<std::size_t>(i)].dest_club !=
          x.sends[static_cast<std::size_t>(j)].dest_club)
        continue;
      return analyze_double_send(s, x, i, j);
    }
  }
  if (x.activation_count >= 4)
    throw_violation(s, "activation-bound",
                    "fourth activation without a repeated destination");
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// clubgroup helpers (theorem2)
// ---------------------------------------------------------------------------

Clubgroup group_of_active(const PartitionState& s) {
  const std::vector<int>& active_members = s.active().members;
  std::vector<Clubgroup> all = clubgroups(s);
  const Clubgroup* best = nullptr;
  std::size_t best_size = 0;
  for (const Clubgroup& cg : all) {
    bool has_active = false;
    std::size_t total = 0;
    for (const std::vector<int>& ms : cg.member_sets) {
      total += ms.size();
      if (ms == active_members) has_active = true;
    }
    if (!has_active) continue;
    if (!best || total > best_size ||
        (total == best_size && cg.member_sets < best->member_sets)) {
      best = &cg;
      best_size = total;
    }
  }
  if (!best) throw invariant_error("active club missing from every clubgroup");
  return *best;
}

std::vector<int> group_union(const Clubgroup& cg) {
  std::vector<int> u;
  for (const std::vector<int>& ms : cg.member_sets)
    u.insert(u.end(), ms.begin(), ms.end());
  std::sort(u.begin(), u.end());
  return u;
}

// ---------------------------------------------------------------------------
// move selection
// ---------------------------------------------------------------------------

struct Candidate {
  MoveChoice choice;
  bool resend = false;
  bool high = false;
  int dest_club = -1;
};

std::vector<Candidate> enumerate_candidates(const PartitionState& s) {
  const Graph& g = s.graph;
  const Club& active = s.active();
  std::vector<Candidate> out;
  for (int u : active.members) {
    if (s.moved[static_cast<std::size_t>(u)]) continue;
    for (int e = 0; e < s.house_count(); ++e) {
      if (e == s.active_house) continue;
      const std::vector<int>& house = s.houses[static_cast<std::size_t>(e)];
      const int re = s.r[static_cast<std::size_t>(e)];
      if (g.degree_in(u, house) != re) continue;
      std::vector<int> land = component_of_within(g, u, house);
      if (static_cast<int>(land.size()) != re + 1 || !is_clique(g, land))
        continue;  // a property violation; maintenance handles it
      erase_member(land, u);
      if (complete_between(g, active.members, land)) continue;  // send filter
      Candidate c;
      c.choice = MoveChoice{u, e, land};
      c.high = s.high[static_cast<std::size_t>(u)] != 0;
      c.dest_club = find_tracked_club(s, e, land);
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::optional<MoveChoice> pick_candidate(const PartitionState& s,
                                         EngineMode mode,
                                         std::vector<Candidate> cands) {
  if (cands.empty()) return std::nullopt;
  // Destinations the club already used; theorem2 pools the whole clubgroup.
  std::set<int> used;
  auto add_sends = [&](const Club& c) {
    for (const Club::Send& e : c.sends)
      if (!e.swap) used.insert(e.dest_club);
  };
  if (mode == EngineMode::theorem1) {
    add_sends(s.active());
  } else {
    Clubgroup cg = group_of_active(s);
    for (int id : cg.club_ids)
      if (id >= 0) add_sends(s.clubs[static_cast<std::size_t>(id)]);
  }
  for (Candidate& c : cands)
    c.resend = c.dest_club >= 0 && used.count(c.dest_club) > 0;

  const Candidate* best = nullptr;
  auto key = [&](const Candidate& c) {
    return std::make_tuple(c.resend ? 0 : 1,
                           mode == EngineMode::theorem2 ? (c.high ? 0 : 1) : 0,
                           c.choice.member, c.choice.dest_house);
  };
  for (const Candidate& c : cands)
    if (!best || key(c) < key(*best)) best = &c;
  return best->choice;
}

// ---------------------------------------------------------------------------
// availability swaps (theorem2)
// ---------------------------------------------------------------------------

struct SwapResult {
  bool performed = false;
  std::optional<Coloring> coloring;
};

// When no active member can move, another club of the clubgroup may hold an
// unmoved member with a legal destination outside the group. Activity is
// passed to that club by relocating a cleanly-landing active member into it;
// the member's own move then happens on a later step.
SwapResult try_swap(PartitionState& s) {
  const Graph& g = s.graph;
  Clubgroup cg = group_of_active(s);
  const std::vector<int>& active_members = s.active().members;
  std::set<std::vector<int>> group_sets(cg.member_sets.begin(),
                                        cg.member_sets.end());

  for (std::size_t ci = 0; ci < cg.member_sets.size(); ++ci) {
    const std::vector<int>& club = cg.member_sets[ci];
    if (club == active_members) continue;
    int house_x = s.house_of[static_cast<std::size_t>(club.front())];
    for (int x : club) {
      if (s.moved[static_cast<std::size_t>(x)]) continue;
      bool movable = false;
      for (int e = 0; e < s.house_count() && !movable; ++e) {
        if (e == house_x) continue;
        const std::vector<int>& house = s.houses[static_cast<std::size_t>(e)];
        if (g.degree_in(x, house) != s.r[static_cast<std::size_t>(e)]) continue;
        std::vector<int> land = component_of_within(g, x, house);
        if (static_cast<int>(land.size()) != s.r[static_cast<std::size_t>(e)] + 1 ||
            !is_clique(g, land))
          continue;
        erase_member(land, x);
        if (group_sets.count(land)) continue;         // stays inside the group
        if (complete_between(g, club, land)) continue;  // send filter
        movable = true;
      }
      if (!movable) continue;
      // x could move once its club is active: find a clean lander.
      for (int w : active_members) {
        if (s.moved[static_cast<std::size_t>(w)]) continue;
        if (g.degree_in(w, s.houses[static_cast<std::size_t>(house_x)]) !=
            s.r[static_cast<std::size_t>(house_x)])
          continue;
        std::vector<int> wl = component_of_within(g, w, s.houses[static_cast<std::size_t>(house_x)]);
        erase_member(wl, w);
        if (wl != club) continue;
        apply_move(s, w, house_x, club, true);
        SwapResult out;
        out.performed = true;
        out.coloring = scan_activation(s, s.active());
        return out;
      }
    }
  }
  return SwapResult{};
}

}  // namespace

// ---------------------------------------------------------------------------
// public selection and stepping
// ---------------------------------------------------------------------------

std::optional<MoveChoice> choose_move(const PartitionState& s,
                                      EngineMode mode) {
  return pick_candidate(s, mode, enumerate_candidates(s));
}

StepResult step(PartitionState& s, EngineMode mode) {
  const Graph& g = s.graph;
  // Low-degree exit and property maintenance, repeated until the state is
  // stable (property repairs can hand activity to a different component).
  while (true) {
    for (int u : s.active().members)
      for (int e = 0; e < s.house_count(); ++e) {
        if (e == s.active_house) continue;
        if (g.degree_in(u, s.houses[static_cast<std::size_t>(e)]) <
            s.r[static_cast<std::size_t>(e)])
          return StepResult{StepKind::coloring_found,
                            recolor_low_degree(s, u, e)};
      }
    const int epoch_before = s.epoch;
    if (std::optional<Coloring> c = detail::enforce_properties(s))
      return StepResult{StepKind::coloring_found, std::move(c)};
    if (s.epoch == epoch_before) break;
  }

  std::optional<MoveChoice> mv = choose_move(s, mode);
  if (!mv) {
    if (mode == EngineMode::theorem2) {
      SwapResult sw = try_swap(s);
      if (sw.coloring)
        return StepResult{StepKind::coloring_found, std::move(sw.coloring)};
      if (sw.performed) return StepResult{StepKind::moved, std::nullopt};
    }
    return StepResult{StepKind::terminal, std::nullopt};
  }

  if (std::optional<Coloring> c = claim1_monitor(s, s.active_club, mv->member))
    return StepResult{StepKind::coloring_found, std::move(c)};
  apply_move(s, mv->member, mv->dest_house, mv->landing, false);
  if (std::optional<Coloring> c = claim1_monitor(s, s.active_club, mv->member))
    return StepResult{StepKind::coloring_found, std::move(c)};
  if (std::optional<Coloring> c = scan_activation(s, s.active()))
    return StepResult{StepKind::coloring_found, std::move(c)};
  return StepResult{StepKind::moved, std::nullopt};
}

// ---------------------------------------------------------------------------
// terminal analyses
// ---------------------------------------------------------------------------

namespace {

Outcome coloring_outcome(const PartitionState& s, Coloring c) {
  if (!verify_coloring(s.graph, c))
    throw invariant_error("engine produced an improper coloring");
  Outcome out;
  out.kind = OutcomeKind::coloring;
  out.coloring = std::move(c);
  return out;
}

Outcome clique_outcome(const PartitionState& s, std::vector<int> verts,
                       bool high_only) {
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  CliqueCertificate cert{std::move(verts), high_only};
  if (!verify_clique(s.graph, cert))
    throw invariant_error("engine produced an invalid clique certificate");
  Outcome out;
  out.kind = OutcomeKind::clique;
  out.clique = std::move(cert);
  return out;
}

// Pairwise adjacency of two blocked receivers via the exchange recipes: the
// active club is complete to both, so either the missing pair re-colors the
// graph or the pair is genuinely adjacent.
std::optional<Coloring> join_blocked_pair(const PartitionState& s,
                                          const std::vector<int>& cs,
                                          const std::vector<int>& ct,
                                          int house_s, int house_t) {
  const Graph& g = s.graph;
  const std::vector<int>& active = s.active().members;
  if (active.size() < 2)
    throw_violation(s, "claim2-recipe", "active club too small to exchange");
  const int w1 = active[0], w2 = active[1];
  for (int u : cs)
    for (int v : ct) {
      if (g.adjacent(u, v)) continue;
      std::vector<std::pair<int, int>> relocs;
      if (g.degree_in(v, s.houses[static_cast<std::size_t>(house_s)]) <
          s.r[static_cast<std::size_t>(house_s)]) {
        relocs = {{w1, house_t}, {v, house_s}};
      } else {
        relocs = {{w1, house_s},
                  {u, s.active_house},
                  {w2, house_t},
                  {v, s.active_house}};
      }
      std::optional<Coloring> c =
          execute_relocations(g, s.r, s.house_of, relocs);
      if (!c)
        throw_violation(s, "claim2-recipe",
                        "blocked receivers miss an edge and the exchange "
                        "failed to re-color");
      return c;
    }
  return std::nullopt;
}

// No member of the active club can move: every exact-budget landing must be
// complete to the club, and those landings plus the club assemble into one
// certificate (pairwise adjacency via the exchange recipes).
Outcome blocked_terminal(const PartitionState& s) {
  const Graph& g = s.graph;
  const Club& active = s.active();
  if (s.house_count() == 2)
    return clique_outcome(s, active.members, false);

  int u_star = -1;
  for (int u : active.members)
    if (!s.moved[static_cast<std::size_t>(u)]) { u_star = u; break; }
  if (u_star < 0)
    throw_violation(s, "terminal-no-unmoved",
                    "every member of the final active club has moved");

  std::vector<std::vector<int>> blocked;
  std::vector<int> blocked_houses;
  for (int e = 0; e < s.house_count(); ++e) {
    if (e == s.active_house) continue;
    const std::vector<int>& house = s.houses[static_cast<std::size_t>(e)];
    const int re = s.r[static_cast<std::size_t>(e)];
    const int d = g.degree_in(u_star, house);
    if (d < re)
      throw_violation(s, "terminal-low-degree",
                      "terminal state left a low-degree exit unused");
    if (d != re) continue;
    std::vector<int> land = component_of_within(g, u_star, house);
    if (static_cast<int>(land.size()) != re + 1 || !is_clique(g, land))
      throw_violation(s, "terminal-landing",
                      "terminal landing is not a complete component");
    erase_member(land, u_star);
    if (!complete_between(g, active.members, land))
      throw_violation(s, "terminal-legal-move",
                      "terminal state still had a legal move");
    blocked.push_back(std::move(land));
    blocked_houses.push_back(e);
  }

  std::vector<int> cert = active.members;
  for (std::size_t a = 0; a < blocked.size(); ++a) {
    for (std::size_t b = a + 1; b < blocked.size(); ++b) {
      // already-verified pairs stay verified; missing edges re-color
      if (std::optional<Coloring> c =
              join_blocked_pair(s, blocked[a], blocked[b], blocked_houses[a],
                                blocked_houses[b]))
        return coloring_outcome(s, std::move(*c));
    }
    cert.insert(cert.end(), blocked[a].begin(), blocked[a].end());
  }
  return clique_outcome(s, std::move(cert), false);
}

// Theorem2 terminal refinement when the clubgroup spans all houses but one:
// reconstruct the first crossing of the group boundary (arrival v, departure
// u, arrival w) and join the missing house's club to the whole group through
// mixed-host extensions; every genuinely missing edge re-colors the graph.
std::optional<Outcome> boundary_analysis(PartitionState& s,
                                         const Clubgroup& cg) {
  const Graph& g = s.graph;
  std::set<int> group_ids;
  for (int id : cg.club_ids)
    if (id >= 0) group_ids.insert(id);

  const MoveRecord* v_move = nullptr;
  const MoveRecord* u_move = nullptr;
  const MoveRecord* w_move = nullptr;
  for (const MoveRecord& m : s.move_log) {
    if (m.swap) continue;
    bool to_in = group_ids.count(m.to_club) > 0;
    bool from_in = group_ids.count(m.from_club) > 0;
    if (to_in && !from_in) {
      if (!v_move) v_move = &m;
      else if (!w_move) w_move = &m;
    }
    if (from_in && !to_in && !u_move) u_move = &m;
  }
  if (!v_move || !u_move || !w_move) return std::nullopt;

  const int v = v_move->vertex;
  const int u = u_move->vertex;
  const int w = w_move->vertex;
  int miss_house = -1;
  for (int h = 0; h < s.house_count(); ++h)
    if (!std::binary_search(cg.spanned_houses.begin(), cg.spanned_houses.end(), h))
      miss_house = h;
  const Club& c_club = s.clubs[static_cast<std::size_t>(u_move->to_club)];

  auto roles_bad = [&](const std::string& why) -> std::optional<Outcome> {
    throw_violation(s, "claim4new-roles", why);
  };
  if (s.high[static_cast<std::size_t>(v)]) return roles_bad("first arrival is high");
  if (s.high[static_cast<std::size_t>(u)]) return roles_bad("first departure is high");
  if (s.high[static_cast<std::size_t>(w)]) return roles_bad("second arrival is high");
  if (c_club.house != miss_house || v_move->from_house != miss_house)
    return roles_bad("boundary crossings avoid the unspanned house");
  if (static_cast<int>(c_club.members.size()) !=
          s.r[static_cast<std::size_t>(miss_house)] ||
      !is_clique(g, c_club.members))
    return roles_bad("the boundary club is not a clique of its budget size");
  int high_in_c = 0;
  for (int b : c_club.members)
    if (s.high[static_cast<std::size_t>(b)]) ++high_in_c;
  if (high_in_c > 1) return roles_bad("the boundary club has two high members");

  const std::vector<int> union_a = group_union(cg);
  const std::vector<int>& active = s.active().members;
  bool anchored = std::binary_search(active.begin(), active.end(), w) ||
                  std::binary_search(active.begin(), active.end(), v);
  if (!anchored)
    throw_violation(s, "claim4new-no-swap",
                    "no boundary role sits in the active club");

  auto derive_to_c = [&](int xvert) -> std::optional<Coloring> {
    for (int c : c_club.members) {
      if (c == xvert || g.adjacent(xvert, c)) continue;
      std::optional<Coloring> col = execute_relocations(
          g, s.r, s.house_of, relocations_toward(s, xvert, miss_house));
      if (!col)
        throw_violation(s, "claim4new-recipe",
                        "boundary edge derivation failed to extend");
      return col;
    }
    return std::nullopt;
  };
  if (std::optional<Coloring> c = derive_to_c(v))
    return coloring_outcome(s, std::move(*c));
  if (std::optional<Coloring> c = derive_to_c(w))
    return coloring_outcome(s, std::move(*c));
  for (int a : union_a) {
    if (a == u || g.adjacent(u, a)) continue;
    std::optional<Coloring> col = execute_relocations(
        g, s.r, s.house_of, relocations_toward(s, a, miss_house));
    if (!col)
      throw_violation(s, "claim4new-recipe",
                      "boundary edge derivation failed to extend");
    return coloring_outcome(s, std::move(*col));
  }

  // u, v, w are now pairwise adjacent and joined to the group / the club.
  // Remaining pairs go through the mixed hosts: low club members anchor a
  // triangle host, the lone high member (if any) a four-clique host.
  std::vector<int> lows, highs;
  for (int b : c_club.members) {
    if (b == u) continue;
    (s.high[static_cast<std::size_t>(b)] ? highs : lows).push_back(b);
  }
  auto join_with = [&](const std::vector<int>& k_part,
                       int a, int b) -> std::optional<Coloring> {
    ClaimContext ctx;
    ctx.join_complete = k_part;
    ctx.join_pair = {a, b};
    try {
      return recolor_claim(s, k_part.size() == 3 ? ClaimKind::Join3
                                                 : ClaimKind::Join4, ctx);
    } catch (const contract_error& e) {
      throw_violation(s, "claim4new-lists",
                      std::string("mixed host rejected: ") + e.what());
    }
  };
  int joined_low = -1;
  for (int b : lows) {
    for (int a : union_a) {
      if (g.adjacent(a, b)) continue;
      std::optional<Coloring> c = join_with({u, v, w}, a, b);
      if (c) return coloring_outcome(s, std::move(*c));
      throw_violation(s, "claim4new-recipe", "triangle host did not extend");
    }
    joined_low = b;
  }
  for (int b : highs) {
    if (joined_low < 0)
      throw_violation(s, "claim4new-roles",
                      "no second low member to anchor the four-clique host");
    for (int a : union_a) {
      if (g.adjacent(a, b)) continue;
      std::optional<Coloring> c = join_with({u, v, w, joined_low}, a, b);
      if (c) return coloring_outcome(s, std::move(*c));
      throw_violation(s, "claim4new-recipe", "four-clique host did not extend");
    }
  }

  std::vector<int> cert = union_a;
  cert.insert(cert.end(), c_club.members.begin(), c_club.members.end());
  return clique_outcome(s, std::move(cert), false);
}

// The clubgroup refinements execute host recipes that need every house
// budget in {3,4}: smaller budgets cannot supply the anchor roles.
bool refinement_grade(const RVector& r) {
  int fours = 0;
  for (int v : r) {
    if (v == 4) ++fours;
    else if (v != 3) return false;
  }
  return fours <= 2;
}

Outcome terminal_outcome(PartitionState& s, EngineMode mode) {
  if (mode == EngineMode::theorem1) return blocked_terminal(s);
  if (!refinement_grade(s.r)) return blocked_terminal(s);

  Clubgroup cg = group_of_active(s);
  if (cg.spans_all) return clique_outcome(s, group_union(cg), false);
  if (cg.big) {
    const int threshold = s.sum_r() - 4;
    if (threshold >= 2) {
      std::vector<int> high_members;
      for (int v : group_union(cg))
        if (s.high[static_cast<std::size_t>(v)]) high_members.push_back(v);
      if (static_cast<int>(high_members.size()) >= threshold)
        return clique_outcome(s, std::move(high_members), true);
    }
    if (std::optional<Outcome> out = boundary_analysis(s, cg)) return *out;
  }
  // Small group or no boundary history to work with: fall back to the plain
  // blocked-club certificate, which is always sound.
  return blocked_terminal(s);
}

}  // namespace

// ---------------------------------------------------------------------------
// run_engine
// ---------------------------------------------------------------------------

Outcome run_engine(const Graph& g, const RVector& r,
                   const ChromaticWitness& witness, EngineMode mode) {
  Outcome out;
  std::optional<PartitionState> state;
  try {
    BuildResult built = build_partition(g, r, witness);
    if (built.coloring) {
      out.kind = OutcomeKind::coloring;
      out.coloring = std::move(built.coloring);
      if (!verify_coloring(g, *out.coloring))
        throw invariant_error("builder produced an improper coloring");
      return out;
    }
    state = std::move(built.state);
    PartitionState& s = *state;
    const long long budget =
        static_cast<long long>(g.size()) * (g.edge_count() + 2) + 64;
    long long steps = 0;
    while (true) {
      if (++steps > budget)
        detail::throw_violation(s, "move-budget",
                                "process exceeded its move budget");
      StepResult res = step(s, mode);
      if (res.kind == StepKind::coloring_found) {
        out = coloring_outcome(s, std::move(*res.coloring));
        break;
      }
      if (res.kind == StepKind::terminal) {
        out = terminal_outcome(s, mode);
        break;
      }
    }
  } catch (const assumption_violation& av) {
    out.kind = OutcomeKind::violation;
    out.claim = av.claim;
    out.detail = av.what();
    out.snapshot = av.snapshot;
  }
  if (state) {
    out.stats.moves = static_cast<int>(state->move_log.size());
    out.stats.epochs = state->epoch;
    for (const Club& c : state->clubs) {
      out.stats.max_activation_count =
          std::max(out.stats.max_activation_count, c.activation_count);
      for (std::size_t j = 0; j < c.sends.size() && !out.stats.claim3_fired; ++j)
        for (std::size_t i = 0; i < j; ++i)
          if (!c.sends[i].swap && !c.sends[j].swap &&
              c.sends[i].dest_club == c.sends[j].dest_club)
            out.stats.claim3_fired = true;
    }
  }
  return out;
}

}  // namespace cliquecolor
