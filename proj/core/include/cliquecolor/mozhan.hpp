#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cliquecolor/errors.hpp"
#include "cliquecolor/graph.hpp"

namespace cliquecolor {

// ---------------------------------------------------------------------------
// r-vectors
// ---------------------------------------------------------------------------

using RVector = std::vector<int>;

// Splits max_degree-1 into parts from {3,4} with at most two 4s: all 3s when
// max_degree = 1 (mod 3), one 4 when = 2 (mod 3), two 4s when = 0 (mod 3).
// Requires max_degree >= 7 so that at least two parts exist.
RVector default_r_vector(int max_degree);

int sum_of(const RVector& r);

// ---------------------------------------------------------------------------
// witnesses
// ---------------------------------------------------------------------------

// Certifies that the graph needs more than `palette` colors only because of
// one vertex: `coloring` has color[free_vertex] == -1 and properly colors
// everything else with exactly `palette` color ids available.
struct ChromaticWitness {
  int free_vertex = -1;
  Coloring coloring;
};

// Finds a witness with the exact oracle: the lowest vertex whose removal
// leaves the graph `palette`-colorable. Absent when no vertex works.
std::optional<ChromaticWitness> find_witness(const Graph& g, int palette);

// ---------------------------------------------------------------------------
// partition state
// ---------------------------------------------------------------------------

// A club is a tracked component with an identity that survives membership
// churn: histories and activation counts attach to the object, not to the
// vertex set.
struct Club {
  int id = -1;
  int house = -1;
  std::vector<int> members;  // sorted, current
  int activation_count = 0;
  // Move index whose landing activated the club; -1 marks the initial build.
  std::vector<int> activation_moves;
  struct Send {
    int member = -1;
    int dest_club = -1;
    int move_index = -1;
    bool swap = false;  // clubgroup-internal relocation, exempt from send rules
  };
  std::vector<Send> sends;
};

struct MoveRecord {
  int index = -1;
  int vertex = -1;
  int from_house = -1;
  int to_house = -1;
  int from_club = -1;  // tracked club ids; -1 when the source was untracked
  int to_club = -1;
  bool swap = false;
};

struct PartitionState {
  Graph graph;
  RVector r;
  std::vector<std::vector<int>> houses;  // sorted vertex lists per clubhouse
  std::vector<int> house_of;             // vertex -> house index
  // vertex -> color in [0, r_h) within its house; -1 for the active members.
  std::vector<int> color_of;
  int active_house = -1;
  int active_club = -1;  // index into clubs
  std::vector<Club> clubs;
  std::vector<char> moved;
  std::vector<char> high;  // degree == max_degree(graph)
  std::vector<MoveRecord> move_log;
  // trail_house_of[0] is the freshly built placement; entry m+1 is the
  // placement right after move m. Historical recipes re-color from these.
  std::vector<std::vector<int>> trail_house_of;
  int epoch = 0;

  int sum_r() const;
  int house_count() const;
  const Club& active() const;
  Club& active();
  // house -> first color id of its block in the disjoint global palette
  std::vector<int> palette_base() const;
};

// JSON text with houses, colorings, club histories and the move log; attached
// to violation outcomes so they can be replayed and inspected.
std::string state_snapshot_json(const PartitionState& s);

// ---------------------------------------------------------------------------
// outcomes
// ---------------------------------------------------------------------------

enum class EngineMode { theorem1, theorem2 };

std::string to_string(EngineMode mode);

enum class OutcomeKind { coloring, clique, violation };

struct EngineStats {
  int moves = 0;
  int max_activation_count = 0;
  int epochs = 0;
  bool claim3_fired = false;
};

struct Outcome {
  OutcomeKind kind = OutcomeKind::violation;
  std::optional<Coloring> coloring;          // kind == coloring
  std::optional<CliqueCertificate> clique;   // kind == clique
  std::string claim;                         // violation id
  std::string detail;
  std::string snapshot;                      // violation replay JSON
  EngineStats stats;
};

// Internal signalling channel for assumption violations; run_engine converts
// it into a violation Outcome, tests can catch it directly.
struct assumption_violation : error {
  assumption_violation(const std::string& claim_id, const std::string& what_arg,
                       std::string snapshot_json);
  std::string claim;
  std::string snapshot;
};

// ---------------------------------------------------------------------------
// building and verifying states
// ---------------------------------------------------------------------------

struct BuildResult {
  std::optional<PartitionState> state;
  // Short-circuit: the free vertex fit below some house budget, yielding a
  // full sum(r)-coloring without any process at all.
  std::optional<Coloring> coloring;
};

// Groups the witness color classes into houses by potential-reducing local
// search, places the free vertex, and repairs until the active component is
// complete. Throws contract_error on an invalid witness, assumption_violation
// when the free vertex exceeds every house budget.
BuildResult build_partition(const Graph& g, const RVector& r,
                            const ChromaticWitness& witness);

struct StateCheck {
  bool ok = true;
  int violated_property = 0;  // 1..4, first failure
  std::string detail;
};

// Checks the four partition properties from scratch: (1) exact house
// chromatic numbers, (2) complete active component plus colored remainder,
// (3) every exact-degree landing forms a complete component, (4) heavy
// landings are never (r_i)-colorable.
StateCheck verify_state(const PartitionState& s);

// ---------------------------------------------------------------------------
// the moving process
// ---------------------------------------------------------------------------

struct MoveChoice {
  int member = -1;
  int dest_house = -1;
  std::vector<int> landing;  // the complete component the member lands on
};

// Deterministic candidate selection: unmoved active members with an exact
// neighbor budget in the destination house, landing component complete and
// not complete to the active club; preference to destinations the club (or,
// in theorem2 mode, its clubgroup) has already sent to, then (theorem2) to
// high members, then lowest member, lowest house. Absent at termination.
std::optional<MoveChoice> choose_move(const PartitionState& s, EngineMode mode);

enum class StepKind { moved, coloring_found, terminal };

struct StepResult {
  StepKind kind = StepKind::terminal;
  std::optional<Coloring> coloring;
};

// One process step: low-degree exit first, then property maintenance, then a
// chosen move with full bookkeeping (club histories, completeness monitor,
// double-send analysis on each activation, availability swaps in theorem2
// mode). Throws assumption_violation when a process invariant breaks.
StepResult step(PartitionState& s, EngineMode mode);

// The "member fits under the budget" exit: colors u inside dest_house with a
// spare color, colors the shrunken active component, reuses everything else.
Coloring recolor_low_degree(const PartitionState& s, int u, int dest_house);

// ---------------------------------------------------------------------------
// claim recolorings
// ---------------------------------------------------------------------------

enum class ClaimKind { C1, C2, C3i, C3ii, Join4, Join3 };

struct ClaimContext {
  // The pair whose nonadjacency the recipe exploits (C1: u in the active
  // club, v in club_a; C2: u in club_a, v in club_b).
  int u = -1;
  int v = -1;
  int club_a = -1;
  int club_b = -1;
  // C3 recipes: explicit relocations (vertex -> house) evaluated on a
  // historical placement (empty snapshot means the current one).
  std::vector<std::pair<int, int>> relocations;
  std::vector<int> snapshot_house_of;
  // Join3/Join4: the mutually adjacent part and the nonadjacent pair of the
  // mixed host, as vertices of the graph.
  std::vector<int> join_complete;
  std::vector<int> join_pair;
};

// Returns absent when the exploited pair is actually adjacent (the caller
// records the edge as established); otherwise runs the exchange-and-extend
// recipe and returns a verified full coloring. Malformed contexts throw
// contract_error; a recipe that fails under a genuine nonadjacency throws
// assumption_violation.
std::optional<Coloring> recolor_claim(const PartitionState& s, ClaimKind claim,
                                      const ClaimContext& ctx);

// ---------------------------------------------------------------------------
// clubgroups
// ---------------------------------------------------------------------------

struct Clubgroup {
  std::vector<std::vector<int>> member_sets;  // sorted vertices per club
  std::vector<int> club_ids;                  // tracked ids, -1 untracked
  std::vector<int> spanned_houses;            // sorted
  bool big = false;        // spans all houses but one
  bool spans_all = false;  // spans every house
};

// Maximal groups of pairwise-complete clique clubs. Qualifying clubs are the
// active component plus every component of a house that is a clique of
// exactly the house size budget, tracked or not.
std::vector<Clubgroup> clubgroups(const PartitionState& s);

// ---------------------------------------------------------------------------
// the engine
// ---------------------------------------------------------------------------

// Certificate transformer: a witnessed input is converted into a verified
// sum(r)-coloring, a verified clique (plain, or high-vertex-only in theorem2
// mode), or a diagnosed assumption violation with a replayable snapshot.
Outcome run_engine(const Graph& g, const RVector& r,
                   const ChromaticWitness& witness, EngineMode mode);

}  // namespace cliquecolor
