#pragma once

// Shared machinery of the partition builder and the moving process. Not
// installed; everything here is an implementation detail.

#include <optional>
#include <utility>
#include <vector>

#include "cliquecolor/graph.hpp"
#include "cliquecolor/mozhan.hpp"

namespace cliquecolor::detail {

// Component of v inside house_vertices + v itself, sorted, including v.
std::vector<int> landing_component(const Graph& g,
                                   const std::vector<int>& house_vertices,
                                   int v);

bool complete_between(const Graph& g, const std::vector<int>& a,
                      const std::vector<int>& b);

// Re-colors every house component of the placement from scratch with its
// exact house budget and assembles a global coloring over the disjoint house
// palettes. Absent when some component is not colorable within its budget.
std::optional<Coloring> color_placement(const Graph& g, const RVector& r,
                                        const std::vector<int>& house_of);

// Applies relocations (vertex -> house) to a copy of the placement, then
// color_placement. The workhorse behind every claim recipe.
std::optional<Coloring> execute_relocations(
    const Graph& g, const RVector& r, std::vector<int> house_of,
    const std::vector<std::pair<int, int>>& relocations);

// Relocations that move x from its current club into the house of a target
// club: when x is not an active member, a lowest active member is relocated
// into x's club first so that the active component shrinks.
std::vector<std::pair<int, int>> relocations_toward(const PartitionState& s,
                                                    int x, int target_house);

// Property (3)/(4) maintenance over the active members. Returns a coloring
// when an exploit converts a violation into one; re-enters the repair loop
// (resetting club bookkeeping, epoch++) when a landing component is too
// tangled to color directly. Throws assumption_violation when budgets run
// out.
std::optional<Coloring> enforce_properties(PartitionState& s);

// The potential-reducing repair loop: given the free (uncolored) vertex and
// its house, relocates over-degree members of its component away until the
// component is complete, transferring the free role along. Returns a full
// coloring when a relocation lands under budget or a house becomes cheaper
// than its budget. On success the state has a fresh active club.
std::optional<Coloring> repair_to_active(PartitionState& s, int free_vertex,
                                         int house);

// Fresh club bookkeeping for the given active component (epoch start): one
// tracked club, empty histories, cleared move markers and trail.
void reset_clubs(PartitionState& s, std::vector<int> active_members);

// Global coloring straight off a fully colored state (disjoint house
// palettes). Throws invariant_error when the stored colors are improper.
Coloring assemble_full(const PartitionState& s);

[[noreturn]] void throw_violation(const PartitionState& s,
                                  const std::string& claim_id,
                                  const std::string& what);

}  // namespace cliquecolor::detail
