#pragma once

#include <string>

#include "cliquecolor/graph.hpp"
#include "cliquecolor/list_coloring.hpp"
#include "cliquecolor/rng.hpp"

namespace cliquecolor {

// The two host shapes used by the engine's recoloring branches: a complete
// part joined to a non-adjacent pair.
enum class MixedKind { K4E2, K3E2 };

std::string to_string(MixedKind kind);

// Host graph layout: complete part on vertices 0..k-1 (k = 4 or 3), the two
// mutually non-adjacent vertices at k and k+1, every cross edge present.
Graph mixed_join_host(MixedKind kind);

// Colors the host from `lists`. Contract: |L(v)| >= d(v) - 1 for every v and
// |L(w)| >= d(w) for at least one complete-part vertex w; for K3E2
// additionally |L(x)| >= d(x) for at least one of the non-adjacent pair.
// Violations throw contract_error. The direct route runs first: give the
// non-adjacent pair a shared color, then finish greedily ending at a
// full-list complete vertex; if that stalls, exact search takes over. A
// coloring always exists under the contract, so search failure throws
// invariant_error. The result passes verify_coloring and respects the lists.
Coloring color_mixed_join(MixedKind kind, const ListAssignment& lists);

// Random assignment meeting the color_mixed_join contract: a color universe
// of 5..9 colors, a randomly designated full-list complete vertex (and
// full-list pair vertex for K3E2), every list at its required minimum except
// for occasional oversizing by one.
ListAssignment random_mixed_join_lists(MixedKind kind, Rng& rng);

}  // namespace cliquecolor
