#pragma once

#include "cliquecolor/graph.hpp"
#include "cliquecolor/mozhan.hpp"

namespace cliquecolor {

// Full dichotomy: a verified proper coloring with at most Δ−1 colors, or a
// verified clique certificate. The certificate size meets Δ−3 when Δ ≥ 13;
// for 7 ≤ Δ < 13 it meets Δ−4; below that the clique is a true maximum
// clique. Heuristic fast paths first; otherwise exact desk-scale analysis
// (which raises refusal_error beyond the configured limits), peeling
// hitting sets while Δ > 13 and running the partition engine at the base.
// `mode` selects the engine's strategy when the engine is reached.
Outcome color_or_clique(const Graph& g,
                        EngineMode mode = EngineMode::theorem1);

}  // namespace cliquecolor
