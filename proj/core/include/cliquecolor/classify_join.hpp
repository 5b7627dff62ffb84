#pragma once

#include "cliquecolor/graph.hpp"

namespace cliquecolor {

// Closed-form prediction of d1-choosability for the join of a complete graph
// on t vertices with b, valid for t >= 4 (smaller t rejected): the join is
// NOT d1-choosable exactly when omega(b) >= |b| - 1, or t == 4 and b is the
// edgeless triple or the claw, or t == 5 and b is the edgeless triple.
// Pure formula plus an exact clique number on b; no list enumeration.
bool classify_join(int t, const Graph& b);

}  // namespace cliquecolor
