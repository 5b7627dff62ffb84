#include "cliquecolor/classify_join.hpp"

#include "cliquecolor/errors.hpp"
#include "cliquecolor/oracles.hpp"
#include "cliquecolor/small_graphs.hpp"

namespace cliquecolor {

bool classify_join(int t, const Graph& b) {
  if (t < 4) throw contract_error("classify_join: requires t >= 4");
  const int nb = b.size();
  const int omega = static_cast<int>(max_clique_exact(b).size());
  if (omega >= nb - 1) return false;
  if (t == 4 && nb == 3 && is_edgeless(b)) return false;
  if (t == 4 && is_claw(b)) return false;
  if (t == 5 && nb == 3 && is_edgeless(b)) return false;
  return true;
}

}  // namespace cliquecolor
