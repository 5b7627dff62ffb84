#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cliquecolor {

// One acceptance suite's aggregated outcome.
struct SuiteReport {
  std::string name;
  int passed = 0;
  int failed = 0;
  double seconds = 0.0;
  std::vector<std::string> failures;  // first few failure descriptions
  bool ok() const { return failed == 0; }
};

// Join classification against exhaustive choosability: K_t joined to every
// isomorphism class of B, for t = 4,5 with |B| <= 5 and t = 6 with |B| <= 4.
SuiteReport run_classification_suite();

// f_choosable against f_choosable_naive on random graphs with at most 7
// vertices, under both size functions d-1 and d. Instances are pre-screened
// so the naive oracle's full enumeration stays inside its budget.
SuiteReport run_smallpot_suite(std::uint64_t seed, int count);

// color_mixed_join on random contract-satisfying list assignments, `count`
// per host shape; every returned coloring is re-verified against the host
// and the lists.
SuiteReport run_mixed_join_suite(std::uint64_t seed, int count);

// build_partition on the fixture set; every built state must pass
// verify_state.
SuiteReport run_mozhan_build_suite();

// The engine corpus: certified-critical fixtures in both modes plus `count`
// random witnessed instances. Every outcome is checked — verified colorings
// within max_degree-1 colors, verified cliques of size at least
// max_degree - max(r_i), violations only on non-certified inputs and always
// with a replayable snapshot — along with byte-identical repeatability.
// When `activation` is non-null it receives a companion report asserting
// that no run records a fourth club activation unless a recoloring branch
// converted the run into a coloring.
SuiteReport run_dichotomy_suite(std::uint64_t seed, int count,
                                SuiteReport* activation = nullptr);

// Random instances satisfying the lopsided degree hypothesis: the
// backtracking finder must succeed, agree with plain exhaustive enumeration
// on existence, and return a valid independent transversal.
SuiteReport run_transversal_suite(std::uint64_t seed, int count);

// Fixture-built maximum-clique covers: hitting sets returned and verified on
// the legal shapes, structural_error on the triple-overlap shape, absent
// outside the clique-number regime.
SuiteReport run_hitting_suite();

// End-to-end color_or_clique: the 25-vertex cycle-blowup fixture, K17, and
// `count` random colorable instances with max_degree >= 13.
SuiteReport run_pipeline_suite(std::uint64_t seed, int count);

}  // namespace cliquecolor
