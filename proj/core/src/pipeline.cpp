#include <algorithm>

#include "cliquecolor/errors.hpp"
#include "cliquecolor/oracles.hpp"
#include "cliquecolor/pipeline.hpp"
#include "cliquecolor/transversal.hpp"

namespace cliquecolor {

namespace {

Outcome wrap_coloring(const Graph& g, Coloring c) {
  if (!verify_coloring(g, c))
    throw invariant_error("pipeline produced an improper coloring");
  Outcome out;
  out.kind = OutcomeKind::coloring;
  out.coloring = std::move(c);
  return out;
}

Outcome wrap_clique(const Graph& g, std::vector<int> verts, bool high_only) {
  std::sort(verts.begin(), verts.end());
  CliqueCertificate cert{std::move(verts), high_only};
  if (!verify_clique(g, cert))
    throw invariant_error("pipeline produced an invalid clique certificate");
  Outcome out;
  out.kind = OutcomeKind::clique;
  out.clique = std::move(cert);
  return out;
}

std::vector<int> map_vertices(const std::vector<int>& verts,
                              const std::vector<int>& to_parent) {
  std::vector<int> out;
  out.reserve(verts.size());
  for (int v : verts) out.push_back(to_parent[static_cast<std::size_t>(v)]);
  return out;
}

Outcome exact_dichotomy(const Graph& g, EngineMode mode);

// Δ(h) > 13 and χ(h) = Δ(h): remove an independent set chosen per the
// maximum-clique structure and re-analyze at Δ−1. A clique comes back one
// size short of this level's bound only if it dodged the hitting set, which
// the hitting set's verification rules out.
Outcome peel_once(const Graph& h, EngineMode mode) {
  const int dh = h.max_degree();
  std::vector<int> omega = max_clique_exact(h);
  if (static_cast<int>(omega.size()) >= dh - 3)
    return wrap_clique(h, std::move(omega), false);

  std::vector<int> seed;
  if (static_cast<int>(omega.size()) == dh - 4) {
    std::optional<std::vector<int>> hit = hitting_set(h);
    if (!hit)
      throw invariant_error("hitting set absent in the guaranteed regime");
    seed = std::move(*hit);
  }
  std::vector<int> indep = maximal_independent_set(h, seed);
  std::sort(indep.begin(), indep.end());

  std::vector<int> keep;
  for (int v = 0; v < h.size(); ++v)
    if (!std::binary_search(indep.begin(), indep.end(), v)) keep.push_back(v);
  InducedSubgraph rest = induced_subgraph(h, keep);

  Outcome rec = exact_dichotomy(rest.graph, mode);
  if (rec.kind == OutcomeKind::clique) {
    std::vector<int> mapped =
        map_vertices(rec.clique->vertices, rest.to_parent);
    if (static_cast<int>(mapped.size()) < dh - 3)
      throw invariant_error(
          "peel returned a clique below this level's bound");
    return wrap_clique(h, std::move(mapped), false);
  }
  if (rec.kind == OutcomeKind::coloring)
    throw invariant_error(
        "peel produced a coloring contradicting the established chromatic "
        "number");
  return rec;  // violation diagnostics pass through unchanged
}

Outcome exact_dichotomy(const Graph& g, EngineMode mode) {
  const int delta = g.max_degree();
  if (delta <= 2)  // paths, cycles, matchings: report the true maximum clique
    return wrap_clique(g, max_clique_exact(g), false);

  if (std::optional<Coloring> c = find_k_coloring(g, delta - 1))
    return wrap_coloring(g, std::move(*c));
  if (!is_k_colorable(g, delta))  // χ = Δ+1: complete graph or odd cycle
    return wrap_clique(g, max_clique_exact(g), false);

  // χ(g) = Δ exactly; shrink to a vertex-critical core.
  InducedSubgraph core = critical_subgraph(g, delta);
  const Graph& h = core.graph;
  const int dh = h.max_degree();

  if (dh < delta)  // χ(h) = Δ = Δ(h)+1: complete graph or odd cycle again
    return wrap_clique(g, map_vertices(max_clique_exact(h), core.to_parent),
                       false);

  if (dh > 13) {
    Outcome out = peel_once(h, mode);
    if (out.kind == OutcomeKind::clique)
      return wrap_clique(
          g, map_vertices(out.clique->vertices, core.to_parent),
          out.clique->high_only);
    return out;
  }

  if (dh >= 7) {
    RVector r = default_r_vector(dh);
    std::optional<ChromaticWitness> w = find_witness(h, sum_of(r));
    if (!w)
      throw invariant_error("critical core has no coloring witness");
    Outcome out = run_engine(h, r, *w, mode);
    if (out.kind == OutcomeKind::clique)
      return wrap_clique(
          g, map_vertices(out.clique->vertices, core.to_parent),
          out.clique->high_only);
    if (out.kind == OutcomeKind::coloring)
      throw invariant_error(
          "engine colored a graph whose chromatic number forbids it");
    return out;
  }

  // Δ of the critical core below the engine regime: exact maximum clique.
  return wrap_clique(g, max_clique_exact(g), false);
}

}  // namespace

Outcome color_or_clique(const Graph& g, EngineMode mode) {
  if (g.size() == 0) return wrap_coloring(g, Coloring{{}, 0});
  const int delta = g.max_degree();

  Coloring heuristic = dsatur_coloring(g);
  if (heuristic.palette <= delta - 1)
    return wrap_coloring(g, std::move(heuristic));

  if (delta >= 13) {
    std::vector<int> greedy = greedy_clique(g);
    if (static_cast<int>(greedy.size()) >= delta - 3)
      return wrap_clique(g, std::move(greedy), false);
  }

  return exact_dichotomy(g, mode);
}

}  // namespace cliquecolor
