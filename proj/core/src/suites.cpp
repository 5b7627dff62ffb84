#include "cliquecolor/suites.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cliquecolor/certificate.hpp"
#include "cliquecolor/classify_join.hpp"
#include "cliquecolor/constructions.hpp"
#include "cliquecolor/errors.hpp"
#include "cliquecolor/graph.hpp"
#include "cliquecolor/list_coloring.hpp"
#include "cliquecolor/mixed_join.hpp"
#include "cliquecolor/mozhan.hpp"
#include "cliquecolor/oracles.hpp"
#include "cliquecolor/pipeline.hpp"
#include "cliquecolor/rng.hpp"
#include "cliquecolor/small_graphs.hpp"
#include "cliquecolor/transversal.hpp"

namespace cliquecolor {

namespace {

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

void record(SuiteReport& rep, bool ok, const std::string& why) {
  if (ok) {
    ++rep.passed;
    return;
  }
  ++rep.failed;
  if (rep.failures.size() < 32) rep.failures.push_back(why);
}

Graph random_graph(Rng& rng, int n, double p) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(p)) g.add_edge(u, v);
  return g;
}

Graph random_graph_with_edges(Rng& rng, int n, int m) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  rng.shuffle(pairs);
  Graph g(n);
  for (int i = 0; i < m && i < static_cast<int>(pairs.size()); ++i)
    g.add_edge(pairs[static_cast<std::size_t>(i)].first,
               pairs[static_cast<std::size_t>(i)].second);
  return g;
}

bool respects_lists(const Coloring& c, const ListAssignment& lists) {
  for (std::size_t v = 0; v < lists.size(); ++v) {
    const int color = c.color[v];
    if (std::find(lists[v].begin(), lists[v].end(), color) == lists[v].end())
      return false;
  }
  return true;
}

bool high_claim_holds(const Graph& g, const CliqueCertificate& cert) {
  if (!cert.high_only) return true;
  const int delta = g.max_degree();
  return std::all_of(cert.vertices.begin(), cert.vertices.end(),
                     [&](int v) { return g.degree(v) == delta; });
}

}  // namespace

// ---------------------------------------------------------------------------
// classification
// ---------------------------------------------------------------------------

SuiteReport run_classification_suite() {
  SuiteReport rep;
  rep.name = "classification";
  Timer timer;
  struct Range {
    int t;
    int max_b;
  };
  const Range ranges[] = {{4, 5}, {5, 5}, {6, 4}};
  for (const Range& range : ranges) {
    for (int nb = 0; nb <= range.max_b; ++nb) {
      const std::vector<Graph> classes =
          nb == 0 ? std::vector<Graph>{edgeless_graph(0)}
                  : graph_isomorphism_classes(nb);
      int index = 0;
      for (const Graph& b : classes) {
        const bool predicted = classify_join(range.t, b);
        const bool actual = is_d1_choosable(join(complete_graph(range.t), b));
        std::ostringstream why;
        why << "t=" << range.t << " |B|=" << nb << " class#" << index
            << ": formula=" << (predicted ? "true" : "false")
            << " enumeration=" << (actual ? "true" : "false");
        record(rep, predicted == actual, why.str());
        ++index;
      }
    }
  }
  rep.seconds = timer.seconds();
  return rep;
}

// ---------------------------------------------------------------------------
// small pot
// ---------------------------------------------------------------------------

namespace {

double binomial_approx(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Number of list assignments the naive oracle enumerates for f on g.
double naive_enumeration_cost(const Graph& g, const ListSizeFunction& f) {
  const int universe = std::accumulate(f.begin(), f.end(), 0);
  double product = 1.0;
  for (int v = 0; v < g.size(); ++v) {
    product *= binomial_approx(universe, f[static_cast<std::size_t>(v)]);
    if (product > 1e18) return product;
  }
  return product;
}

}  // namespace

SuiteReport run_smallpot_suite(std::uint64_t seed, int count) {
  SuiteReport rep;
  rep.name = "smallpot";
  Timer timer;
  Rng rng(seed);
  const double kCostCap = 2e5;  // well under the naive oracle's refusal budget
  for (int i = 0; i < count; ++i) {
    Graph g;
    bool found = false;
    for (int attempt = 0; attempt < 500 && !found; ++attempt) {
      const int n = rng.range(1, 7);
      const int max_m = n * (n - 1) / 2;
      const int m = rng.range(0, std::min(n, max_m));
      g = random_graph_with_edges(rng, n, m);
      if (naive_enumeration_cost(g, degree_minus_one_sizes(g)) > kCostCap)
        continue;
      if (naive_enumeration_cost(g, degree_sizes(g)) > kCostCap) continue;
      found = true;
    }
    if (!found) {
      record(rep, false,
             "instance " + std::to_string(i) + ": generator exhausted");
      continue;
    }
    bool ok = true;
    std::ostringstream why;
    for (int variant = 0; variant < 2 && ok; ++variant) {
      const ListSizeFunction f =
          variant == 0 ? degree_minus_one_sizes(g) : degree_sizes(g);
      const bool fast = f_choosable(g, f);
      const bool naive = f_choosable_naive(g, f);
      if (fast != naive) {
        ok = false;
        why << "instance " << i << " (n=" << g.size()
            << ", m=" << g.edge_count() << ", f=" << (variant == 0 ? "d-1" : "d")
            << "): f_choosable=" << (fast ? "true" : "false")
            << " naive=" << (naive ? "true" : "false");
      }
    }
    record(rep, ok, why.str());
  }
  rep.seconds = timer.seconds();
  return rep;
}

// ---------------------------------------------------------------------------
// mixed joins
// ---------------------------------------------------------------------------

SuiteReport run_mixed_join_suite(std::uint64_t seed, int count) {
  SuiteReport rep;
  rep.name = "mixed-join";
  Timer timer;
  Rng rng(seed);
  for (MixedKind kind : {MixedKind::K4E2, MixedKind::K3E2}) {
    const Graph host = mixed_join_host(kind);
    for (int i = 0; i < count; ++i) {
      const ListAssignment lists = random_mixed_join_lists(kind, rng);
      const std::string label =
          to_string(kind) + " instance " + std::to_string(i);
      try {
        const Coloring c = color_mixed_join(kind, lists);
        record(rep, verify_coloring(host, c) && respects_lists(c, lists),
               label + ": coloring failed re-verification");
      } catch (const error& e) {
        record(rep, false, label + ": " + e.what());
      }
    }
  }
  rep.seconds = timer.seconds();
  return rep;
}

// ---------------------------------------------------------------------------
// partition building
// ---------------------------------------------------------------------------

SuiteReport run_mozhan_build_suite() {
  SuiteReport rep;
  rep.name = "mozhan";
  Timer timer;
  struct Fixture {
    const char* name;
    Graph g;
    RVector r;
  };
  std::vector<Fixture> fixtures;
  fixtures.push_back({"k5", complete_graph(5), {2, 2}});
  fixtures.push_back(
      {"c5-join-k2", join(cycle_graph(5), complete_graph(2)), {2, 1, 1}});
  fixtures.push_back({"k13", complete_graph(13), {3, 3, 3, 3}});
  fixtures.push_back({"k14", complete_graph(14), {3, 3, 3, 4}});
  fixtures.push_back({"moser", moser_spindle(), {2, 1}});
  fixtures.push_back({"k4", complete_graph(4), {2, 1}});
  fixtures.push_back({"o5", construct_o5(), {2, 2}});
  fixtures.push_back({"bk8", construct_bk8(), {3, 4}});
  for (const Fixture& fx : fixtures) {
    const std::string label = fx.name;
    const std::optional<ChromaticWitness> witness =
        find_witness(fx.g, sum_of(fx.r));
    if (!witness) {
      record(rep, false, label + ": no witness at the prescribed palette");
      continue;
    }
    try {
      const BuildResult built = build_partition(fx.g, fx.r, *witness);
      if (built.coloring) {
        // These fixtures all need one more color than the houses provide, so
        // a full coloring out of the builder can only be a defect.
        record(rep, false, label + ": builder claimed a full coloring");
        continue;
      }
      if (!built.state) {
        record(rep, false, label + ": builder returned nothing");
        continue;
      }
      const StateCheck check = verify_state(*built.state);
      record(rep, check.ok,
             label + ": property " + std::to_string(check.violated_property) +
                 " failed: " + check.detail);
    } catch (const error& e) {
      record(rep, false, label + ": " + e.what());
    }
  }
  rep.seconds = timer.seconds();
  return rep;
}

// ---------------------------------------------------------------------------
// engine corpus
// ---------------------------------------------------------------------------

namespace {

bool snapshot_is_replayable(const std::string& snapshot) {
  if (snapshot.empty()) return false;
  const nlohmann::json doc =
      nlohmann::json::parse(snapshot, nullptr, /*allow_exceptions=*/false);
  return !doc.is_discarded() && doc.is_object();
}

}  // namespace

SuiteReport run_dichotomy_suite(std::uint64_t seed, int count,
                                SuiteReport* activation) {
  SuiteReport rep;
  rep.name = "dichotomy";
  SuiteReport act;
  act.name = "activation-bound";
  Timer timer;
  Rng rng(seed);

  auto judge = [&](const std::string& label, const Graph& g, const RVector& r,
                   bool certified, const Outcome& out) {
    const int delta = g.max_degree();
    const int clique_bound = delta - *std::max_element(r.begin(), r.end());
    bool ok = false;
    std::string why;
    switch (out.kind) {
      case OutcomeKind::coloring:
        ok = out.coloring && verify_coloring(g, *out.coloring) &&
             out.coloring->palette <= delta - 1;
        why = ": coloring failed verification or the palette bound";
        break;
      case OutcomeKind::clique: {
        // High-only certificates carry their own bound (max_degree - 5);
        // plain ones owe max_degree - max(r).
        const int bound = out.clique && out.clique->high_only
                              ? std::max(1, delta - 5)
                              : clique_bound;
        ok = out.clique && verify_clique(g, *out.clique) &&
             static_cast<int>(out.clique->vertices.size()) >= bound &&
             high_claim_holds(g, *out.clique);
        why = ": clique failed verification or the size bound";
        break;
      }
      case OutcomeKind::violation:
        if (certified) {
          ok = false;
          why = ": violation on a certified-critical input (" + out.claim +
                ": " + out.detail + ")";
        } else {
          ok = snapshot_is_replayable(out.snapshot);
          why = ": violation without a replayable snapshot (" + out.claim + ")";
        }
        break;
    }
    record(rep, ok, label + why);
    const bool fourth_without_conversion =
        out.kind != OutcomeKind::violation &&
        out.stats.max_activation_count >= 4 &&
        out.kind != OutcomeKind::coloring;
    record(act, !fourth_without_conversion,
           label + ": fourth activation without a recoloring conversion");
  };

  // Certified-critical fixtures, both modes. Criticality is re-established
  // by the exact oracle here, not assumed.
  struct Fixture {
    const char* name;
    Graph g;
    RVector r;
  };
  std::vector<Fixture> fixtures;
  fixtures.push_back({"o5", construct_o5(), {2, 2}});
  fixtures.push_back({"moser", moser_spindle(), {2, 1}});
  fixtures.push_back({"bk8", construct_bk8(), {3, 4}});
  fixtures.push_back({"k13", complete_graph(13), {3, 3, 3, 3}});
  fixtures.push_back({"k14", complete_graph(14), {3, 3, 3, 4}});
  for (const Fixture& fx : fixtures) {
    const std::string label = fx.name;
    const bool certified = is_vertex_critical(fx.g, sum_of(fx.r) + 1);
    record(rep, certified, label + ": fixture is not vertex-critical");
    const std::optional<ChromaticWitness> witness =
        find_witness(fx.g, sum_of(fx.r));
    if (!witness) {
      record(rep, false, label + ": no witness at the prescribed palette");
      continue;
    }
    for (EngineMode mode : {EngineMode::theorem1, EngineMode::theorem2}) {
      const Outcome out = run_engine(fx.g, fx.r, *witness, mode);
      judge(label + "/" + to_string(mode), fx.g, fx.r, certified, out);
    }
  }

  // Repeatability: the engine takes no entropy, so a repeated run must
  // serialize byte-identically.
  {
    const Graph g = construct_bk8();
    const RVector r{3, 4};
    const std::optional<ChromaticWitness> witness = find_witness(g, sum_of(r));
    if (witness) {
      CertificateConfig cfg;
      cfg.r = r;
      cfg.mode = to_string(EngineMode::theorem1);
      const Outcome first = run_engine(g, r, *witness, EngineMode::theorem1);
      const Outcome second = run_engine(g, r, *witness, EngineMode::theorem1);
      record(rep,
             certificate_json(g, first, cfg) == certificate_json(g, second, cfg),
             "repeatability: two identical runs serialized differently");
    } else {
      record(rep, false, "repeatability: fixture witness missing");
    }
  }

  // Random corpus: three generator shapes, both modes, oracle-supplied
  // witnesses. These instances are adversarial (no criticality certificate),
  // so violations are acceptable — but only with replayable snapshots.
  int made = 0;
  long long attempts = 0;
  const long long attempt_cap = 400LL * std::max(count, 1) + 400;
  while (made < count && ++attempts <= attempt_cap) {
    Graph g;
    const int shape = made % 3;
    if (shape == 0) {
      g = random_graph(rng, rng.range(14, 22), rng.range(30, 60) / 100.0);
    } else if (shape == 1) {
      // Sparse base plus a planted clique: concentrates degrees and raises
      // the clique number without leaving desk scale.
      g = random_graph(rng, rng.range(14, 22), rng.range(20, 40) / 100.0);
      const int t = rng.range(5, 8);
      std::vector<int> verts(static_cast<std::size_t>(g.size()));
      std::iota(verts.begin(), verts.end(), 0);
      rng.shuffle(verts);
      for (int a = 0; a < t; ++a)
        for (int b = a + 1; b < t; ++b) {
          const int u = verts[static_cast<std::size_t>(a)];
          const int v = verts[static_cast<std::size_t>(b)];
          if (!g.adjacent(u, v)) g.add_edge(u, v);
        }
    } else {
      // Dense but small: the chromatic number runs closer to the maximum
      // degree, so the process does real work more often.
      g = random_graph(rng, rng.range(11, 15), rng.range(55, 75) / 100.0);
    }
    const int delta = g.max_degree();
    if (delta < 7 || delta > 16) continue;
    const std::optional<ChromaticWitness> witness = find_witness(g, delta - 1);
    if (!witness) continue;
    const RVector r = default_r_vector(delta);
    const EngineMode mode =
        (made % 2 == 0) ? EngineMode::theorem1 : EngineMode::theorem2;
    const Outcome out = run_engine(g, r, *witness, mode);
    judge("random#" + std::to_string(made) + "/" + to_string(mode), g, r,
          /*certified=*/false, out);
    ++made;
  }
  if (made < count)
    record(rep, false, "random corpus: generator exhausted its attempt cap");

  rep.seconds = timer.seconds();
  act.seconds = rep.seconds;
  if (activation) *activation = std::move(act);
  return rep;
}

// ---------------------------------------------------------------------------
// independent transversals
// ---------------------------------------------------------------------------

namespace {

bool valid_transversal(const TransversalInstance& inst,
                       const std::vector<int>& picks) {
  if (picks.size() != inst.parts.size()) return false;
  std::vector<int> aux_ids;
  for (std::size_t i = 0; i < picks.size(); ++i) {
    // Translate the parent id back to an aux vertex inside part i.
    int aux = -1;
    for (int candidate : inst.parts[i])
      if (inst.to_parent[static_cast<std::size_t>(candidate)] == picks[i])
        aux = candidate;
    if (aux < 0) return false;
    aux_ids.push_back(aux);
  }
  for (std::size_t i = 0; i < aux_ids.size(); ++i)
    for (std::size_t j = i + 1; j < aux_ids.size(); ++j)
      if (inst.aux_graph.adjacent(aux_ids[i], aux_ids[j])) return false;
  return true;
}

}  // namespace

SuiteReport run_transversal_suite(std::uint64_t seed, int count) {
  SuiteReport rep;
  rep.name = "transversal";
  Timer timer;
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    const int s = rng.range(1, 3);
    const int part_count = rng.range(2, 5);
    TransversalInstance inst;
    inst.s = s;
    int total = 0;
    for (int p = 0; p < part_count; ++p) {
      const int size = rng.range(s, 8);
      std::vector<int> part;
      for (int v = 0; v < size; ++v) part.push_back(total + v);
      total += size;
      inst.parts.push_back(std::move(part));
    }
    inst.aux_graph = Graph(total);
    inst.to_parent.resize(static_cast<std::size_t>(total));
    std::iota(inst.to_parent.begin(), inst.to_parent.end(), 0);
    std::vector<int> part_of(static_cast<std::size_t>(total));
    std::vector<int> budget(static_cast<std::size_t>(total));
    for (std::size_t p = 0; p < inst.parts.size(); ++p)
      for (int v : inst.parts[p]) {
        part_of[static_cast<std::size_t>(v)] = static_cast<int>(p);
        budget[static_cast<std::size_t>(v)] =
            std::min(s, static_cast<int>(inst.parts[p].size()) - s);
      }
    const int tries = rng.range(0, 3 * total);
    for (int t = 0; t < tries; ++t) {
      const int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(total)));
      const int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(total)));
      if (part_of[static_cast<std::size_t>(u)] ==
          part_of[static_cast<std::size_t>(v)])
        continue;
      if (inst.aux_graph.adjacent(u, v)) continue;
      if (budget[static_cast<std::size_t>(u)] == 0 ||
          budget[static_cast<std::size_t>(v)] == 0)
        continue;
      inst.aux_graph.add_edge(u, v);
      --budget[static_cast<std::size_t>(u)];
      --budget[static_cast<std::size_t>(v)];
    }
    inst.lopsided = true;
    const std::string label = "instance " + std::to_string(i);
    try {
      const std::optional<std::vector<int>> found =
          find_independent_transversal(inst);
      const std::optional<std::vector<int>> listed = enumerate_transversal(inst);
      bool ok = found.has_value() && listed.has_value() &&
                valid_transversal(inst, *found) &&
                valid_transversal(inst, *listed);
      record(rep, ok, label + ": finder and enumeration disagree or invalid");
    } catch (const error& e) {
      record(rep, false, label + ": " + e.what());
    }
  }
  rep.seconds = timer.seconds();
  return rep;
}

// ---------------------------------------------------------------------------
// hitting sets
// ---------------------------------------------------------------------------

namespace {

void add_clique(Graph& g, int lo, int hi) {  // inclusive range
  for (int u = lo; u <= hi; ++u)
    for (int v = u + 1; v <= hi; ++v) g.add_edge(u, v);
}

bool hits_all_maximum_cliques(const Graph& g, const std::vector<int>& set) {
  for (const std::vector<int>& clique : maximum_cliques(g)) {
    bool hit = false;
    for (int v : set)
      if (std::binary_search(clique.begin(), clique.end(), v)) hit = true;
    if (!hit) return false;
  }
  return true;
}

bool is_independent(const Graph& g, const std::vector<int>& set) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (g.adjacent(set[i], set[j])) return false;
  return true;
}

}  // namespace

SuiteReport run_hitting_suite() {
  SuiteReport rep;
  rep.name = "hitting";
  Timer timer;

  // (a) one plain ten-clique and one ten-clique with an attached vertex
  // adjacent to all but one member; the maximum degree is pumped to 14 with
  // pendants so the clique size sits exactly four under it.
  {
    Graph g(25);
    add_clique(g, 0, 9);
    add_clique(g, 10, 19);
    for (int v = 10; v <= 18; ++v) g.add_edge(20, v);
    for (int v = 21; v <= 24; ++v) g.add_edge(0, v);
    g.add_edge(0, 10);
    g.add_edge(1, 11);
    record(rep, g.max_degree() == 14, "two-group: expected max degree 14");
    record(rep, maximum_cliques(g).size() == 3,
           "two-group: expected exactly three maximum cliques");
    try {
      const std::optional<std::vector<int>> hs = hitting_set(g);
      record(rep,
             hs && hs->size() == 2 && is_independent(g, *hs) &&
                 hits_all_maximum_cliques(g, *hs),
             "two-group: hitting set missing or invalid");
    } catch (const error& e) {
      record(rep, false, std::string("two-group: ") + e.what());
    }
  }

  // (b) a nine-clique overlapped by two attached vertices from both sides:
  // one clique meets two others, which the cover must reject.
  {
    Graph g(15);
    add_clique(g, 0, 8);
    for (int v = 0; v <= 7; ++v) g.add_edge(9, v);
    for (int v = 1; v <= 8; ++v) g.add_edge(10, v);
    for (int v = 11; v <= 14; ++v) g.add_edge(0, v);
    record(rep, g.max_degree() == 13, "triple-overlap: expected max degree 13");
    bool threw = false;
    try {
      hitting_set(g);
    } catch (const structural_error&) {
      threw = true;
    } catch (const error&) {
      threw = false;
    }
    record(rep, threw, "triple-overlap: structural error did not fire");
  }

  // (c) two disjoint six-cliques at max degree 10: a two-vertex hit.
  {
    Graph g(17);
    add_clique(g, 0, 5);
    add_clique(g, 6, 11);
    for (int v = 12; v <= 16; ++v) g.add_edge(0, v);
    record(rep, g.max_degree() == 10, "disjoint-pair: expected max degree 10");
    try {
      const std::optional<std::vector<int>> hs = hitting_set(g);
      record(rep,
             hs && hs->size() == 2 && is_independent(g, *hs) &&
                 hits_all_maximum_cliques(g, *hs),
             "disjoint-pair: hitting set missing or invalid");
    } catch (const error& e) {
      record(rep, false, std::string("disjoint-pair: ") + e.what());
    }
  }

  // (d) outside the regime (clique number != max degree - 4): absent.
  {
    Graph g(6);
    add_clique(g, 0, 4);
    g.add_edge(0, 5);
    try {
      record(rep, !hitting_set(g).has_value(),
             "off-regime: expected no hitting set");
    } catch (const error& e) {
      record(rep, false, std::string("off-regime: ") + e.what());
    }
  }

  rep.seconds = timer.seconds();
  return rep;
}

// ---------------------------------------------------------------------------
// pipeline
// ---------------------------------------------------------------------------

SuiteReport run_pipeline_suite(std::uint64_t seed, int count) {
  SuiteReport rep;
  rep.name = "pipeline";
  Timer timer;
  Rng rng(seed);

  {
    const Graph g = lex_product_cycle_clique(5, 5);
    record(rep, g.max_degree() == 14, "blowup: expected max degree 14");
    try {
      const Outcome out = color_or_clique(g);
      record(rep,
             out.kind == OutcomeKind::coloring && out.coloring &&
                 verify_coloring(g, *out.coloring) &&
                 out.coloring->palette <= 13,
             "blowup: expected a verified coloring within 13 colors");
    } catch (const error& e) {
      record(rep, false, std::string("blowup: ") + e.what());
    }
  }

  {
    const Graph g = complete_graph(17);
    try {
      const Outcome out = color_or_clique(g);
      record(rep,
             out.kind == OutcomeKind::clique && out.clique &&
                 verify_clique(g, *out.clique) &&
                 out.clique->vertices.size() == 17,
             "k17: expected the whole graph as a clique");
    } catch (const error& e) {
      record(rep, false, std::string("k17: ") + e.what());
    }
  }

  int made = 0;
  long long attempts = 0;
  const long long attempt_cap = 200LL * std::max(count, 1) + 200;
  while (made < count && ++attempts <= attempt_cap) {
    const int n = rng.range(20, 26);
    const double p = rng.range(55, 75) / 100.0;
    const Graph g = random_graph(rng, n, p);
    const int delta = g.max_degree();
    if (delta < 13) continue;
    if (dsatur_coloring(g).palette > delta - 1) continue;  // keep colorable
    const std::string label = "random#" + std::to_string(made);
    try {
      const Outcome out = color_or_clique(g);
      record(rep,
             out.kind == OutcomeKind::coloring && out.coloring &&
                 verify_coloring(g, *out.coloring) &&
                 out.coloring->palette <= delta - 1,
             label + ": expected a verified coloring under the max degree");
    } catch (const error& e) {
      record(rep, false, label + ": " + e.what());
    }
    ++made;
  }
  if (made < count)
    record(rep, false, "random corpus: generator exhausted its attempt cap");

  rep.seconds = timer.seconds();
  return rep;
}

}  // namespace cliquecolor
