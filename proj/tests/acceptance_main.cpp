// Acceptance gate: one pass/fail line per criterion, wall-clock budgets
// pinned in code, nonzero exit if anything fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "cliquecolor/constructions.hpp"
#include "cliquecolor/graph.hpp"
#include "cliquecolor/oracles.hpp"
#include "cliquecolor/suites.hpp"

using namespace cliquecolor;

namespace {

constexpr std::uint64_t kSeed = 20240815;

int g_failed_criteria = 0;

struct Criterion {
  int id;
  std::string label;
  bool ok = true;
  double seconds = 0.0;
  std::vector<std::string> notes;
};

#define EXPECT(crit, cond, msg)      \
  do {                               \
    if (!(cond)) {                   \
      (crit).ok = false;             \
      (crit).notes.push_back((msg)); \
    }                                \
  } while (0)

void report(const Criterion& c) {
  std::printf("[%s] criterion %d: %s (%.2fs)\n", c.ok ? "PASS" : "FAIL", c.id,
              c.label.c_str(), c.seconds);
  std::fflush(stdout);
  if (!c.ok) {
    ++g_failed_criteria;
    for (const std::string& note : c.notes)
      std::fprintf(stderr, "[FAIL] criterion %d: %s\n", c.id, note.c_str());
  }
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

template <class Fn>
SuiteReport run_guarded(const std::string& name, Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    SuiteReport rep;
    rep.name = name;
    rep.failed = 1;
    rep.failures.push_back(std::string("unhandled exception: ") + e.what());
    return rep;
  }
}

// Folds a suite report plus a wall-clock budget into a criterion line.
Criterion from_suite(int id, const std::string& label, const SuiteReport& rep,
                     double budget_seconds) {
  Criterion c{id, label};
  c.seconds = rep.seconds;
  EXPECT(c, rep.passed > 0, "suite ran no instances");
  for (const std::string& f : rep.failures) c.notes.push_back(f);
  if (rep.failed > 0) {
    c.ok = false;
    c.notes.push_back(rep.name + ": " + std::to_string(rep.failed) +
                      " instance(s) failed");
  }
  EXPECT(c, rep.seconds <= budget_seconds,
         "over budget: " + std::to_string(rep.seconds) + "s > " +
             std::to_string(budget_seconds) + "s");
  return c;
}

Criterion criterion_overfull_fixture() {
  Criterion c{1, "small overfull fixture: degrees, cliques, criticality"};
  Timer timer;
  try {
    Graph g = parse_construction("o5");
    EXPECT(c, g.max_degree() == 5, "max degree is not 5");
    InducedSubgraph high = high_subgraph(g);
    EXPECT(c, max_clique_exact(high.graph).size() == 1,
           "high-vertex subgraph has an edge");
    EXPECT(c, chromatic_number_exact(g) == 5, "chromatic number is not 5");
    EXPECT(c, is_vertex_critical(g, 5), "fixture is not 5-vertex-critical");
    EXPECT(c, max_clique_exact(g).size() == 4, "clique number is not 4");
  } catch (const std::exception& e) {
    EXPECT(c, false, std::string("unhandled exception: ") + e.what());
  }
  c.seconds = timer.seconds();
  EXPECT(c, c.seconds < 1.0, "over budget: 1s");
  return c;
}

Criterion criterion_regular_fixture() {
  Criterion c{2, "15-vertex 8-regular fixture: clique and chromatic numbers"};
  Timer timer;
  try {
    Graph g = parse_construction("bk8");
    EXPECT(c, g.size() == 15, "vertex count is not 15");
    EXPECT(c, g.min_degree() == 8 && g.max_degree() == 8,
           "graph is not 8-regular");
    EXPECT(c, max_clique_exact(g).size() == 6, "clique number is not 6");
    EXPECT(c, chromatic_number_exact(g) == 8, "chromatic number is not 8");
  } catch (const std::exception& e) {
    EXPECT(c, false, std::string("unhandled exception: ") + e.what());
  }
  c.seconds = timer.seconds();
  EXPECT(c, c.seconds < 10.0, "over budget: 10s");
  return c;
}

}  // namespace

int main() {
  std::printf("acceptance: seed=%llu\n",
              static_cast<unsigned long long>(kSeed));

  report(criterion_overfull_fixture());
  report(criterion_regular_fixture());

  report(from_suite(3, "join classification matches exhaustive choosability",
                    run_guarded("classification", [] {
                      return run_classification_suite();
                    }),
                    7200.0));

  report(from_suite(4, "list-coloring decision agrees with brute force",
                    run_guarded("smallpot", [] {
                      return run_smallpot_suite(kSeed, 500);
                    }),
                    1800.0));

  report(from_suite(5, "mixed-join recoloring colors random assignments",
                    run_guarded("mixedjoin", [] {
                      return run_mixed_join_suite(kSeed, 1000);
                    }),
                    60.0));

  report(from_suite(6, "partition builder output passes the state verifier",
                    run_guarded("mozhan", [] { return run_mozhan_build_suite(); }),
                    60.0));

  SuiteReport activation;
  report(from_suite(7, "engine corpus: only verified colorings or cliques",
                    run_guarded("dichotomy", [&] {
                      return run_dichotomy_suite(kSeed, 200, &activation);
                    }),
                    3600.0));
  {
    Criterion c{8, "fourth activation only in runs converted to colorings"};
    c.seconds = activation.seconds;
    EXPECT(c, activation.passed > 0, "no engine runs were checked");
    for (const std::string& f : activation.failures) c.notes.push_back(f);
    EXPECT(c, activation.failed == 0,
           std::to_string(activation.failed) + " run(s) broke the bound");
    report(c);
  }

  report(from_suite(9, "independent transversal finder matches enumeration",
                    run_guarded("transversal", [] {
                      return run_transversal_suite(kSeed, 500);
                    }),
                    300.0));

  report(from_suite(10, "hitting sets on maximum-clique covers",
                    run_guarded("hitting", [] { return run_hitting_suite(); }),
                    60.0));

  report(from_suite(11, "end-to-end color-or-clique on fixtures and random "
                        "instances",
                    run_guarded("pipeline", [] {
                      return run_pipeline_suite(kSeed, 50);
                    }),
                    1800.0));

  if (g_failed_criteria == 0) {
    std::printf("acceptance: all 11 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d of 11 criteria FAILED\n", g_failed_criteria);
  return 1;
}
