// Command-line front end: parse graphs, run the coloring/clique dichotomy or
// the choosability oracles, emit and check JSON certificates, and drive the
// acceptance suites.
//
// Exit codes:
//   0  success (true for `choosable`, all-pass for `suite`)
//   1  parse or argument error (also: `choosable` printed "false")
//   2  refusal: the input exceeds the configured exact-computation budget,
//      or no chromatic witness exists for the requested house budgets
//   3  the engine diagnosed an assumption violation (certificate on stdout)
//   4  `verify`: certificate was issued for a different graph
//   5  `verify`: certificate is malformed or fails re-verification
//   6  internal error (invariant or structural failure; message on stderr)

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cliquecolor/certificate.hpp"
#include "cliquecolor/constructions.hpp"
#include "cliquecolor/dimacs.hpp"
#include "cliquecolor/errors.hpp"
#include "cliquecolor/graph.hpp"
#include "cliquecolor/list_coloring.hpp"
#include "cliquecolor/mozhan.hpp"
#include "cliquecolor/pipeline.hpp"
#include "cliquecolor/suites.hpp"

namespace {

using namespace cliquecolor;

Graph load_graph(const std::string& arg) {
  if (std::filesystem::exists(arg)) return parse_dimacs_file(arg);
  return parse_construction(arg);
}

RVector parse_r_vector(const std::string& text) {
  RVector r;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw contract_error("--r-vector: '" + item + "' is not an integer");
    }
    if (used != item.size() || value <= 0)
      throw contract_error("--r-vector entries must be positive integers");
    r.push_back(value);
  }
  if (r.empty()) throw contract_error("--r-vector: no entries");
  return r;
}

EngineMode parse_mode(const std::string& text) {
  if (text == "theorem1") return EngineMode::theorem1;
  if (text == "theorem2") return EngineMode::theorem2;
  throw contract_error("--mode must be theorem1 or theorem2");
}

struct CommonFlags {
  std::string mode = "theorem1";
  std::string r_vector;
  std::optional<std::uint64_t> seed;
};

int run_color_or_clique(const std::string& graph_arg, const CommonFlags& flags) {
  const Graph g = load_graph(graph_arg);
  CertificateConfig cfg;
  cfg.mode = flags.mode;
  cfg.seed = flags.seed;
  const EngineMode mode = parse_mode(flags.mode);
  try {
    Outcome out;
    if (!flags.r_vector.empty()) {
      const RVector r = parse_r_vector(flags.r_vector);
      cfg.r = r;
      const std::optional<ChromaticWitness> witness = find_witness(g, sum_of(r));
      if (!witness) {
        std::cout << refusal_certificate_json(
                         g,
                         "no single-vertex chromatic witness exists at a "
                         "palette of " +
                             std::to_string(sum_of(r)) + " colors",
                         cfg)
                  << "\n";
        return 2;
      }
      out = run_engine(g, r, *witness, mode);
    } else {
      out = color_or_clique(g, mode);
    }
    std::cout << certificate_json(g, out, cfg) << "\n";
    return out.kind == OutcomeKind::violation ? 3 : 0;
  } catch (const refusal_error& e) {
    std::cout << refusal_certificate_json(g, e.what(), cfg) << "\n";
    return 2;
  }
}

int run_choosable(const std::string& graph_arg, bool d1, int uniform) {
  const Graph g = load_graph(graph_arg);
  bool result = false;
  if (d1) {
    result = is_d1_choosable(g);
  } else if (uniform >= g.size()) {
    // Lists larger than the vertex count always admit a greedy coloring.
    result = true;
  } else {
    result = f_choosable(
        g, ListSizeFunction(static_cast<std::size_t>(g.size()), uniform));
  }
  std::cout << (result ? "true" : "false") << "\n";
  return result ? 0 : 1;
}

int run_verify(const std::string& graph_arg, const std::string& cert_path) {
  const Graph g = load_graph(graph_arg);
  std::ifstream in(cert_path);
  if (!in) {
    std::cerr << "cannot read certificate file: " << cert_path << "\n";
    return 1;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  switch (verify_certificate_json(g, buffer.str())) {
    case CertificateCheck::ok:
      std::cout << "ok\n";
      return 0;
    case CertificateCheck::graph_mismatch:
      std::cerr << "certificate was issued for a different graph\n";
      return 4;
    case CertificateCheck::invalid:
      std::cerr << "certificate is malformed or fails re-verification\n";
      return 5;
  }
  return 6;
}

void print_report(const SuiteReport& rep) {
  std::cout << rep.name << ": " << rep.passed << " passed, " << rep.failed
            << " failed (" << std::fixed << std::setprecision(2) << rep.seconds
            << " s)\n";
  for (const std::string& f : rep.failures) std::cout << "  FAIL " << f << "\n";
  if (rep.failed > static_cast<int>(rep.failures.size()))
    std::cout << "  ... " << rep.failed - static_cast<int>(rep.failures.size())
              << " more failures\n";
}

int run_suite(const std::string& name, std::uint64_t seed, int count) {
  std::vector<SuiteReport> reports;
  if (name == "classification") {
    reports.push_back(run_classification_suite());
  } else if (name == "smallpot") {
    reports.push_back(run_smallpot_suite(seed, count > 0 ? count : 500));
  } else if (name == "mozhan") {
    reports.push_back(run_mozhan_build_suite());
  } else if (name == "transversal") {
    reports.push_back(run_transversal_suite(seed, count > 0 ? count : 500));
    reports.push_back(run_hitting_suite());
  } else {  // dichotomy
    SuiteReport activation;
    reports.push_back(
        run_dichotomy_suite(seed, count > 0 ? count : 200, &activation));
    reports.push_back(activation);
  }
  bool all_ok = true;
  for (const SuiteReport& rep : reports) {
    print_report(rep);
    all_ok = all_ok && rep.ok();
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "coloring/clique dichotomy toolkit: verified colorings, clique "
      "certificates, choosability oracles, acceptance suites"};
  app.require_subcommand(1);

  std::string coc_graph;
  CommonFlags coc_flags;
  std::uint64_t coc_seed = 0;
  CLI::App* coc = app.add_subcommand(
      "color-or-clique",
      "emit a verified coloring or clique certificate as JSON");
  coc->add_option("graph", coc_graph,
                  "DIMACS file path, or a construction name such as o5, bk8, "
                  "moser, k13, c5, e4, p4, lex:5:5, join:k4:e3")
      ->required();
  coc->add_option("--mode", coc_flags.mode, "engine strategy")
      ->check(CLI::IsMember({"theorem1", "theorem2"}));
  coc->add_option("--r-vector", coc_flags.r_vector,
                  "comma-separated house budgets; runs the partition engine "
                  "directly instead of the full dichotomy");
  CLI::Option* coc_seed_opt =
      coc->add_option("--seed", coc_seed, "recorded in the certificate");

  std::string cho_graph;
  bool cho_d1 = false;
  int cho_uniform = -1;
  CLI::App* cho = app.add_subcommand(
      "choosable", "decide list-colorability for every assignment of the "
                   "prescribed list sizes; prints true or false");
  cho->add_option("graph", cho_graph, "DIMACS file path or construction name")
      ->required();
  CLI::Option* d1_opt =
      cho->add_flag("--d1", cho_d1, "list sizes one below the degrees");
  CLI::Option* uni_opt =
      cho->add_option("--uniform", cho_uniform, "uniform list size k")
          ->check(CLI::NonNegativeNumber);
  d1_opt->excludes(uni_opt);
  uni_opt->excludes(d1_opt);

  std::string ver_graph;
  std::string ver_cert;
  CLI::App* ver = app.add_subcommand(
      "verify", "re-verify a certificate JSON file against a graph");
  ver->add_option("graph", ver_graph, "DIMACS file path or construction name")
      ->required();
  ver->add_option("certificate", ver_cert, "certificate JSON path")->required();

  std::string suite_name;
  std::uint64_t suite_seed = 1;
  int suite_count = -1;
  CLI::App* st =
      app.add_subcommand("suite", "run an acceptance suite and report");
  st->add_option("name", suite_name, "suite name")
      ->required()
      ->check(CLI::IsMember(
          {"classification", "smallpot", "mozhan", "transversal", "dichotomy"}));
  st->add_option("--seed", suite_seed, "seed for the randomized suites");
  st->add_option("--count", suite_count, "instance count override");

  CLI11_PARSE(app, argc, argv);

  try {
    if (coc->parsed()) {
      if (coc_seed_opt->count() > 0) coc_flags.seed = coc_seed;
      return run_color_or_clique(coc_graph, coc_flags);
    }
    if (cho->parsed()) {
      if (!cho_d1 && cho_uniform < 0) {
        std::cerr << "choosable: pass exactly one of --d1 or --uniform k\n";
        return 1;
      }
      return run_choosable(cho_graph, cho_d1, cho_uniform);
    }
    if (ver->parsed()) return run_verify(ver_graph, ver_cert);
    if (st->parsed()) return run_suite(suite_name, suite_seed, suite_count);
  } catch (const parse_error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const contract_error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const refusal_error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    std::cerr << e.what() << "\n";
    return 6;
  }
  return 1;
}
