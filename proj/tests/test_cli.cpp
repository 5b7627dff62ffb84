#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

const char* binary() {
  const char* bin = std::getenv("CLIQUECOLOR_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "CLIQUECOLOR_BIN must point at the tool");
  return bin;
}

// Runs the tool through the shell, capturing stdout; `prefix` can carry
// environment assignments.
RunResult run_cli(const std::string& args, const std::string& prefix = "") {
  std::string cmd = prefix + std::string(binary()) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    result.out.append(buffer, got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  REQUIRE(out.good());
  out << text;
}

}  // namespace

TEST_CASE("color-or-clique emits a verified clique certificate") {
  RunResult r = run_cli("color-or-clique k17");
  CHECK(r.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("kind") == "clique");
  CHECK(doc.at("payload").at("vertices").size() == 17);
}

TEST_CASE("color-or-clique emits a coloring certificate in the exact regime") {
  RunResult r = run_cli("color-or-clique lex:5:5");
  CHECK(r.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("kind") == "coloring");
  CHECK(doc.at("payload").at("palette").get<int>() <= 13);
}

TEST_CASE("identical invocations produce identical bytes") {
  RunResult a = run_cli("color-or-clique bk8 --mode theorem2");
  RunResult b = run_cli("color-or-clique bk8 --mode theorem2");
  CHECK(a.exit_code == 0);
  CHECK(a.exit_code == b.exit_code);
  CHECK(a.out == b.out);
}

TEST_CASE("explicit budgets: violations exit 3 with a replayable certificate") {
  RunResult r = run_cli("color-or-clique join:c6:k1 --r-vector 1,1");
  CHECK(r.exit_code == 3);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("kind") == "violation");
  CHECK(doc.at("payload").at("claim").is_string());
}

TEST_CASE("explicit budgets: a missing witness is a refusal, exit 2") {
  RunResult r = run_cli("color-or-clique k5 --r-vector 1,1");
  CHECK(r.exit_code == 2);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("kind") == "refusal");
}

TEST_CASE("exact-oracle budget from the environment turns into a refusal") {
  RunResult r = run_cli("color-or-clique k8", "CLIQUECOLOR_MAX_EXACT=5 ");
  CHECK(r.exit_code == 2);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("kind") == "refusal");
}

TEST_CASE("choosable answers on stdout and in the exit code") {
  RunResult no = run_cli("choosable join:k4:e3 --d1");
  CHECK(no.exit_code == 1);
  CHECK(no.out.find("false") != std::string::npos);

  RunResult yes = run_cli("choosable join:k4:e4 --d1");
  CHECK(yes.exit_code == 0);
  CHECK(yes.out.find("true") != std::string::npos);

  RunResult even = run_cli("choosable c4 --uniform 2");
  CHECK(even.exit_code == 0);
  CHECK(even.out.find("true") != std::string::npos);

  RunResult odd = run_cli("choosable c5 --uniform 2");
  CHECK(odd.exit_code == 1);
  CHECK(odd.out.find("false") != std::string::npos);
}

TEST_CASE("verify checks a certificate against a graph") {
  RunResult emit = run_cli("color-or-clique k5");
  REQUIRE(emit.exit_code == 0);
  std::filesystem::path cert = temp_file("cliquecolor_cli_test_cert.json");
  write_file(cert, emit.out);

  RunResult ok = run_cli("verify k5 " + cert.string());
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("ok") != std::string::npos);

  RunResult mismatch = run_cli("verify c5 " + cert.string());
  CHECK(mismatch.exit_code == 4);

  nlohmann::json doc = nlohmann::json::parse(emit.out);
  doc["payload"]["vertices"][0] = doc["payload"]["vertices"][1];
  std::filesystem::path bad = temp_file("cliquecolor_cli_test_tampered.json");
  write_file(bad, doc.dump(2));
  RunResult invalid = run_cli("verify k5 " + bad.string());
  CHECK(invalid.exit_code == 5);

  std::filesystem::remove(cert);
  std::filesystem::remove(bad);
}

TEST_CASE("malformed inputs exit 1") {
  CHECK(run_cli("color-or-clique nosuchgraph").exit_code == 1);
  CHECK(run_cli("color-or-clique lex:9").exit_code == 1);
  CHECK(run_cli("color-or-clique k13 --r-vector 0,3").exit_code == 1);
}

TEST_CASE("unknown subcommands fail loudly") {
  CHECK(run_cli("frobnicate k5").exit_code != 0);
  CHECK(run_cli("choosable c4").exit_code != 0);  // needs --d1 or --uniform
}

TEST_CASE("bundled suites run green at reduced instance counts") {
  CHECK(run_cli("suite mozhan").exit_code == 0);
  CHECK(run_cli("suite transversal --seed 3 --count 25").exit_code == 0);
  CHECK(run_cli("suite smallpot --seed 5 --count 40").exit_code == 0);
  CHECK(run_cli("suite classification").exit_code == 0);
}
