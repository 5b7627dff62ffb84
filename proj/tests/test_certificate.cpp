#include <string>

#include "cliquecolor/certificate.hpp"
#include "cliquecolor/constructions.hpp"
#include "cliquecolor/errors.hpp"
#include "cliquecolor/graph.hpp"
#include "cliquecolor/pipeline.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace cliquecolor;

namespace {

Outcome coloring_outcome_for(const Graph& g) {
  Outcome out = color_or_clique(g);
  REQUIRE(out.kind == OutcomeKind::coloring);
  return out;
}

Outcome clique_outcome_for(const Graph& g) {
  Outcome out = color_or_clique(g);
  REQUIRE(out.kind == OutcomeKind::clique);
  return out;
}

Graph star6() {
  Graph g(6);
  for (int v = 1; v < 6; ++v) g.add_edge(0, v);
  return g;
}

}  // namespace

TEST_CASE("coloring certificates round-trip") {
  Graph g = star6();
  Outcome out = coloring_outcome_for(g);
  std::string text = certificate_json(g, out, {});

  nlohmann::json doc = nlohmann::json::parse(text);
  CHECK(doc.at("kind") == "coloring");
  CHECK(doc.at("graph_hash") == graph_hash(g));
  CHECK(doc.at("payload").contains("colors"));

  CHECK(verify_certificate_json(g, text) == CertificateCheck::ok);
}

TEST_CASE("clique certificates round-trip, including the high-only kind") {
  Graph k5 = complete_graph(5);
  Outcome out = clique_outcome_for(k5);
  std::string text = certificate_json(k5, out, {});
  CHECK(nlohmann::json::parse(text).at("kind") == "clique");
  CHECK(verify_certificate_json(k5, text) == CertificateCheck::ok);

  // a high-only certificate on a regular graph
  Graph k4 = complete_graph(4);
  Outcome high;
  high.kind = OutcomeKind::clique;
  high.clique = CliqueCertificate{{0, 1, 2}, true};
  std::string high_text = certificate_json(k4, high, {});
  CHECK(nlohmann::json::parse(high_text).at("kind") == "high_clique");
  CHECK(verify_certificate_json(k4, high_text) == CertificateCheck::ok);
}

TEST_CASE("emission refuses payloads that do not verify") {
  Graph k4 = complete_graph(4);

  Outcome improper;
  improper.kind = OutcomeKind::coloring;
  improper.coloring = Coloring{{0, 0, 1, 2}, 3};  // 0 and 1 are adjacent
  CHECK_THROWS_AS((void)certificate_json(k4, improper, {}), invariant_error);

  Graph with_tail(5);
  with_tail.add_edge(0, 1);
  with_tail.add_edge(0, 2);
  with_tail.add_edge(1, 2);
  with_tail.add_edge(0, 3);
  with_tail.add_edge(3, 4);
  Outcome fake_high;
  fake_high.kind = OutcomeKind::clique;
  fake_high.clique = CliqueCertificate{{0, 1}, true};  // degree(1) < max
  CHECK_THROWS_AS((void)certificate_json(with_tail, fake_high, {}),
                  invariant_error);
}

TEST_CASE("verification catches the wrong graph before payload details") {
  Graph k5 = complete_graph(5);
  std::string text = certificate_json(k5, clique_outcome_for(k5), {});

  CHECK(verify_certificate_json(complete_graph(6), text) ==
        CertificateCheck::graph_mismatch);
  CHECK(verify_certificate_json(cycle_graph(5), text) ==
        CertificateCheck::graph_mismatch);
}

TEST_CASE("verification rejects tampered payloads") {
  Graph g = star6();
  std::string text = certificate_json(g, coloring_outcome_for(g), {});

  nlohmann::json doc = nlohmann::json::parse(text);
  doc["payload"]["colors"][1] = doc["payload"]["colors"][0];  // clash on 0-1
  CHECK(verify_certificate_json(g, doc.dump(2)) == CertificateCheck::invalid);

  Graph k5 = complete_graph(5);
  std::string clique_text = certificate_json(k5, clique_outcome_for(k5), {});
  nlohmann::json cq = nlohmann::json::parse(clique_text);
  cq["payload"]["vertices"][0] = cq["payload"]["vertices"][1];  // duplicate
  CHECK(verify_certificate_json(k5, cq.dump(2)) == CertificateCheck::invalid);
  cq["payload"]["vertices"][0] = 99;  // out of range
  CHECK(verify_certificate_json(k5, cq.dump(2)) == CertificateCheck::invalid);

  nlohmann::json relabeled = nlohmann::json::parse(clique_text);
  relabeled["kind"] = "coloring";  // wrong payload for the advertised kind
  CHECK(verify_certificate_json(k5, relabeled.dump(2)) ==
        CertificateCheck::invalid);
  relabeled["kind"] = "imaginary";
  CHECK(verify_certificate_json(k5, relabeled.dump(2)) ==
        CertificateCheck::invalid);
}

TEST_CASE("verification rejects malformed documents") {
  Graph g = star6();
  CHECK(verify_certificate_json(g, "not json at all") ==
        CertificateCheck::invalid);
  CHECK(verify_certificate_json(g, "[1,2,3]") == CertificateCheck::invalid);
  CHECK(verify_certificate_json(g, "{}") == CertificateCheck::invalid);
  CHECK(verify_certificate_json(g, R"({"kind":"coloring"})") ==
        CertificateCheck::invalid);
}

TEST_CASE("refusal and violation certificates") {
  Graph g = star6();
  std::string refusal = refusal_certificate_json(g, "instance too large", {});
  nlohmann::json doc = nlohmann::json::parse(refusal);
  CHECK(doc.at("kind") == "refusal");
  CHECK(doc.at("payload").at("reason") == "instance too large");
  CHECK(verify_certificate_json(g, refusal) == CertificateCheck::ok);

  Outcome violation;
  violation.kind = OutcomeKind::violation;
  violation.claim = "sample-claim";
  violation.detail = "a diagnostic sentence";
  violation.snapshot = R"({"houses": []})";
  std::string vtext = certificate_json(g, violation, {});
  nlohmann::json vdoc = nlohmann::json::parse(vtext);
  CHECK(vdoc.at("kind") == "violation");
  CHECK(vdoc.at("payload").at("claim") == "sample-claim");
  CHECK(vdoc.at("payload").at("snapshot").is_object());
  CHECK(verify_certificate_json(g, vtext) == CertificateCheck::ok);
}

TEST_CASE("engine configuration is embedded when provided") {
  Graph g = star6();
  CertificateConfig cfg;
  cfg.r = RVector{3, 4};
  cfg.mode = "theorem2";
  cfg.seed = 99;
  std::string text = certificate_json(g, coloring_outcome_for(g), cfg);
  nlohmann::json doc = nlohmann::json::parse(text);
  CHECK(doc.at("engine_config").at("r") == nlohmann::json::array({3, 4}));
  CHECK(doc.at("engine_config").at("mode") == "theorem2");
  CHECK(doc.at("engine_config").at("seed") == 99);

  std::string bare = certificate_json(g, coloring_outcome_for(g), {});
  CHECK_FALSE(nlohmann::json::parse(bare).at("engine_config").contains("r"));
}

TEST_CASE("certificates are byte-stable") {
  Graph bk8 = construct_bk8();
  Outcome out = color_or_clique(bk8);
  CHECK(certificate_json(bk8, out, {}) == certificate_json(bk8, out, {}));
}
