#include "cliquecolor/certificate.hpp"

#include <algorithm>

#include "json.hpp"

#include "cliquecolor/errors.hpp"

namespace cliquecolor {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json config_json(const CertificateConfig& config) {
  ordered_json j = ordered_json::object();
  if (config.r) {
    j["r"] = *config.r;
  }
  if (config.mode) {
    j["mode"] = *config.mode;
  }
  if (config.seed) {
    j["seed"] = *config.seed;
  }
  return j;
}

ordered_json envelope(const Graph& g, const std::string& kind,
                      const CertificateConfig& config, ordered_json payload) {
  ordered_json doc = ordered_json::object();
  doc["kind"] = kind;
  doc["graph_hash"] = graph_hash(g);
  doc["engine_config"] = config_json(config);
  doc["payload"] = std::move(payload);
  return doc;
}

bool clique_high_claim_holds(const Graph& g, const CliqueCertificate& cert) {
  if (!cert.high_only) return true;
  const int delta = g.max_degree();
  return std::all_of(cert.vertices.begin(), cert.vertices.end(),
                     [&](int v) { return g.degree(v) == delta; });
}

}  // namespace

std::string certificate_json(const Graph& g, const Outcome& out,
                             const CertificateConfig& config) {
  ordered_json payload = ordered_json::object();
  std::string kind;
  switch (out.kind) {
    case OutcomeKind::coloring: {
      if (!out.coloring || !verify_coloring(g, *out.coloring)) {
        throw invariant_error(
            "certificate_json: coloring outcome fails verification");
      }
      kind = "coloring";
      payload["palette"] = out.coloring->palette;
      payload["colors"] = out.coloring->color;
      break;
    }
    case OutcomeKind::clique: {
      if (!out.clique || !verify_clique(g, *out.clique) ||
          !clique_high_claim_holds(g, *out.clique)) {
        throw invariant_error(
            "certificate_json: clique outcome fails verification");
      }
      kind = out.clique->high_only ? "high_clique" : "clique";
      payload["vertices"] = out.clique->vertices;
      break;
    }
    case OutcomeKind::violation: {
      kind = "violation";
      payload["claim"] = out.claim;
      payload["detail"] = out.detail;
      if (out.snapshot.empty()) {
        payload["snapshot"] = nullptr;
      } else {
        payload["snapshot"] =
            ordered_json::parse(out.snapshot, nullptr, /*allow_exceptions=*/
                                false);
        if (payload["snapshot"].is_discarded()) {
          throw invariant_error(
              "certificate_json: violation snapshot is not valid JSON");
        }
      }
      break;
    }
  }
  return envelope(g, kind, config, std::move(payload)).dump(2);
}

std::string refusal_certificate_json(const Graph& g, const std::string& reason,
                                     const CertificateConfig& config) {
  ordered_json payload = ordered_json::object();
  payload["reason"] = reason;
  return envelope(g, "refusal", config, std::move(payload)).dump(2);
}

CertificateCheck verify_certificate_json(const Graph& g,
                                         const std::string& text) {
  ordered_json doc =
      ordered_json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    return CertificateCheck::invalid;
  }
  if (!doc.contains("kind") || !doc["kind"].is_string() ||
      !doc.contains("graph_hash") || !doc["graph_hash"].is_string() ||
      !doc.contains("payload") || !doc["payload"].is_object()) {
    return CertificateCheck::invalid;
  }
  // Hash first: a structurally fine certificate for a different graph is a
  // mismatch, not an invalid document.
  if (doc["graph_hash"].get<std::string>() != graph_hash(g)) {
    return CertificateCheck::graph_mismatch;
  }
  const std::string kind = doc["kind"].get<std::string>();
  const ordered_json& payload = doc["payload"];
  if (kind == "coloring") {
    if (!payload.contains("palette") ||
        !payload["palette"].is_number_integer() ||
        !payload.contains("colors") || !payload["colors"].is_array()) {
      return CertificateCheck::invalid;
    }
    Coloring c;
    c.palette = payload["palette"].get<int>();
    for (const auto& entry : payload["colors"]) {
      if (!entry.is_number_integer()) return CertificateCheck::invalid;
      c.color.push_back(entry.get<int>());
    }
    if (static_cast<int>(c.color.size()) != g.size() ||
        !verify_coloring(g, c)) {
      return CertificateCheck::invalid;
    }
    return CertificateCheck::ok;
  }
  if (kind == "clique" || kind == "high_clique") {
    if (!payload.contains("vertices") || !payload["vertices"].is_array()) {
      return CertificateCheck::invalid;
    }
    CliqueCertificate cert;
    cert.high_only = (kind == "high_clique");
    for (const auto& entry : payload["vertices"]) {
      if (!entry.is_number_integer()) return CertificateCheck::invalid;
      const int v = entry.get<int>();
      if (v < 0 || v >= g.size()) return CertificateCheck::invalid;
      cert.vertices.push_back(v);
    }
    if (!verify_clique(g, cert) || !clique_high_claim_holds(g, cert)) {
      return CertificateCheck::invalid;
    }
    return CertificateCheck::ok;
  }
  if (kind == "refusal") {
    if (!payload.contains("reason") || !payload["reason"].is_string()) {
      return CertificateCheck::invalid;
    }
    return CertificateCheck::ok;
  }
  if (kind == "violation") {
    if (!payload.contains("claim") || !payload["claim"].is_string() ||
        !payload.contains("detail") || !payload["detail"].is_string()) {
      return CertificateCheck::invalid;
    }
    return CertificateCheck::ok;
  }
  return CertificateCheck::invalid;
}

}  // namespace cliquecolor
