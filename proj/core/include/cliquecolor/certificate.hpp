#pragma once

#include <optional>
#include <string>

#include "cliquecolor/graph.hpp"
#include "cliquecolor/mozhan.hpp"

namespace cliquecolor {

// Settings recorded inside an emitted certificate so a run can be replayed.
struct CertificateConfig {
  std::optional<RVector> r;
  std::optional<std::string> mode;
  std::optional<std::uint64_t> seed;
};

// Serializes an outcome as a JSON certificate with fixed key order:
// {"kind", "graph_hash", "engine_config", "payload"}. Kinds: "coloring",
// "clique", "high_clique", "violation". Coloring and clique payloads are
// re-verified against g before emission (invariant_error on failure), so an
// emitted certificate always re-verifies. Identical inputs produce
// byte-identical output.
std::string certificate_json(const Graph& g, const Outcome& out,
                             const CertificateConfig& config);

// A refusal certificate (the dichotomy was not attempted): same envelope
// with kind "refusal" and the reason in the payload.
std::string refusal_certificate_json(const Graph& g, const std::string& reason,
                                     const CertificateConfig& config);

enum class CertificateCheck {
  ok,              // parses, hash matches, payload re-verifies
  graph_mismatch,  // well-formed but hashed against a different graph
  invalid,         // malformed, or payload fails verification
};

CertificateCheck verify_certificate_json(const Graph& g,
                                         const std::string& text);

}  // namespace cliquecolor
