#pragma once

#include <cstdlib>
#include <string>

namespace cliquecolor {

// Desk-scale budgets for the exact oracles. Exact routines refuse inputs
// beyond these sizes instead of running unbounded. The environment variable
// CLIQUECOLOR_MAX_EXACT, when set to a positive integer, overrides both the
// chromatic and clique budgets for a session.
struct Limits {
  int max_exact_chromatic = 30;  // max vertices for exact coloring decisions
  int max_exact_clique = 40;     // max vertices for exact max-clique
  int max_choosable = 10;        // max vertices for choosability enumeration
};

inline const Limits& limits() {
  static const Limits instance = [] {
    Limits l;
    if (const char* s = std::getenv("CLIQUECOLOR_MAX_EXACT")) {
      char* end = nullptr;
      long v = std::strtol(s, &end, 10);
      if (end != s && *end == '\0' && v > 0) {
        l.max_exact_chromatic = static_cast<int>(v);
        l.max_exact_clique = static_cast<int>(v);
      }
    }
    return l;
  }();
  return instance;
}

}  // namespace cliquecolor
