#pragma once

#include <stdexcept>
#include <string>

namespace cliquecolor {

// Root of the library's exception hierarchy. Everything thrown on purpose
// derives from this, so callers can catch one type at the boundary.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// A caller violated a documented precondition (bad argument shape, invalid
// witness, malformed list sizes, ...).
class contract_error : public error {
 public:
  explicit contract_error(const std::string& what) : error("contract: " + what) {}
};

// The input is valid but larger than the configured exact-computation
// budget; the operation declines rather than running unbounded.
class refusal_error : public error {
 public:
  explicit refusal_error(const std::string& what) : error("refusal: " + what) {}
};

// Input text could not be parsed; carries the 1-based line number.
class parse_error : public error {
 public:
  parse_error(const std::string& what, int line)
      : error("parse (line " + std::to_string(line) + "): " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// The input's structure contradicts a structural hypothesis of the routine
// (e.g. the clique-intersection pattern required by the partition step);
// carries a printable description of the offending objects.
class structural_error : public error {
 public:
  explicit structural_error(const std::string& what) : error("structure: " + what) {}
};

// An internal consistency check failed: the code reached a state its own
// supporting mathematics rules out. Always a bug or a corrupted input.
class invariant_error : public error {
 public:
  explicit invariant_error(const std::string& what) : error("invariant: " + what) {}
};

}  // namespace cliquecolor
