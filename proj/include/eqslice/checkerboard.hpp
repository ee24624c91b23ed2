#pragma once

#include "eqslice/int_matrix.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eqslice {

enum class Side { plus, minus };
inline const char* to_string(Side s) { return s == Side::plus ? "plus" : "minus"; }

/// A strongly symmetric checkerboard presentation: two dual plane graphs on
/// n+1 vertices with 2n matched edges. Edge i of the plus graph crosses edge
/// i of the minus graph, vertex i of one side is paired with vertex i of the
/// other by the symmetry, and vertex n+1 is the removed invariant pair.
struct CheckerboardPresentation {
  std::string name;
  std::size_t n = 0;
  // (tail, head) pairs, 1-based vertex indices in 1..n+1, 2n entries per side.
  std::vector<std::pair<int, int>> edges_plus;
  std::vector<std::pair<int, int>> edges_minus;
  std::string metadata;

  const std::vector<std::pair<int, int>>& edges(Side s) const {
    return s == Side::plus ? edges_plus : edges_minus;
  }
};

enum class ParseErrorCode { Malformed, WrongEdgeCount, IndexOutOfRange, SelfLoop };
const char* to_string(ParseErrorCode c);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}
  ParseErrorCode code() const { return code_; }

 private:
  ParseErrorCode code_;
};

/// Parse the JSON presentation format. Checks counts, index ranges and
/// absence of self-loops; the deeper geometric consistency checks live in
/// validate().
CheckerboardPresentation parse_presentation(const std::string& text);
CheckerboardPresentation load_presentation(const std::string& path);
std::string serialize_presentation(const CheckerboardPresentation& p);

struct GoeritzForm {
  IntMatrix matrix;  // n x n, symmetric positive definite for valid input
  Side side = Side::plus;
};

/// Full (n+1) x 2n oriented incidence matrix: +1 at the tail of each edge,
/// -1 at its head.
IntMatrix full_incidence(const CheckerboardPresentation& p, Side side);

/// Oriented incidence matrix with the last row (vertex n+1) removed.
IntMatrix reduced_incidence(const CheckerboardPresentation& p, Side side);

/// Goeritz form J* (J*)^T of the requested side.
GoeritzForm goeritz(const CheckerboardPresentation& p, Side side);

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;  // witness on failure, empty or informational on success
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/// Structural validation: connectivity of both graphs, orthogonality of the
/// full incidence matrices (cut space vs cycle space of dual graphs), positive
/// definiteness of both Goeritz forms, matching diagonals and determinants.
/// Returns structured results; never throws on a failing check.
ValidationReport validate(const CheckerboardPresentation& p);

}  // namespace eqslice
