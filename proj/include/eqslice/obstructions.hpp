#pragma once

#include "eqslice/checkerboard.hpp"
#include "eqslice/linalg.hpp"
#include "eqslice/spinc.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace eqslice {

/// m = a^2 + b^2 with a, b >= 0 integers (zero allowed). Decided by
/// factorization: every prime = 3 (mod 4) must occur to an even power.
bool sum_of_two_squares(const Int& m);

/// Smallest prime p = 3 (mod 4) dividing m to an odd power, or 0 if none.
Int two_squares_blocking_prime(const Int& m);

/// An explicit (a, b) with a^2 + b^2 = m, when one exists (brute force;
/// intended for witness output on modest inputs).
std::optional<std::pair<Int, Int>> two_squares_decomposition(const Int& m);

enum class VerdictLevel {
  NotSlice,
  NotEquivariantlySlice,
  DetObstructed,
  NotAmphichiralCandidate,
  Inconclusive,
};
const char* to_string(VerdictLevel v);

struct DetStageEvidence {
  Int det;
  bool det_is_two_squares = false;
  Int det_blocking_prime = 0;  // nonzero iff det is not a sum of two squares
  bool det_is_square = false;
  Int root = 0;  // meaningful iff det_is_square
  bool root_is_two_squares = false;
  Int root_blocking_prime = 0;
  std::optional<std::pair<Int, Int>> root_decomposition;
};

struct EmbeddingEvidence {
  IntMatrix matrix;             // canonical embedding A with A^T A = Goeritz form
  std::size_t metabolizer_size = 0;
  bool invariant = false;
  // Classes of the metabolizer set mapped outside it; empty iff invariant.
  std::vector<std::vector<Int>> violations;
};

struct Verdict {
  VerdictLevel level = VerdictLevel::Inconclusive;
  DetStageEvidence det_stage;
  bool embeddings_enumerated = false;
  std::vector<EmbeddingEvidence> embeddings;
};

/// Determinant stage on its own. d must be a positive odd integer.
Verdict det_obstruction(const Int& d);

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// The induced action on Spin^c classes of the double branched cover,
/// computed from the pair of reduced incidence matrices: a class [u] is
/// written as [J+ v] for an all-odd v and mapped to [J- v].
class SigmaAction {
 public:
  SigmaAction(IntMatrix jplus, IntMatrix jminus);
  static SigmaAction from_presentation(const CheckerboardPresentation& p);

  const SpincLattice& lattice() const { return lattice_; }
  const IntMatrix& jplus() const { return jplus_; }
  const IntMatrix& jminus() const { return jminus_; }
  const IntegerSolver& plus_solver() const { return solver_; }

  /// Some all-odd v with J+ v equal to the canonical representative of [u].
  std::vector<Int> odd_lift(const std::vector<Int>& u) const;
  /// Image class of the lift: canonicalize(J- v).
  std::vector<Int> apply_to_lift(const std::vector<Int>& odd_v) const;
  /// The action on a class, as a canonical representative.
  std::vector<Int> apply(const std::vector<Int>& u) const;

 private:
  IntMatrix jplus_, jminus_;
  SpincLattice lattice_;
  IntegerSolver solver_;
  std::vector<Int> jplus_ones_;
};

using ClassSet = std::set<std::vector<Int>>;

/// The classes { [A^T v] : v all-odd }, as canonical representatives;
/// exactly sqrt(det Q) of them for an embedding A of Q.
ClassSet metabolizer_spinc(const IntMatrix& a, const SpincLattice& lattice);

struct InvarianceResult {
  bool invariant = false;
  std::vector<std::vector<Int>> violations;  // members of S mapped outside S
};
InvarianceResult check_invariance(const ClassSet& s, const SigmaAction& act);

struct OrbitStructure {
  bool bijection = false;
  bool square_is_negation = false;
  std::size_t fixed_classes = 0;
  std::map<std::size_t, std::size_t> orbit_size_counts;  // size -> number of orbits
  std::vector<Int> fixed_class_rep;  // set when fixed_classes == 1
};
/// Orbit decomposition of the action over all classes of the form.
OrbitStructure sigma_orbit_structure(const SigmaAction& act);

/// Full verdict: determinant stage, then embedding enumeration, then the
/// invariance check for every embedding. Throws ValidationError when the
/// presentation fails validate().
Verdict full_pipeline(const CheckerboardPresentation& p, int threads = 1);

}  // namespace eqslice
