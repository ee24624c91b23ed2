#pragma once

#include "eqslice/int_matrix.hpp"

#include <optional>
#include <vector>

namespace eqslice {

/// Exact determinant via Bareiss fraction-free elimination.
Int determinant(const IntMatrix& m);

/// Exact Sylvester criterion: all leading principal minors positive.
/// Throws on asymmetric input.
bool is_positive_definite(const IntMatrix& m);

/// u * m * v == d with u, v unimodular and d diagonal, d(i,i) | d(i+1,i+1).
struct SmithNormalForm {
  IntMatrix u, d, v;
};
SmithNormalForm smith_normal_form(const IntMatrix& m);

/// Column-style Hermite normal form of a nonsingular square matrix:
/// lower triangular, positive diagonal, 0 <= h(i,j) < h(i,i) for j < i.
/// The columns of the result span the same lattice as the columns of m.
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Integer linear system solver over a fixed matrix. Precomputes the Smith
/// normal form once; solve() then answers m*x = b queries exactly, returning
/// nullopt when no integer solution exists.
class IntegerSolver {
 public:
  explicit IntegerSolver(IntMatrix m);

  std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const;
  /// Basis of { x : m*x = 0 } over the integers.
  const std::vector<std::vector<Int>>& kernel_basis() const { return kernel_; }
  const IntMatrix& matrix() const { return m_; }

 private:
  IntMatrix m_;
  SmithNormalForm snf_;
  std::size_t rank_ = 0;
  std::vector<std::vector<Int>> kernel_;
};

/// One-shot convenience wrapper around IntegerSolver.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& m,
                                              const std::vector<Int>& b);

}  // namespace eqslice
