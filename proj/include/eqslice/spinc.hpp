#pragma once

#include "eqslice/int_matrix.hpp"

#include <vector>

namespace eqslice {

/// Characteristic covectors of a symmetric nonsingular integer form Q,
/// taken modulo im(2Q). A class is always handled through its canonical
/// representative, so class equality is plain vector equality.
class SpincLattice {
 public:
  explicit SpincLattice(IntMatrix q);

  const IntMatrix& form() const { return q_; }
  std::size_t rank() const { return q_.rows(); }
  /// Number of classes, |det Q|.
  const Int& class_count() const { return det_abs_; }

  /// u_i = Q_ii (mod 2) for all i.
  bool is_characteristic(const std::vector<Int>& u) const;

  /// Canonical representative of the class of u: the unique member of the
  /// coset u + im(2Q) lying in the fundamental box of the Hermite normal
  /// form of 2Q. Throws if u is not characteristic.
  std::vector<Int> canonicalize(const std::vector<Int>& u) const;

  /// Exact coset test: u - v even entrywise and Q x = (u - v)/2 solvable
  /// over the integers. (canonicalize gives the same answer; this is the
  /// direct route and the two are property-tested against each other.)
  bool same_class(const std::vector<Int>& u, const std::vector<Int>& v) const;

  std::vector<Int> negate_class(const std::vector<Int>& rep) const {
    return canonicalize(negate(rep));
  }

  /// All classes as sorted canonical representatives; exactly |det Q| of them.
  std::vector<std::vector<Int>> enumerate_classes() const;

 private:
  IntMatrix q_;
  IntMatrix hnf_2q_;  // Hermite normal form of 2Q, lower triangular
  Int det_abs_;
};

}  // namespace eqslice
