#include "eqslice/spinc.hpp"

#include "eqslice/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace eqslice {

namespace {

IntMatrix doubled(const IntMatrix& q) {
  IntMatrix two_q(q.rows(), q.cols());
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j) two_q(i, j) = 2 * q(i, j);
  return two_q;
}

}  // namespace

SpincLattice::SpincLattice(IntMatrix q) : q_(std::move(q)) {
  if (!q_.is_symmetric()) throw std::invalid_argument("SpincLattice: form not symmetric");
  Int det = determinant(q_);
  if (det == 0) throw std::invalid_argument("SpincLattice: form is singular");
  det_abs_ = abs_int(det);
  hnf_2q_ = hermite_normal_form(doubled(q_));
}

bool SpincLattice::is_characteristic(const std::vector<Int>& u) const {
  if (u.size() != rank()) throw std::invalid_argument("is_characteristic: dimension mismatch");
  for (std::size_t i = 0; i < u.size(); ++i)
    if ((u[i] - q_(i, i)) % 2 != 0) return false;
  return true;
}

std::vector<Int> SpincLattice::canonicalize(const std::vector<Int>& u) const {
  if (!is_characteristic(u))
    throw std::invalid_argument("canonicalize: vector is not characteristic for the form");
  // Reduce top-down against the lower-triangular HNF columns; the result has
  // rep[i] in [0, H_ii) and is the unique such member of the coset.
  std::vector<Int> rep = u;
  std::size_t n = rank();
  for (std::size_t i = 0; i < n; ++i) {
    Int q = floor_div(rep[i], hnf_2q_(i, i));
    if (q == 0) continue;
    for (std::size_t r = i; r < n; ++r) rep[r] -= q * hnf_2q_(r, i);
  }
  return rep;
}

bool SpincLattice::same_class(const std::vector<Int>& u, const std::vector<Int>& v) const {
  if (!is_characteristic(u) || !is_characteristic(v))
    throw std::invalid_argument("same_class: vectors must be characteristic for the form");
  std::vector<Int> diff = u - v;
  std::vector<Int> half(diff.size());
  for (std::size_t i = 0; i < diff.size(); ++i) {
    if (diff[i] % 2 != 0) return false;  // cannot happen for two characteristic vectors
    half[i] = diff[i] / 2;
  }
  return solve_integer(q_, half).has_value();
}

std::vector<std::vector<Int>> SpincLattice::enumerate_classes() const {
  // Characteristic vectors are diag(Q) + 2Z^n, so classes correspond to
  // Z^n / Q Z^n; walk the fundamental box of the HNF of Q.
  std::size_t n = rank();
  IntMatrix h = hermite_normal_form(q_);
  std::vector<Int> diag = q_.diagonal();
  std::vector<std::vector<Int>> classes;
  std::vector<Int> w(n, 0);
  for (;;) {
    std::vector<Int> u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = diag[i] + 2 * w[i];
    classes.push_back(canonicalize(u));
    std::size_t i = 0;
    while (i < n && ++w[i] == h(i, i)) w[i++] = 0;
    if (i == n) break;
  }
  std::sort(classes.begin(), classes.end());
  if (Int(classes.size()) != det_abs_ ||
      std::adjacent_find(classes.begin(), classes.end()) != classes.end())
    throw std::logic_error("enumerate_classes: class count does not match |det Q|");
  return classes;
}

}  // namespace eqslice
