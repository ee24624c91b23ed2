#include "eqslice/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace eqslice {

Int determinant(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: matrix not square");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t pivot = k;
      while (pivot < n && a(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Bareiss update; the division is exact.
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  Int det = a(n - 1, n - 1);
  return sign < 0 ? Int(-det) : det;
}

bool is_positive_definite(const IntMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("is_positive_definite: matrix not symmetric");
  for (std::size_t k = 1; k <= m.rows(); ++k)
    if (determinant(m.leading_block(k)) <= 0) return false;
  return true;
}

namespace {

// Row/column elementary operations that keep u*m*v == d in sync.
struct SnfWorker {
  IntMatrix d, u, v;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < d.cols(); ++j) std::swap(d(a, j), d(b, j));
    for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u(a, j), u(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < d.rows(); ++i) std::swap(d(i, a), d(i, b));
    for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v(i, a), v(i, b));
  }
  void add_row(std::size_t dst, std::size_t src, const Int& c) {  // row(dst) += c*row(src)
    if (c == 0) return;
    for (std::size_t j = 0; j < d.cols(); ++j) d(dst, j) += c * d(src, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u(dst, j) += c * u(src, j);
  }
  void add_col(std::size_t dst, std::size_t src, const Int& c) {  // col(dst) += c*col(src)
    if (c == 0) return;
    for (std::size_t i = 0; i < d.rows(); ++i) d(i, dst) += c * d(i, src);
    for (std::size_t i = 0; i < v.rows(); ++i) v(i, dst) += c * v(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < d.cols(); ++j) d(r, j) = -d(r, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u(r, j) = -u(r, j);
  }
};

}  // namespace

SmithNormalForm smith_normal_form(const IntMatrix& m) {
  SnfWorker w{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  std::size_t rows = m.rows(), cols = m.cols();
  std::size_t t = 0;
  std::size_t steps = rows < cols ? rows : cols;
  for (; t < steps; ++t) {
    // Find the entry of smallest nonzero magnitude in the remaining block.
    bool found = false;
    std::size_t pi = t, pj = t;
    Int best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (w.d(i, j) == 0) continue;
        Int a = abs_int(w.d(i, j));
        if (!found || a < best) {
          found = true;
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    // Clear row and column t; if a remainder appears the pivot shrinks, so
    // the loop terminates.
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (w.d(i, t) == 0) continue;
        Int q = w.d(i, t) / w.d(t, t);
        w.add_row(i, t, -q);
        if (w.d(i, t) != 0) {
          w.swap_rows(t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (w.d(t, j) == 0) continue;
        Int q = w.d(t, j) / w.d(t, t);
        w.add_col(j, t, -q);
        if (w.d(t, j) != 0) {
          w.swap_cols(t, j);
          clean = false;
        }
      }
      if (clean) break;
    }

    // Divisibility: fold any offending row into row t and redo the pivot.
    bool redo = false;
    for (std::size_t i = t + 1; i < rows && !redo; ++i)
      for (std::size_t j = t + 1; j < cols && !redo; ++j)
        if (w.d(i, j) % w.d(t, t) != 0) {
          w.add_row(t, i, 1);
          redo = true;
        }
    if (redo) {
      --t;
      continue;
    }
    if (w.d(t, t) < 0) w.negate_row(t);
  }
  return SmithNormalForm{std::move(w.u), std::move(w.d), std::move(w.v)};
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("hermite_normal_form: matrix not square");
  std::size_t n = m.rows();
  IntMatrix h = m;
  auto add_col = [&](std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t i = 0; i < n; ++i) h(i, dst) += c * h(i, src);
  };
  auto swap_col = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < n; ++i) std::swap(h(i, a), h(i, b));
  };
  for (std::size_t i = 0; i < n; ++i) {
    // Gcd-reduce row i across columns i..n-1 until a single pivot remains.
    for (;;) {
      std::size_t best = n;
      for (std::size_t j = i; j < n; ++j)
        if (h(i, j) != 0 && (best == n || abs_int(h(i, j)) < abs_int(h(i, best)))) best = j;
      if (best == n) throw std::invalid_argument("hermite_normal_form: singular matrix");
      swap_col(i, best);
      bool done = true;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (h(i, j) == 0) continue;
        add_col(j, i, -Int(h(i, j) / h(i, i)));
        if (h(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (h(i, i) < 0)
      for (std::size_t r = 0; r < n; ++r) h(r, i) = -h(r, i);
  }
  // Reduce entries left of each pivot into [0, pivot).
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) add_col(j, i, -floor_div(h(i, j), h(i, i)));
  return h;
}

IntegerSolver::IntegerSolver(IntMatrix m) : m_(std::move(m)), snf_(smith_normal_form(m_)) {
  std::size_t steps = m_.rows() < m_.cols() ? m_.rows() : m_.cols();
  while (rank_ < steps && snf_.d(rank_, rank_) != 0) ++rank_;
  for (std::size_t j = rank_; j < m_.cols(); ++j) kernel_.push_back(snf_.v.column(j));
}

std::optional<std::vector<Int>> IntegerSolver::solve(const std::vector<Int>& b) const {
  if (b.size() != m_.rows()) throw std::invalid_argument("solve: dimension mismatch");
  std::vector<Int> ub = snf_.u * b;
  std::vector<Int> y(m_.cols());
  for (std::size_t i = 0; i < m_.rows(); ++i) {
    if (i < rank_) {
      const Int& p = snf_.d(i, i);
      if (ub[i] % p != 0) return std::nullopt;
      y[i] = ub[i] / p;
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return snf_.v * y;
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& m, const std::vector<Int>& b) {
  return IntegerSolver(m).solve(b);
}

}  // namespace eqslice
