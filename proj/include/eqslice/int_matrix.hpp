#pragma once

#include "eqslice/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace eqslice {

/// Dense matrix of exact integers. Dimensions are fixed at construction;
/// entries are plain cpp_int values, so nothing here can overflow.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool operator==(const IntMatrix&) const = default;
  // Lexicographic by shape, then row-major entries; gives deterministic sort order.
  bool operator<(const IntMatrix& other) const;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  std::vector<Int> operator*(const std::vector<Int>& v) const;
  IntMatrix operator-() const;

  bool is_symmetric() const;
  std::vector<Int> diagonal() const;
  std::vector<Int> row(std::size_t i) const;
  std::vector<Int> column(std::size_t j) const;
  /// Top-left k-by-k block.
  IntMatrix leading_block(std::size_t k) const;
  /// Copy with the given row removed.
  IntMatrix without_row(std::size_t i) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

std::vector<Int> operator+(const std::vector<Int>& a, const std::vector<Int>& b);
std::vector<Int> operator-(const std::vector<Int>& a, const std::vector<Int>& b);
std::vector<Int> negate(const std::vector<Int>& v);
Int dot(const std::vector<Int>& a, const std::vector<Int>& b);
std::string to_string(const std::vector<Int>& v);

}  // namespace eqslice
