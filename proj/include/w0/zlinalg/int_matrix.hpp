#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "w0/error.hpp"

namespace w0 {

/// Arbitrary-precision integer used for every matrix entry.
using Integer = boost::multiprecision::cpp_int;

/// Dense integer matrix stored row-major. Matrices with zero rows or zero
/// columns are valid values.
class IntMatrix {
 public:
  IntMatrix() = default;

  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
      throw ShapeMismatch("IntMatrix: " + std::to_string(data_.size()) +
                          " entries for a " + std::to_string(rows_) + "x" +
                          std::to_string(cols_) + " matrix");
    }
  }

  /// Row-by-row literal, e.g. `IntMatrix{{2, 4}, {6, 8}}`.
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw ShapeMismatch("IntMatrix: ragged literal");
      for (long long v : row) data_.emplace_back(v);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  const std::vector<Integer>& entries() const noexcept { return data_; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Integer& s = (*this)(source, c);
      if (s != 0) (*this)(target, c) += factor * s;
    }
  }

  /// col[target] += factor * col[source]
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Integer& s = (*this)(r, source);
      if (s != 0) (*this)(r, target) += factor * s;
    }
  }

  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
  }

  void negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
  }

  /// Columns [first, first + count) as a new matrix.
  IntMatrix col_range(std::size_t first, std::size_t count) const {
    IntMatrix m(rows_, count);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < count; ++c) m(r, c) = (*this)(r, first + c);
    return m;
  }

  /// Rows [first, first + count) as a new matrix.
  IntMatrix row_range(std::size_t first, std::size_t count) const {
    IntMatrix m(count, cols_);
    for (std::size_t r = 0; r < count; ++r)
      for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(first + r, c);
    return m;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) {
      throw ShapeMismatch("cannot multiply " + std::to_string(a.rows_) + "x" +
                          std::to_string(a.cols_) + " by " + std::to_string(b.rows_) +
                          "x" + std::to_string(b.cols_));
    }
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Integer& bkj = b(k, j);
          if (bkj != 0) out(i, j) += aik * bkj;
        }
      }
    return out;
  }

  friend IntMatrix operator-(const IntMatrix& a) {
    IntMatrix out = a;
    for (auto& v : out.data_) v = -v;
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows_; ++r) {
      os << (r ? ", [" : "[");
      for (std::size_t c = 0; c < m.cols_; ++c) os << (c ? ", " : "") << m(r, c);
      os << ']';
    }
    return os << ']';
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// [a | b]: horizontal concatenation; both operands must have the same row count.
inline IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw ShapeMismatch("hconcat: row counts differ");
  IntMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

}  // namespace w0
