#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "w0/zlinalg/int_matrix.hpp"

namespace w0 {

/// Row-compressed integer matrix. Coboundary matrices are very sparse (an
/// n-simplex has n + 1 faces), so complexes store their differentials in
/// this form and only small pieces are ever densified.
class SparseMatrix {
 public:
  using Entry = std::pair<std::size_t, Integer>;
  using Row = std::vector<Entry>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  /// Builds from (row, col, value) triplets; duplicates are summed and zeros dropped.
  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols,
                                    const std::vector<std::tuple<std::size_t, std::size_t, Integer>>& t) {
    std::vector<std::map<std::size_t, Integer>> acc(rows);
    for (const auto& [r, c, v] : t) {
      if (r >= rows || c >= cols) throw ShapeMismatch("SparseMatrix: triplet out of range");
      acc[r][c] += v;
    }
    SparseMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (auto& [c, v] : acc[r])
        if (v != 0) m.rows_[r].emplace_back(c, std::move(v));
    return m;
  }

  static SparseMatrix from_dense(const IntMatrix& d) {
    SparseMatrix m(d.rows(), d.cols());
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (std::size_t c = 0; c < d.cols(); ++c)
        if (d(r, c) != 0) m.rows_[r].emplace_back(c, d(r, c));
    return m;
  }

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  const Row& row(std::size_t r) const { return rows_[r]; }
  const std::vector<Row>& row_data() const noexcept { return rows_; }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
  }

  bool is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return r.empty(); });
  }

  Integer at(std::size_t r, std::size_t c) const {
    const auto& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, std::size_t col) { return e.first < col; });
    return (it != row.end() && it->first == c) ? it->second : Integer(0);
  }

  IntMatrix to_dense() const {
    IntMatrix d(rows(), cols_);
    for (std::size_t r = 0; r < rows(); ++r)
      for (const auto& [c, v] : rows_[r]) d(r, c) = v;
    return d;
  }

  SparseMatrix transpose() const {
    SparseMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r)
      for (const auto& [c, v] : rows_[r]) t.rows_[c].emplace_back(r, v);
    return t;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows()) throw ShapeMismatch("SparseMatrix: incompatible product");
    SparseMatrix out(a.rows(), b.cols_);
    std::map<std::size_t, Integer> acc;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      acc.clear();
      for (const auto& [k, av] : a.rows_[r])
        for (const auto& [c, bv] : b.rows_[k]) acc[c] += av * bv;
      for (auto& [c, v] : acc)
        if (v != 0) out.rows_[r].emplace_back(c, std::move(v));
    }
    return out;
  }

 private:
  std::size_t cols_ = 0;
  std::vector<Row> rows_;
};

}  // namespace w0
