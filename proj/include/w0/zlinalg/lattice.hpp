#pragma once

#include <vector>

#include "w0/zlinalg/int_matrix.hpp"
#include "w0/zlinalg/smith.hpp"

namespace w0 {

/// Rank over Q by fraction-free (Bareiss) elimination. Kept separate from
/// the Smith-form path so the two can cross-check each other.
inline std::size_t rank(IntMatrix a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a(p, c) == 0) ++p;
    if (p == m) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

/// Columns form a Z-basis of {x : A x = 0}.
inline IntMatrix kernel_basis(const IntMatrix& a) {
  SmithForm s = smith_normal_form(a);
  return s.V.col_range(s.rank(), a.cols() - s.rank());
}

/// Canonical basis (columns) of the lattice spanned by the columns of A:
/// the transpose of the row Hermite normal form of A^T with zero rows
/// dropped. Two matrices span the same lattice iff their results are equal.
inline IntMatrix hermite_basis(const IntMatrix& a) {
  IntMatrix h = a.transpose();
  const std::size_t k = h.rows(), m = h.cols();
  std::size_t r = 0;
  for (std::size_t j = 0; j < m && r < k; ++j) {
    for (;;) {
      std::size_t best = k;
      for (std::size_t i = r; i < k; ++i)
        if (h(i, j) != 0 && (best == k || detail::abs_value(h(i, j)) < detail::abs_value(h(best, j))))
          best = i;
      if (best == k) break;
      h.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < k; ++i) {
        if (h(i, j) == 0) continue;
        h.add_row_multiple(i, r, -(h(i, j) / h(r, j)));
        if (h(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (r >= k || h(r, j) == 0) continue;
    if (h(r, j) < 0) h.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = h(i, j) / h(r, j);
      if (h(i, j) - q * h(r, j) < 0) q -= 1;
      h.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  return h.row_range(0, r).transpose();
}

/// True iff the columns of a and of b span the same sublattice of Z^m.
inline bool same_lattice(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw ShapeMismatch("same_lattice: ambient dimensions differ");
  return hermite_basis(a) == hermite_basis(b);
}

}  // namespace w0
