#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "w0/zlinalg/int_matrix.hpp"
#include "w0/zlinalg/sparse_matrix.hpp"

namespace w0 {

/// U * A * V = D with U, V unimodular and D diagonal with d_1 | d_2 | ... | d_r > 0.
struct SmithForm {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;
  std::vector<Integer> invariant_factors;

  std::size_t rank() const noexcept { return invariant_factors.size(); }
};

namespace detail {

inline Integer abs_value(const Integer& v) { return v < 0 ? Integer(-v) : v; }

// Smallest nonzero |a(i, j)| for i, j >= t; ties broken by lowest row, then
// lowest column.
inline std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(const IntMatrix& a,
                                                                         std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      const Integer& v = a(i, j);
      if (v == 0) continue;
      Integer av = abs_value(v);
      if (!best || av < best_abs) {
        best = {i, j};
        best_abs = std::move(av);
        if (best_abs == 1) return best;
      }
    }
  return best;
}

// In-place diagonalization. When u / v are non-null the row / column
// operations are mirrored into them so that U * A_in * V = A_out.
inline void diagonalize(IntMatrix& a, IntMatrix* u, IntMatrix* v) {
  const std::size_t steps = std::min(a.rows(), a.cols());
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      auto pivot = smallest_entry(a, t);
      if (!pivot) return;
      auto [pi, pj] = *pivot;
      a.swap_rows(t, pi);
      if (u) u->swap_rows(t, pi);
      a.swap_cols(t, pj);
      if (v) v->swap_cols(t, pj);

      bool clean = true;
      const Integer p = a(t, t);
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        Integer q = a(i, t) / p;
        a.add_row_multiple(i, t, -q);
        if (u) u->add_row_multiple(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        Integer q = a(t, j) / p;
        a.add_col_multiple(j, t, -q);
        if (v) v->add_col_multiple(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Row and column t are clear; enforce divisibility of the remainder.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < a.rows() && divides_all; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (a(i, j) % p != 0) {
            a.add_row_multiple(t, i, 1);
            if (u) u->add_row_multiple(t, i, 1);
            divides_all = false;
            break;
          }
      if (!divides_all) continue;

      if (a(t, t) < 0) {
        a.negate_row(t);
        if (u) u->negate_row(t);
      }
      break;
    }
  }
}

inline std::vector<Integer> diagonal_factors(const IntMatrix& d) {
  std::vector<Integer> out;
  for (std::size_t t = 0; t < std::min(d.rows(), d.cols()); ++t)
    if (d(t, t) != 0) out.push_back(d(t, t));
  return out;
}

struct Overflow {};

// Scalar policies for the sparse elimination: a checked 64-bit fast path
// and the arbitrary-precision fallback.
struct CheckedInt64 {
  using type = std::int64_t;
  static type from(const Integer& v) {
    if (v > INT64_MAX || v < -INT64_MAX) throw Overflow{};
    return static_cast<type>(v);
  }
  static Integer to_integer(type v) { return Integer(v); }
  static type mul_sub(type a, type b, type c) {  // a - b * c
    type prod;
    type out;
    if (__builtin_mul_overflow(b, c, &prod) || __builtin_sub_overflow(a, prod, &out) ||
        out == INT64_MIN)
      throw Overflow{};
    return out;
  }
  static bool is_unit(type v) { return v == 1 || v == -1; }
};

struct BigInt {
  using type = Integer;
  static type from(const Integer& v) { return v; }
  static Integer to_integer(const type& v) { return v; }
  static type mul_sub(const type& a, const type& b, const type& c) { return a - b * c; }
  static bool is_unit(const type& v) { return v == 1 || v == -1; }
};

// Eliminates unit pivots (Markowitz-cheapest first), each of which
// contributes an invariant factor 1, then runs the dense reduction on
// whatever is left.
template <class Policy>
std::vector<Integer> sparse_invariant_factors(const SparseMatrix& m) {
  using T = typename Policy::type;
  using Row = std::vector<std::pair<std::size_t, T>>;

  const std::size_t nrows = m.rows();
  std::vector<Row> rows(nrows);
  std::vector<std::vector<std::size_t>> col_rows(m.cols());
  std::vector<std::size_t> col_count(m.cols(), 0);
  for (std::size_t r = 0; r < nrows; ++r) {
    for (const auto& [c, v] : m.row(r)) {
      rows[r].emplace_back(c, Policy::from(v));
      col_rows[c].push_back(r);
      ++col_count[c];
    }
  }
  std::vector<bool> alive(nrows, true);
  std::size_t units = 0;

  auto find_in_row = [](const Row& row, std::size_t c) -> const T* {
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, std::size_t col) { return e.first < col; });
    return (it != row.end() && it->first == c) ? &it->second : nullptr;
  };

  Row merged;
  for (;;) {
    std::size_t best_r = nrows, best_c = 0;
    std::size_t best_cost = SIZE_MAX;
    for (std::size_t r = 0; r < nrows && best_cost != 0; ++r) {
      if (!alive[r] || rows[r].empty()) continue;
      const std::size_t rlen = rows[r].size() - 1;
      for (const auto& [c, v] : rows[r]) {
        if (!Policy::is_unit(v)) continue;
        std::size_t cost = rlen * (col_count[c] - 1);
        if (cost < best_cost) {
          best_cost = cost;
          best_r = r;
          best_c = c;
          if (cost == 0) break;
        }
      }
    }
    if (best_r == nrows) break;

    const Row pivot_row = rows[best_r];
    const T pivot = *find_in_row(pivot_row, best_c);
    std::vector<std::size_t> targets = col_rows[best_c];
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    std::vector<std::size_t> fresh_targets;
    for (std::size_t r : targets) {
      if (r == best_r || !alive[r]) continue;
      const T* entry = find_in_row(rows[r], best_c);
      if (!entry) continue;
      const T factor = pivot == T(1) ? T(*entry) : T(-*entry);
      merged.clear();
      const Row& target = rows[r];
      std::size_t a = 0, b = 0;
      while (a < target.size() || b < pivot_row.size()) {
        if (b == pivot_row.size() || (a < target.size() && target[a].first < pivot_row[b].first)) {
          merged.push_back(target[a++]);
        } else if (a == target.size() || pivot_row[b].first < target[a].first) {
          const std::size_t c = pivot_row[b].first;
          merged.emplace_back(c, Policy::mul_sub(T(0), factor, pivot_row[b].second));
          ++col_count[c];
          col_rows[c].push_back(r);
          ++b;
        } else {
          const std::size_t c = target[a].first;
          T v = Policy::mul_sub(target[a].second, factor, pivot_row[b].second);
          if (v == 0) {
            --col_count[c];
          } else {
            merged.emplace_back(c, std::move(v));
          }
          ++a;
          ++b;
        }
      }
      rows[r].swap(merged);
    }
    for (const auto& [c, v] : pivot_row) --col_count[c];
    rows[best_r].clear();
    alive[best_r] = false;
    col_rows[best_c].clear();
    ++units;
  }

  // Dense remainder.
  std::vector<std::size_t> live_rows;
  std::vector<std::size_t> col_index(m.cols(), SIZE_MAX);
  std::size_t ncols = 0;
  for (std::size_t r = 0; r < nrows; ++r) {
    if (!alive[r] || rows[r].empty()) continue;
    live_rows.push_back(r);
    for (const auto& [c, v] : rows[r])
      if (col_index[c] == SIZE_MAX) col_index[c] = ncols++;
  }
  std::vector<Integer> factors(units, Integer(1));
  if (!live_rows.empty()) {
    IntMatrix rest(live_rows.size(), ncols);
    for (std::size_t i = 0; i < live_rows.size(); ++i)
      for (const auto& [c, v] : rows[live_rows[i]]) rest(i, col_index[c]) = Policy::to_integer(v);
    diagonalize(rest, nullptr, nullptr);
    for (auto& f : diagonal_factors(rest)) factors.push_back(std::move(f));
  }
  return factors;
}

}  // namespace detail

/// Smith normal form with transforms. Pivoting is deterministic: smallest
/// nonzero absolute value, then lowest row, then lowest column.
inline SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm s{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols()), {}};
  detail::diagonalize(s.D, &s.U, &s.V);
  s.invariant_factors = detail::diagonal_factors(s.D);
  return s;
}

/// Invariant factors only (every one of them, including the 1s), without
/// transforms. Suitable for large sparse coboundaries.
inline std::vector<Integer> invariant_factors(const SparseMatrix& a) {
  try {
    return detail::sparse_invariant_factors<detail::CheckedInt64>(a);
  } catch (const detail::Overflow&) {
    return detail::sparse_invariant_factors<detail::BigInt>(a);
  }
}

inline std::vector<Integer> invariant_factors(const IntMatrix& a) {
  return invariant_factors(SparseMatrix::from_dense(a));
}

}  // namespace w0
