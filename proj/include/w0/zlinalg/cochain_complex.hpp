#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "w0/zlinalg/smith.hpp"
#include "w0/zlinalg/sparse_matrix.hpp"

namespace w0 {

enum class Ring { Z, Q };

inline const char* to_string(Ring r) { return r == Ring::Z ? "Z" : "Q"; }

/// A finitely generated abelian group Z^free_rank + Z/t_1 + ... with
/// t_1 | t_2 | ...; over Q only free_rank is meaningful.
struct CohomologyGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  bool is_zero() const noexcept { return free_rank == 0 && torsion.empty(); }

  friend bool operator==(const CohomologyGroup&, const CohomologyGroup&) = default;
};

/// "Z^2 + Z/2" style rendering with the direct-sum sign; "0" for the zero group.
inline std::string render(const CohomologyGroup& g, Ring ring) {
  const char* base = ring == Ring::Z ? "Z" : "Q";
  std::ostringstream os;
  bool first = true;
  if (g.free_rank > 0) {
    os << base;
    if (g.free_rank > 1) os << '^' << g.free_rank;
    first = false;
  }
  for (const auto& t : g.torsion) {
    os << (first ? "" : " ⊕ ") << "Z/" << t;
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

/// Cochain complex 0 -> C^0 -> C^1 -> ... -> C^top -> 0. differential(n) is
/// the dims(n+1) x dims(n) matrix of d^n; degrees outside the stored range
/// have rank 0 and their differentials are correctly shaped empty matrices.
class CochainComplex {
 public:
  CochainComplex() = default;

  CochainComplex(std::vector<std::size_t> dims, std::vector<SparseMatrix> differentials)
      : dims_(std::move(dims)), diffs_(std::move(differentials)) {
    const std::size_t expected = dims_.empty() ? 0 : dims_.size() - 1;
    if (diffs_.size() != expected)
      throw ShapeMismatch("CochainComplex: " + std::to_string(diffs_.size()) +
                          " differentials for " + std::to_string(dims_.size()) + " degrees");
    for (std::size_t n = 0; n < diffs_.size(); ++n)
      if (diffs_[n].rows() != dims_[n + 1] || diffs_[n].cols() != dims_[n])
        throw ShapeMismatch("CochainComplex: d^" + std::to_string(n) + " has shape " +
                            std::to_string(diffs_[n].rows()) + "x" +
                            std::to_string(diffs_[n].cols()) + ", expected " +
                            std::to_string(dims_[n + 1]) + "x" + std::to_string(dims_[n]));
  }

  /// Number of stored degrees (top degree + 1).
  std::size_t length() const noexcept { return dims_.size(); }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }

  std::size_t dim(std::ptrdiff_t n) const {
    return (n < 0 || static_cast<std::size_t>(n) >= dims_.size()) ? 0 : dims_[n];
  }

  SparseMatrix differential(std::ptrdiff_t n) const {
    if (n >= 0 && static_cast<std::size_t>(n) < diffs_.size()) return diffs_[n];
    return SparseMatrix(dim(n + 1), dim(n));
  }

  const std::vector<SparseMatrix>& differentials() const noexcept { return diffs_; }

  /// Lowest n with d^{n+1} d^n != 0, if any.
  std::optional<std::size_t> square_defect() const {
    for (std::size_t n = 0; n + 1 < diffs_.size(); ++n)
      if (!(diffs_[n + 1] * diffs_[n]).is_zero()) return n;
    return std::nullopt;
  }

 private:
  std::vector<std::size_t> dims_;
  std::vector<SparseMatrix> diffs_;
};

/// H^n = ker d^n / im d^{n-1} for every stored degree.
inline std::vector<CohomologyGroup> complex_cohomology(const CochainComplex& c, Ring ring) {
  if (auto bad = c.square_defect())
    throw NotAComplex(*bad, "d^" + std::to_string(*bad + 1) + " * d^" + std::to_string(*bad) +
                                " is not zero");
  std::vector<std::vector<Integer>> factors(c.length());
  for (std::size_t n = 0; n < c.length(); ++n) factors[n] = invariant_factors(c.differential(n));

  std::vector<CohomologyGroup> out(c.length());
  for (std::size_t n = 0; n < c.length(); ++n) {
    const std::size_t rank_out = factors[n].size();
    const std::size_t rank_in = n == 0 ? 0 : factors[n - 1].size();
    out[n].free_rank = c.dim(n) - rank_out - rank_in;
    if (ring == Ring::Z && n > 0)
      for (const auto& f : factors[n - 1])
        if (f > 1) out[n].torsion.push_back(f);
  }
  return out;
}

/// Alternating sum of free ranks.
inline long long euler_characteristic(const std::vector<CohomologyGroup>& groups) {
  long long chi = 0;
  for (std::size_t n = 0; n < groups.size(); ++n)
    chi += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(groups[n].free_rank);
  return chi;
}

}  // namespace w0
