#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "w0/error.hpp"
#include "w0/zlinalg/cochain_complex.hpp"

namespace w0 {

/// A finite semisimplicial set: n-simplices are the integers 0..count(n)-1
/// and for n >= 1 every n-simplex has faces delta_0 .. delta_n in level n-1.
/// Construction does not validate; call validate() or go through a builder
/// that does.
class SemisimplicialSet {
 public:
  using Id = std::size_t;

  SemisimplicialSet() = default;

  /// faces[n][s] lists the n + 1 faces of simplex s at level n; faces[0] is
  /// ignored and may be empty.
  SemisimplicialSet(std::vector<std::size_t> counts, std::vector<std::vector<std::vector<Id>>> faces,
                    std::vector<std::vector<std::string>> labels = {})
      : counts_(std::move(counts)), faces_(std::move(faces)), labels_(std::move(labels)) {
    faces_.resize(counts_.size());
    while (!counts_.empty() && counts_.back() == 0) {
      counts_.pop_back();
      faces_.pop_back();
    }
  }

  /// Number of nonempty levels (top dimension + 1); 0 for the empty set.
  std::size_t levels() const noexcept { return counts_.size(); }
  std::ptrdiff_t dimension() const noexcept { return static_cast<std::ptrdiff_t>(counts_.size()) - 1; }

  std::size_t count(std::size_t n) const noexcept { return n < counts_.size() ? counts_[n] : 0; }
  const std::vector<std::size_t>& counts() const noexcept { return counts_; }

  /// Face list of simplex s at level n (n >= 1). May be malformed before validation.
  const std::vector<Id>& faces(std::size_t n, Id s) const { return faces_.at(n).at(s); }
  const std::vector<std::vector<std::vector<Id>>>& face_data() const noexcept { return faces_; }

  Id face(std::size_t n, Id s, std::size_t k) const { return faces_[n][s][k]; }

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::vector<std::string>>& labels() const noexcept { return labels_; }

  std::string label(std::size_t n, Id s) const {
    if (n < labels_.size() && s < labels_[n].size() && !labels_[n][s].empty()) return labels_[n][s];
    return std::to_string(n) + ":" + std::to_string(s);
  }

  std::size_t simplex_count() const {
    std::size_t total = 0;
    for (auto c : counts_) total += c;
    return total;
  }

  friend bool operator==(const SemisimplicialSet& a, const SemisimplicialSet& b) {
    return a.counts_ == b.counts_ && a.faces_ == b.faces_;
  }

 private:
  std::vector<std::size_t> counts_;
  std::vector<std::vector<std::vector<Id>>> faces_;
  std::vector<std::vector<std::string>> labels_;
};

/// One violated condition. For identity violations i < j and the failing
/// equation is delta_i delta_j (sigma) = delta_{j-1} delta_i (sigma); for
/// totality violations only `i` (the face index) is meaningful.
struct Violation {
  enum class Kind { WrongArity, FaceOutOfRange, Identity };
  Kind kind;
  std::size_t n;
  std::size_t simplex;
  std::size_t i;
  std::size_t j;

  std::string describe() const {
    std::ostringstream os;
    switch (kind) {
      case Kind::WrongArity:
        os << "simplex " << simplex << " at level " << n << " does not have " << n + 1 << " faces";
        break;
      case Kind::FaceOutOfRange:
        os << "face " << i << " of simplex " << simplex << " at level " << n
           << " is not a simplex of level " << n - 1;
        break;
      case Kind::Identity:
        os << "(n=" << n << ", sigma=" << simplex << ", i=" << i << ", j=" << j
           << "): delta_" << i << " delta_" << j << " != delta_" << j - 1 << " delta_" << i;
        break;
    }
    return os.str();
  }

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }

  std::string describe() const {
    if (ok()) return "ok";
    std::string out;
    for (const auto& v : violations) out += (out.empty() ? "" : "; ") + v.describe();
    return out;
  }
};

/// Checks arity, totality and every identity delta_i delta_j = delta_{j-1} delta_i (i < j).
inline ValidationReport validate(const SemisimplicialSet& s) {
  ValidationReport rep;
  const auto& faces = s.face_data();
  std::vector<std::vector<bool>> well_formed(s.levels());
  for (std::size_t n = 1; n < s.levels(); ++n) {
    well_formed[n].assign(s.count(n), false);
    if (faces[n].size() != s.count(n)) {
      for (std::size_t x = faces[n].size(); x < s.count(n); ++x)
        rep.violations.push_back({Violation::Kind::WrongArity, n, x, 0, 0});
    }
    for (std::size_t x = 0; x < std::min(faces[n].size(), s.count(n)); ++x) {
      const auto& f = faces[n][x];
      if (f.size() != n + 1) {
        rep.violations.push_back({Violation::Kind::WrongArity, n, x, 0, 0});
        continue;
      }
      bool ok = true;
      for (std::size_t k = 0; k <= n; ++k)
        if (f[k] >= s.count(n - 1)) {
          rep.violations.push_back({Violation::Kind::FaceOutOfRange, n, x, k, 0});
          ok = false;
        }
      well_formed[n][x] = ok;
    }
  }
  for (std::size_t n = 2; n < s.levels(); ++n) {
    for (std::size_t x = 0; x < s.count(n); ++x) {
      if (!well_formed[n][x]) continue;
      const auto& f = faces[n][x];
      for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
          if (!well_formed[n - 1][f[j]] || !well_formed[n - 1][f[i]]) continue;
          if (faces[n - 1][f[j]][i] != faces[n - 1][f[i]][j - 1])
            rep.violations.push_back({Violation::Kind::Identity, n, x, i, j});
        }
    }
  }
  return rep;
}

/// Throws InvalidInput carrying the report when s is not a valid semisimplicial set.
inline void require_valid(const SemisimplicialSet& s) {
  auto rep = validate(s);
  if (!rep.ok()) throw InvalidInput("invalid semisimplicial set: " + rep.describe());
}

/// Cochains with (d phi)(sigma) = sum_k (-1)^k phi(delta_k sigma).
inline CochainComplex cochain_complex(const SemisimplicialSet& s) {
  require_valid(s);
  std::vector<SparseMatrix> diffs;
  for (std::size_t n = 1; n < s.levels(); ++n) {
    std::vector<std::tuple<std::size_t, std::size_t, Integer>> t;
    t.reserve(s.count(n) * (n + 1));
    for (std::size_t x = 0; x < s.count(n); ++x)
      for (std::size_t k = 0; k <= n; ++k) t.emplace_back(x, s.face(n, x, k), k % 2 == 0 ? 1 : -1);
    diffs.push_back(SparseMatrix::from_triplets(s.count(n), s.count(n - 1), t));
  }
  CochainComplex c(s.counts(), std::move(diffs));
  if (auto bad = c.square_defect())
    throw NotAComplex(*bad, "coboundary of a validated semisimplicial set fails d^2 = 0 at degree " +
                                std::to_string(*bad));
  return c;
}

inline std::vector<CohomologyGroup> cohomology(const SemisimplicialSet& s, Ring ring) {
  return complex_cohomology(cochain_complex(s), ring);
}

/// Alternating count of simplices.
inline long long euler_characteristic(const SemisimplicialSet& s) {
  long long chi = 0;
  for (std::size_t n = 0; n < s.levels(); ++n)
    chi += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(s.count(n));
  return chi;
}

}  // namespace w0
