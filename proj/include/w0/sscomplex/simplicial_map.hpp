#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "w0/sscomplex/semisimplicial_set.hpp"

namespace w0 {

/// Levelwise map source -> target; images[n][s] is the n-simplex of target
/// that simplex s of source goes to.
struct SimplicialMap {
  SemisimplicialSet source;
  SemisimplicialSet target;
  std::vector<std::vector<std::size_t>> images;

  static SimplicialMap identity(const SemisimplicialSet& s) {
    SimplicialMap f{s, s, {}};
    f.images.resize(s.levels());
    for (std::size_t n = 0; n < s.levels(); ++n)
      for (std::size_t x = 0; x < s.count(n); ++x) f.images[n].push_back(x);
    return f;
  }

  /// The map from the empty set.
  static SimplicialMap from_empty(const SemisimplicialSet& target) {
    return SimplicialMap{SemisimplicialSet{}, target, {}};
  }
};

struct MapViolation {
  enum class Kind { Missing, OutOfRange, NotCommuting };
  Kind kind;
  std::size_t n;
  std::size_t simplex;
  std::size_t k;  // face index for NotCommuting

  std::string describe() const {
    switch (kind) {
      case Kind::Missing:
        return "no image for simplex " + std::to_string(simplex) + " at level " + std::to_string(n);
      case Kind::OutOfRange:
        return "image of simplex " + std::to_string(simplex) + " at level " + std::to_string(n) +
               " is not a simplex of the target";
      case Kind::NotCommuting:
        return "f(delta_" + std::to_string(k) + " sigma) != delta_" + std::to_string(k) +
               " f(sigma) for sigma = " + std::to_string(simplex) + " at level " + std::to_string(n);
    }
    return {};
  }
};

struct MapValidationReport {
  ValidationReport source;
  ValidationReport target;
  std::vector<MapViolation> violations;

  bool ok() const noexcept { return source.ok() && target.ok() && violations.empty(); }

  std::string describe() const {
    if (ok()) return "ok";
    std::string out;
    if (!source.ok()) out += "source: " + source.describe();
    if (!target.ok()) out += std::string(out.empty() ? "" : "; ") + "target: " + target.describe();
    for (const auto& v : violations) out += (out.empty() ? "" : "; ") + v.describe();
    return out;
  }
};

inline MapValidationReport validate_map(const SimplicialMap& f) {
  MapValidationReport rep{validate(f.source), validate(f.target), {}};
  if (!rep.source.ok() || !rep.target.ok()) return rep;
  auto image = [&](std::size_t n, std::size_t x) -> std::optional<std::size_t> {
    if (n >= f.images.size() || x >= f.images[n].size()) return std::nullopt;
    std::size_t y = f.images[n][x];
    if (y >= f.target.count(n)) return std::nullopt;
    return y;
  };
  bool total = true;
  for (std::size_t n = 0; n < f.source.levels(); ++n)
    for (std::size_t x = 0; x < f.source.count(n); ++x) {
      if (n >= f.images.size() || x >= f.images[n].size()) {
        rep.violations.push_back({MapViolation::Kind::Missing, n, x, 0});
        total = false;
      } else if (!image(n, x)) {
        rep.violations.push_back({MapViolation::Kind::OutOfRange, n, x, 0});
        total = false;
      }
    }
  if (!total) return rep;
  for (std::size_t n = 1; n < f.source.levels(); ++n)
    for (std::size_t x = 0; x < f.source.count(n); ++x) {
      const std::size_t y = *image(n, x);
      for (std::size_t k = 0; k <= n; ++k)
        if (*image(n - 1, f.source.face(n, x, k)) != f.target.face(n, y, k))
          rep.violations.push_back({MapViolation::Kind::NotCommuting, n, x, k});
    }
  return rep;
}

inline void require_valid(const SimplicialMap& f) {
  auto rep = validate_map(f);
  if (!rep.ok()) throw InvalidInput("invalid simplicial map: " + rep.describe());
}

/// Pullback f^*: C^n(target) -> C^n(source), as a count_source(n) x count_target(n) matrix.
inline SparseMatrix pullback(const SimplicialMap& f, std::size_t n) {
  std::vector<std::tuple<std::size_t, std::size_t, Integer>> t;
  for (std::size_t x = 0; x < f.source.count(n); ++x) t.emplace_back(x, f.images[n][x], 1);
  return SparseMatrix::from_triplets(f.source.count(n), f.target.count(n), t);
}

/// Cone^n = C^n(target) + C^{n-1}(source) with D(b, a) = (d b, f^* b - d a).
/// Its cohomology is the relative cohomology H^n(target, source).
inline CochainComplex algebraic_cone(const SimplicialMap& f) {
  require_valid(f);
  const CochainComplex tgt = cochain_complex(f.target);
  const CochainComplex src = cochain_complex(f.source);
  const std::size_t length = std::max(tgt.length(), src.length() == 0 ? 0 : src.length() + 1);

  std::vector<std::size_t> dims(length);
  for (std::size_t n = 0; n < length; ++n)
    dims[n] = tgt.dim(static_cast<std::ptrdiff_t>(n)) + src.dim(static_cast<std::ptrdiff_t>(n) - 1);

  std::vector<SparseMatrix> diffs;
  for (std::size_t n = 0; n + 1 < length; ++n) {
    const auto sn = static_cast<std::ptrdiff_t>(n);
    const std::size_t b_in = tgt.dim(sn), b_out = tgt.dim(sn + 1);
    std::vector<std::tuple<std::size_t, std::size_t, Integer>> t;
    // d_target block
    const SparseMatrix db = tgt.differential(sn);
    for (std::size_t r = 0; r < db.rows(); ++r)
      for (const auto& [c, v] : db.row(r)) t.emplace_back(r, c, v);
    // f^* block: source level n rows, target level n columns
    if (n < f.source.levels()) {
      const SparseMatrix fs = pullback(f, n);
      for (std::size_t r = 0; r < fs.rows(); ++r)
        for (const auto& [c, v] : fs.row(r)) t.emplace_back(b_out + r, c, v);
    }
    // -d_source block
    if (n >= 1) {
      const SparseMatrix da = src.differential(sn - 1);
      for (std::size_t r = 0; r < da.rows(); ++r)
        for (const auto& [c, v] : da.row(r)) t.emplace_back(b_out + r, b_in + c, -v);
    }
    diffs.push_back(SparseMatrix::from_triplets(dims[n + 1], dims[n], t));
  }
  CochainComplex cone(std::move(dims), std::move(diffs));
  if (auto bad = cone.square_defect())
    throw NotAComplex(*bad, "mapping cone fails D^2 = 0 at degree " + std::to_string(*bad));
  return cone;
}

}  // namespace w0
