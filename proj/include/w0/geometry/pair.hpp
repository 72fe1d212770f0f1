#pragma once

#include <map>
#include <string>
#include <vector>

#include "w0/geometry/snc.hpp"
#include "w0/sscomplex/simplicial_map.hpp"
#include "w0/zlinalg/exactness.hpp"

namespace w0 {

/// A closed subvariety Z of a complete X, both given by configurations,
/// with the inclusion on components and on stratum pieces.
struct PairData {
  SncConfiguration ambient;
  SncConfiguration closed;
  /// component_map[i] indexes ambient.components for closed component i.
  std::vector<std::size_t> component_map;
  /// closed stratum-piece label -> ambient stratum-piece label (same depth).
  std::map<std::string, std::string> stratum_map;

  friend bool operator==(const PairData&, const PairData&) = default;
};

/// The simplicial map dual(Z) -> dual(X) induced by the inclusion.
inline SimplicialMap induced_map(const PairData& p) {
  SimplicialMap f{dual_complex(p.closed), dual_complex(p.ambient), {}};
  if (p.component_map.size() != p.closed.components.size())
    throw InvalidInput("inclusion: every closed component needs an ambient component");
  std::map<std::string, std::pair<std::size_t, std::size_t>> where;  // label -> (level, id)
  for (std::size_t n = 0; n < f.target.levels(); ++n)
    for (std::size_t x = 0; x < f.target.count(n); ++x) where[f.target.label(n, x)] = {n, x};

  f.images.resize(f.source.levels());
  for (std::size_t n = 0; n < f.source.levels(); ++n) {
    for (std::size_t x = 0; x < f.source.count(n); ++x) {
      if (n == 0) {
        if (p.component_map[x] >= p.ambient.components.size())
          throw InvalidInput("inclusion: component '" + p.closed.components[x] +
                             "' maps to an undefined ambient component");
        f.images[0].push_back(p.component_map[x]);
        continue;
      }
      const std::string label = f.source.label(n, x);
      auto m = p.stratum_map.find(label);
      if (m == p.stratum_map.end()) throw InvalidInput("inclusion: no image for stratum '" + label + "'");
      auto w = where.find(m->second);
      if (w == where.end() || w->second.first != n)
        throw InvalidInput("inclusion: '" + label + "' maps to '" + m->second +
                           "', which is not an ambient stratum of the same depth");
      f.images[n].push_back(w->second.second);
    }
  }
  auto rep = validate_map(f);
  if (!rep.ok()) throw InvalidInput("inclusion is not a simplicial map: " + rep.describe());
  return f;
}

/// W_0 H_c^i(X - Z) as the cohomology of the algebraic cone of the inclusion.
inline std::vector<CohomologyGroup> khc_pair(const PairData& p, Ring ring) {
  return complex_cohomology(algebraic_cone(induced_map(p)), ring);
}

struct LesPosition {
  /// "H^i(cone)", "H^i(X)" or "H^i(Z)": the middle term being checked.
  std::string term;
  std::size_t degree;
  ExactnessReport over_q;
  ExactnessReport over_z;

  bool exact() const noexcept { return over_q.exact && over_z.exact; }
};

struct LesReport {
  std::vector<LesPosition> positions;

  bool exact() const {
    return std::all_of(positions.begin(), positions.end(), [](const auto& p) { return p.exact(); });
  }
};

namespace detail {

// Rows/columns of Cone^n = C^n(X) + C^{n-1}(Z).
inline IntMatrix cone_projection(const CochainComplex& x, const CochainComplex& z, std::ptrdiff_t n) {
  const std::size_t bx = x.dim(n), az = z.dim(n - 1);
  IntMatrix m(bx, bx + az);
  for (std::size_t i = 0; i < bx; ++i) m(i, i) = 1;
  return m;
}

inline IntMatrix cone_inclusion(const CochainComplex& x, const CochainComplex& z, std::ptrdiff_t n) {
  // C^{n-1}(Z) -> Cone^n, a |-> (0, a)
  const std::size_t bx = x.dim(n), az = z.dim(n - 1);
  IntMatrix m(bx + az, az);
  for (std::size_t i = 0; i < az; ++i) m(bx + i, i) = 1;
  return m;
}

}  // namespace detail

/// Checks the long exact sequence
///   ... -> H^{i-1}(Z) -> H^i(cone) -> H^i(X) -> H^i(Z) -> H^{i+1}(cone) -> ...
/// at every position, over Q and over Z, for the cone of f: Z -> X.
inline LesReport les_verify(const SimplicialMap& f) {
  const CochainComplex x = cochain_complex(f.target);
  const CochainComplex z = cochain_complex(f.source);
  const CochainComplex cone = algebraic_cone(f);
  auto d = [](const CochainComplex& c, std::ptrdiff_t n) { return c.differential(n).to_dense(); };
  auto fstar = [&](std::ptrdiff_t n) {
    if (n < 0 || static_cast<std::size_t>(n) >= f.source.levels()) return IntMatrix(z.dim(n), x.dim(n));
    return pullback(f, static_cast<std::size_t>(n)).to_dense();
  };

  LesReport rep;
  const auto top = static_cast<std::ptrdiff_t>(std::max({cone.length(), x.length(), z.length() + 1}));
  for (std::ptrdiff_t n = 0; n < top; ++n) {
    auto check = [&](const std::string& term, const IntMatrix& phi, const IntMatrix& psi,
                     const IntMatrix& da, const IntMatrix& db, const IntMatrix& db_in,
                     const IntMatrix& dc_in) {
      rep.positions.push_back({term, static_cast<std::size_t>(n),
                               subquotient_exactness(phi, psi, da, db, db_in, dc_in, Ring::Q),
                               subquotient_exactness(phi, psi, da, db, db_in, dc_in, Ring::Z)});
    };
    // H^{n-1}(Z) -> H^n(cone) -> H^n(X)
    check("H^" + std::to_string(n) + "(cone)", detail::cone_inclusion(x, z, n),
          detail::cone_projection(x, z, n), d(z, n - 1), d(cone, n), d(cone, n - 1), d(x, n - 1));
    // H^n(cone) -> H^n(X) -> H^n(Z)
    check("H^" + std::to_string(n) + "(X)", detail::cone_projection(x, z, n), fstar(n), d(cone, n),
          d(x, n), d(x, n - 1), d(z, n - 1));
    // H^n(X) -> H^n(Z) -> H^{n+1}(cone)
    check("H^" + std::to_string(n) + "(Z)", fstar(n), detail::cone_inclusion(x, z, n + 1), d(x, n),
          d(z, n), d(z, n - 1), d(cone, n));
  }
  return rep;
}

inline LesReport les_verify(const PairData& p) { return les_verify(induced_map(p)); }

}  // namespace w0
