#pragma once

// Fixtures, random generators and independent oracles shared by the test
// binaries. Oracles here never call the library's reduction routines.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>


#include "w0/w0.hpp"

namespace w0::testing {

// ---------------------------------------------------------------------------
// Fixtures

inline SncConfiguration point_config(const std::string& name = "P") {
  return SncConfiguration{{name}, {}, true};
}

inline SncConfiguration banana() {
  SncConfiguration c{{"A", "B"}, {}, true};
  c.strata[{0, 1}] = {{"p", {0, 0}}, {"q", {0, 0}}};
  return c;
}

/// I_n: cycle of n rational curves.
inline SncConfiguration cycle_config(std::size_t n) {
  SncConfiguration c;
  for (std::size_t i = 0; i < n; ++i) c.components.push_back("C" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t a = i, b = (i + 1) % n;
    if (a > b) std::swap(a, b);
    c.strata[{a, b}].push_back({"x" + std::to_string(a) + "_" + std::to_string(b), {0, 0}});
  }
  return c;
}

/// Four planes in general position: every pair and triple meets in one piece, no 4-fold point.
inline SncConfiguration tetrahedron() {
  SncConfiguration c{{"H0", "H1", "H2", "H3"}, {}, true};
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b) {
      c.strata[{a, b}] = {{"L" + std::to_string(a) + std::to_string(b), {0, 0}}};
      for (std::size_t d = b + 1; d < 4; ++d)
        c.strata[{a, b, d}] = {{"L" + std::to_string(a) + std::to_string(b) + std::to_string(d), {0, 0, 0}}};
    }
  return c;
}

/// Ordered simplicial complex given by its maximal simplices (sorted vertex
/// lists); delta_k drops the k-th vertex.
inline SemisimplicialSet from_simplices(const std::vector<std::vector<std::size_t>>& maximal) {
  std::set<std::vector<std::size_t>> all;
  for (auto s : maximal) {
    std::sort(s.begin(), s.end());
    const std::size_t k = s.size();
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      std::vector<std::size_t> f;
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1u) f.push_back(s[i]);
      all.insert(f);
    }
  }
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> ids;
  for (const auto& s : all) {
    if (ids.size() < s.size()) ids.resize(s.size());
    ids[s.size() - 1].emplace(s, 0);
  }
  std::vector<std::size_t> counts;
  for (auto& level : ids) {
    std::size_t i = 0;
    for (auto& [s, id] : level) id = i++;
    counts.push_back(level.size());
  }
  std::vector<std::vector<std::vector<std::size_t>>> faces(ids.size());
  for (std::size_t n = 1; n < ids.size(); ++n) {
    faces[n].resize(ids[n].size());
    for (const auto& [s, id] : ids[n])
      for (std::size_t k = 0; k <= n; ++k) faces[n][id].push_back(ids[n - 1].at(erase_position(s, k)));
  }
  return SemisimplicialSet(counts, faces);
}

inline SemisimplicialSet point_set() { return SemisimplicialSet({1}, {}); }

inline SemisimplicialSet cycle_graph(std::size_t n) {
  std::vector<std::vector<std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return from_simplices(edges);
}

inline SemisimplicialSet boundary_of_tetrahedron() {
  return from_simplices({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

/// 6-vertex real projective plane.
inline SemisimplicialSet rp2() {
  return from_simplices({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                         {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

/// Two vertices joined by two parallel edges.
inline SemisimplicialSet banana_set() { return SemisimplicialSet({2, 2}, {{}, {{1, 0}, {1, 0}}}); }

/// One simplex in every dimension 0..top, all faces equal.
inline SemisimplicialSet constant_tower(std::size_t top) {
  std::vector<std::size_t> counts(top + 1, 1);
  std::vector<std::vector<std::vector<std::size_t>>> faces(top + 1);
  for (std::size_t n = 1; n <= top; ++n) faces[n] = {std::vector<std::size_t>(n + 1, 0)};
  return SemisimplicialSet(counts, faces);
}

inline ResolutionData nodal_cubic() {
  ResolutionData r;
  r.exceptional = SncConfiguration{{"p", "q"}, {}, true};
  r.singular_points = {"s"};
  r.image = {{"p", 0}, {"q", 0}};
  r.ambient_components = {"C~"};
  r.ambient_of = {0, 0};
  return r;
}

inline PairData pair_of_points(std::size_t npoints) {
  PairData p;
  p.ambient = point_config("P1");
  for (std::size_t i = 0; i < npoints; ++i) {
    p.closed.components.push_back("z" + std::to_string(i));
    p.component_map.push_back(0);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Group helpers

inline std::vector<CohomologyGroup> trim(std::vector<CohomologyGroup> g) {
  while (!g.empty() && g.back().is_zero()) g.pop_back();
  return g;
}

inline CohomologyGroup Zr(std::size_t r, std::vector<long long> torsion = {}) {
  CohomologyGroup g;
  g.free_rank = r;
  for (auto t : torsion) g.torsion.emplace_back(t);
  return g;
}

// ---------------------------------------------------------------------------
// Random generators

/// Random "multi-complex" on vertex set 0..v-1: for each vertex subset S
/// (|S| >= 2) up to max_dim + 1, a random number of pieces, each with a
/// random containment tuple drawn from the identity-consistent ones.
/// Returned as an SNC configuration (vertices = components).
inline SncConfiguration random_config(std::mt19937& rng, std::size_t vertices, std::size_t max_pieces,
                                      double density, std::size_t max_key = 4) {
  SncConfiguration c;
  for (std::size_t i = 0; i < vertices; ++i) c.components.push_back("c" + std::to_string(i));
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::size_t label = 0;
  for (std::size_t size = 2; size <= std::min(vertices, max_key); ++size) {
    std::vector<std::size_t> pick(vertices, 0);
    std::fill(pick.end() - static_cast<std::ptrdiff_t>(size), pick.end(), 1);
    do {
      StratumKey key;
      for (std::size_t i = 0; i < vertices; ++i)
        if (pick[i]) key.push_back(i);
      bool facets_ok = true;
      for (std::size_t k = 0; k < size; ++k) facets_ok &= c.piece_count(erase_position(key, k)) > 0;
      if (!facets_ok || coin(rng) > density) continue;
      // Enumerate consistent containment tuples.
      std::vector<std::vector<std::size_t>> tuples{{}};
      for (std::size_t k = 0; k < size; ++k) {
        std::vector<std::vector<std::size_t>> next;
        const std::size_t avail = c.piece_count(erase_position(key, k));
        for (const auto& t : tuples)
          for (std::size_t q = 0; q < avail; ++q) {
            auto u = t;
            u.push_back(q);
            next.push_back(std::move(u));
          }
        tuples = std::move(next);
      }
      std::vector<std::vector<std::size_t>> consistent;
      for (const auto& t : tuples) {
        bool ok = true;
        if (size >= 3)
          for (std::size_t j = 1; j < size && ok; ++j)
            for (std::size_t i = 0; i < j && ok; ++i) {
              const auto kj = erase_position(key, j), ki = erase_position(key, i);
              const std::size_t a = kj.size() == 2 ? 0 : c.pieces(kj)[t[j]].faces[i];
              const std::size_t b = ki.size() == 2 ? 0 : c.pieces(ki)[t[i]].faces[j - 1];
              ok = a == b;
            }
        if (ok) consistent.push_back(t);
      }
      if (consistent.empty()) continue;
      const std::size_t n = 1 + rng() % max_pieces;
      auto& list = c.strata[key];
      for (std::size_t p = 0; p < n; ++p)
        list.push_back({"s" + std::to_string(label++), consistent[rng() % consistent.size()]});
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return c;
}

inline SemisimplicialSet random_set(std::mt19937& rng, std::size_t vertices, std::size_t max_pieces,
                                    double density) {
  return dual_complex(random_config(rng, vertices, max_pieces, density));
}

/// A random sub-configuration closed under containment, with the identity inclusion.
inline PairData random_pair(std::mt19937& rng, const SncConfiguration& ambient) {
  PairData p;
  p.ambient = ambient;
  std::vector<std::size_t> keep_comp;
  std::map<std::size_t, std::size_t> new_index;
  for (std::size_t i = 0; i < ambient.components.size(); ++i)
    if (rng() % 2) {
      new_index[i] = p.closed.components.size();
      p.closed.components.push_back(ambient.components[i]);
      p.component_map.push_back(i);
    }
  // pieces kept per ambient key, mapping ambient piece index -> closed piece index
  std::map<StratumKey, std::map<std::size_t, std::size_t>> kept;
  for (const auto& [key, list] : ambient.strata) {
    bool comps_in = std::all_of(key.begin(), key.end(), [&](auto i) { return new_index.count(i) > 0; });
    if (!comps_in) continue;
    StratumKey nkey;
    for (auto i : key) nkey.push_back(new_index[i]);
    for (std::size_t q = 0; q < list.size(); ++q) {
      if (rng() % 3 == 0) continue;
      bool facets_in = true;
      std::vector<std::size_t> faces;
      for (std::size_t k = 0; k < key.size(); ++k) {
        const auto facet = erase_position(key, k);
        if (facet.size() == 1) {
          faces.push_back(0);
          continue;
        }
        auto it = kept[facet].find(list[q].faces[k]);
        if (it == kept[facet].end()) {
          facets_in = false;
          break;
        }
        faces.push_back(it->second);
      }
      if (!facets_in) continue;
      auto& out = p.closed.strata[nkey];
      kept[key][q] = out.size();
      out.push_back({list[q].label, faces});
      p.stratum_map[list[q].label] = list[q].label;
    }
  }
  return p;
}

/// Isolated-singularity resolution data: exceptional components grouped
/// by singular point, strata only inside a group.
inline ResolutionData random_resolution(std::mt19937& rng, std::size_t points, std::size_t ambient) {
  ResolutionData r;
  for (std::size_t a = 0; a < ambient; ++a) r.ambient_components.push_back("X" + std::to_string(a));
  for (std::size_t p = 0; p < points; ++p) {
    r.singular_points.push_back("s" + std::to_string(p));
    const std::size_t comps = 1 + rng() % 3;
    SncConfiguration local = random_config(rng, comps, 2, 0.7);
    const std::size_t offset = r.exceptional.components.size();
    for (std::size_t i = 0; i < comps; ++i) {
      const std::string name = "E" + std::to_string(p) + "_" + std::to_string(i);
      r.exceptional.components.push_back(name);
      r.image[name] = p;
      r.ambient_of.push_back(rng() % ambient);
    }
    for (const auto& [key, list] : local.strata) {
      StratumKey k2;
      for (auto i : key) k2.push_back(i + offset);
      auto& out = r.exceptional.strata[k2];
      for (const auto& piece : list) {
        const std::string name = "P" + std::to_string(p) + piece.label;
        out.push_back({name, piece.faces});
        r.image[name] = p;
      }
    }
  }
  return r;
}

/// Renumbers the components of a configuration by perm (old index -> new index).
inline SncConfiguration permute_components(const SncConfiguration& c, const std::vector<std::size_t>& perm) {
  SncConfiguration out;
  out.complete = c.complete;
  out.components.resize(c.components.size());
  for (std::size_t i = 0; i < perm.size(); ++i) out.components[perm[i]] = c.components[i];
  for (const auto& [key, list] : c.strata) {
    StratumKey nkey;
    for (auto i : key) nkey.push_back(perm[i]);
    std::sort(nkey.begin(), nkey.end());
    auto& target = out.strata[nkey];
    for (const auto& piece : list) {
      StratumPiece np{piece.label, std::vector<std::size_t>(key.size())};
      for (std::size_t k = 0; k < key.size(); ++k) {
        const std::size_t new_pos =
            static_cast<std::size_t>(std::find(nkey.begin(), nkey.end(), perm[key[k]]) - nkey.begin());
        np.faces[new_pos] = piece.faces[k];
      }
      target.push_back(np);
    }
  }
  // Facet piece order is unchanged because each stratum keeps its list order.
  return out;
}

/// Applies a permutation of simplex ids within every level.
inline SemisimplicialSet permute_simplices(const SemisimplicialSet& s, std::mt19937& rng) {
  std::vector<std::vector<std::size_t>> perm(s.levels());
  for (std::size_t n = 0; n < s.levels(); ++n) {
    perm[n].resize(s.count(n));
    std::iota(perm[n].begin(), perm[n].end(), 0);
    std::shuffle(perm[n].begin(), perm[n].end(), rng);
  }
  std::vector<std::vector<std::vector<std::size_t>>> faces(s.levels());
  for (std::size_t n = 1; n < s.levels(); ++n) {
    faces[n].resize(s.count(n));
    for (std::size_t x = 0; x < s.count(n); ++x) {
      std::vector<std::size_t> f;
      for (std::size_t k = 0; k <= n; ++k) f.push_back(perm[n - 1][s.face(n, x, k)]);
      faces[n][perm[n][x]] = f;
    }
  }
  return SemisimplicialSet(s.counts(), faces);
}

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int range,
                               double zero_prob = 0.3) {
  IntMatrix m(rows, cols);
  std::uniform_int_distribution<int> val(-range, range);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = coin(rng) < zero_prob ? 0 : val(rng);
  return m;
}

// ---------------------------------------------------------------------------
// Oracles

using Rational = boost::multiprecision::cpp_rational;

/// Rank over Q by plain Gaussian elimination in exact rationals.
inline std::size_t oracle_rank(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<std::vector<Rational>> q(m, std::vector<Rational>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) q[i][j] = Rational(a(i, j));
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && q[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(q[p], q[r]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || q[i][c] == 0) continue;
      const Rational f = q[i][c] / q[r][c];
      for (std::size_t j = c; j < n; ++j) q[i][j] -= f * q[r][j];
    }
    ++r;
  }
  return r;
}

inline Integer egcd(const Integer& a, const Integer& b, Integer& x, Integer& y) {
  if (b == 0) {
    x = a < 0 ? -1 : 1;
    y = 0;
    return a < 0 ? Integer(-a) : a;
  }
  Integer x1, y1;
  Integer g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

/// Invariant factors by Bezout row/column reduction: an entry the corner
/// does not divide is merged into the corner by a 2x2 unimodular transform
/// (corner becomes the gcd), the rest are cleared directly, until row and
/// column are clear and the corner divides the remaining block.
inline std::vector<Integer> oracle_invariant_factors(IntMatrix a) {
  std::vector<Integer> out;
  const std::size_t m = a.rows(), n = a.cols();
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // bring any nonzero entry to the corner
    bool found = false;
    for (std::size_t i = t; i < m && !found; ++i)
      for (std::size_t j = t; j < n && !found; ++j)
        if (a(i, j) != 0) {
          a.swap_rows(t, i);
          a.swap_cols(t, j);
          found = true;
        }
    if (!found) break;
    for (;;) {
      bool changed = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        if (a(i, t) % a(t, t) == 0) {
          const Integer q = a(i, t) / a(t, t);
          for (std::size_t j = 0; j < n; ++j) a(i, j) -= q * a(t, j);
          continue;
        }
        Integer x, y;
        const Integer g = egcd(a(t, t), a(i, t), x, y);
        const Integer p = a(t, t) / g, q = a(i, t) / g;
        for (std::size_t j = 0; j < n; ++j) {
          const Integer top = a(t, j), bot = a(i, j);
          a(t, j) = x * top + y * bot;
          a(i, j) = -q * top + p * bot;
        }
        changed = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        if (a(t, j) % a(t, t) == 0) {
          const Integer q = a(t, j) / a(t, t);
          for (std::size_t i = 0; i < m; ++i) a(i, j) -= q * a(i, t);
          continue;
        }
        Integer x, y;
        const Integer g = egcd(a(t, t), a(t, j), x, y);
        const Integer p = a(t, t) / g, q = a(t, j) / g;
        for (std::size_t i = 0; i < m; ++i) {
          const Integer left = a(i, t), right = a(i, j);
          a(i, t) = x * left + y * right;
          a(i, j) = -q * left + p * right;
        }
        changed = true;
      }
      if (changed) continue;
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n && !fixed; ++j)
          if (a(i, j) % a(t, t) != 0) {
            for (std::size_t c = 0; c < n; ++c) a(t, c) += a(i, c);
            fixed = true;
          }
      if (!fixed) break;
    }
    out.push_back(a(t, t) < 0 ? Integer(-a(t, t)) : a(t, t));
  }
  return out;
}

/// Cohomology of a complex computed only with the oracles above.
inline std::vector<CohomologyGroup> oracle_cohomology(const CochainComplex& c, Ring ring) {
  std::vector<CohomologyGroup> out(c.length());
  for (std::size_t n = 0; n < c.length(); ++n) {
    const auto sn = static_cast<std::ptrdiff_t>(n);
    const std::size_t r_out = oracle_rank(c.differential(sn).to_dense());
    const std::size_t r_in = oracle_rank(c.differential(sn - 1).to_dense());
    out[n].free_rank = c.dim(sn) - r_out - r_in;
    if (ring == Ring::Z)
      for (const auto& f : oracle_invariant_factors(c.differential(sn - 1).to_dense()))
        if (f > 1) out[n].torsion.push_back(f);
  }
  return out;
}

/// Determinant by cofactor expansion (tiny matrices only).
inline Integer oracle_det(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Integer d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = a(r, c);
    d += (j % 2 == 0 ? 1 : -1) * a(0, j) * oracle_det(minor);
  }
  return d;
}

/// d_k = gcd of k x k minors / gcd of (k-1) x (k-1) minors. Tiny matrices only.
inline std::vector<Integer> determinantal_factors(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<Integer> divisors{1};
  for (std::size_t k = 1; k <= std::min(m, n); ++k) {
    Integer g = 0;
    std::vector<bool> rs(m, false), cs(n, false);
    std::fill(rs.begin(), rs.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.begin(), cs.begin() + static_cast<std::ptrdiff_t>(k), true);
      do {
        IntMatrix sub(k, k);
        for (std::size_t r = 0, rr = 0; r < m; ++r) {
          if (!rs[r]) continue;
          for (std::size_t c = 0, cc = 0; c < n; ++c)
            if (cs[c]) sub(rr, cc++) = a(r, c);
          ++rr;
        }
        g = boost::multiprecision::gcd(g, oracle_det(sub));
      } while (std::prev_permutation(cs.begin(), cs.end()));
    } while (std::prev_permutation(rs.begin(), rs.end()));
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<Integer> out;
  for (std::size_t k = 1; k < divisors.size(); ++k) out.push_back(divisors[k] / divisors[k - 1]);
  return out;
}

}  // namespace w0::testing
