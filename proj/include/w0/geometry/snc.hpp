#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "w0/error.hpp"
#include "w0/sscomplex/semisimplicial_set.hpp"

namespace w0 {

/// Sorted list of component indices naming an intersection X^S.
using StratumKey = std::vector<std::size_t>;

inline std::string key_string(const StratumKey& key) {
  std::string out;
  for (std::size_t i : key) out += (out.empty() ? "" : ",") + std::to_string(i);
  return out;
}

/// One connected component of an intersection X^S (|S| >= 2). faces[k] is
/// the index, in the piece list of X^{S - S[k]}, of the piece containing this
/// one. When |S| = 2 the facets are components and faces[k] is always 0.
struct StratumPiece {
  std::string label;
  std::vector<std::size_t> faces;

  friend bool operator==(const StratumPiece&, const StratumPiece&) = default;
};

/// Combinatorial data of a variety whose components and all their
/// intersections are smooth: irreducible components, connected pieces of
/// every multi-fold intersection, and which piece contains which.
struct SncConfiguration {
  std::vector<std::string> components;
  std::map<StratumKey, std::vector<StratumPiece>> strata;
  bool complete = true;

  /// Number of connected pieces of X^key; singletons are the components.
  std::size_t piece_count(const StratumKey& key) const {
    if (key.size() == 1) return key[0] < components.size() ? 1 : 0;
    auto it = strata.find(key);
    return it == strata.end() ? 0 : it->second.size();
  }

  const std::vector<StratumPiece>& pieces(const StratumKey& key) const {
    static const std::vector<StratumPiece> none;
    auto it = strata.find(key);
    return it == strata.end() ? none : it->second;
  }

  /// Label of piece p of X^key (component name for singletons).
  std::string piece_label(const StratumKey& key, std::size_t p) const {
    if (key.size() == 1) return components.at(key[0]);
    return pieces(key).at(p).label;
  }

  /// Largest number of components meeting in a nonempty stratum.
  std::size_t depth() const {
    std::size_t d = components.empty() ? 0 : 1;
    for (const auto& [key, list] : strata)
      if (!list.empty()) d = std::max(d, key.size());
    return d;
  }

  friend bool operator==(const SncConfiguration&, const SncConfiguration&) = default;
};

inline StratumKey erase_position(const StratumKey& key, std::size_t k) {
  StratumKey out = key;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

namespace detail {

struct DualLayout {
  // Level n lists the nonempty strata with n + 1 components in key order;
  // offset[key] is the id of its first piece at that level.
  std::vector<std::size_t> counts;
  std::map<StratumKey, std::size_t> offset;
};

inline DualLayout dual_layout(const SncConfiguration& cfg) {
  DualLayout l;
  for (std::size_t i = 0; i < cfg.components.size(); ++i) {
    if (l.counts.empty()) l.counts.push_back(0);
    l.offset[{i}] = l.counts[0]++;
  }
  for (const auto& [key, list] : cfg.strata) {
    if (list.empty()) continue;
    const std::size_t n = key.size() - 1;
    if (l.counts.size() <= n) l.counts.resize(n + 1, 0);
    l.offset[key] = l.counts[n];
    l.counts[n] += list.size();
  }
  return l;
}

}  // namespace detail

/// Structural checks that do not need the simplicial identities: keys,
/// labels, arities, and that every referenced facet piece exists.
inline void check_structure(const SncConfiguration& cfg) {
  std::set<std::string> labels;
  for (const auto& name : cfg.components) {
    if (name.empty()) throw InvalidInput("component with empty name");
    if (!labels.insert(name).second) throw InvalidInput("duplicate label '" + name + "'");
  }
  for (const auto& [key, list] : cfg.strata) {
    const std::string ks = key_string(key);
    if (key.size() < 2) throw InvalidInput("stratum " + ks + ": needs at least two components");
    for (std::size_t k = 0; k < key.size(); ++k) {
      if (key[k] >= cfg.components.size())
        throw InvalidInput("stratum " + ks + ": undefined component index " + std::to_string(key[k]));
      if (k > 0 && key[k - 1] >= key[k])
        throw InvalidInput("stratum " + ks + ": indices must be strictly increasing");
    }
    for (const auto& piece : list) {
      if (piece.label.empty()) throw InvalidInput("stratum " + ks + ": piece with empty label");
      if (!labels.insert(piece.label).second)
        throw InvalidInput("stratum " + ks + ": duplicate label '" + piece.label + "'");
      if (piece.faces.size() != key.size())
        throw InvalidInput("stratum " + ks + ", piece '" + piece.label + "': expected " +
                           std::to_string(key.size()) + " facet references");
      for (std::size_t k = 0; k < key.size(); ++k) {
        const StratumKey facet = erase_position(key, k);
        const std::size_t available = cfg.piece_count(facet);
        if (available == 0)
          throw InvalidInput("stratum " + ks + " is nonempty but its facet " + key_string(facet) +
                             " is empty");
        if (piece.faces[k] >= available)
          throw InvalidInput("stratum " + ks + ", piece '" + piece.label + "': facet " +
                             key_string(facet) + " has no piece #" + std::to_string(piece.faces[k]));
      }
    }
  }
}

namespace detail {

inline SemisimplicialSet assemble_dual(const SncConfiguration& cfg, const DualLayout& l) {
  std::vector<std::vector<std::vector<std::size_t>>> faces(l.counts.size());
  std::vector<std::vector<std::string>> labels(l.counts.size());
  for (std::size_t n = 0; n < l.counts.size(); ++n) {
    faces[n].resize(n == 0 ? 0 : l.counts[n]);
    labels[n].resize(l.counts[n]);
  }
  for (std::size_t i = 0; i < cfg.components.size(); ++i) labels[0][i] = cfg.components[i];
  for (const auto& [key, list] : cfg.strata) {
    if (list.empty()) continue;
    const std::size_t n = key.size() - 1;
    const std::size_t base = l.offset.at(key);
    for (std::size_t p = 0; p < list.size(); ++p) {
      labels[n][base + p] = list[p].label;
      auto& f = faces[n][base + p];
      f.resize(n + 1);
      for (std::size_t k = 0; k <= n; ++k) f[k] = l.offset.at(erase_position(key, k)) + list[p].faces[k];
    }
  }
  return SemisimplicialSet(l.counts, std::move(faces), std::move(labels));
}

}  // namespace detail

/// Dual complex: n-simplices are the connected pieces of (n+1)-fold
/// intersections and delta_k is containment in the stratum with the k-th
/// index removed. Throws InvalidInput naming the two disagreeing deletion
/// paths when containment data is inconsistent.
inline SemisimplicialSet dual_complex(const SncConfiguration& cfg) {
  check_structure(cfg);
  const auto layout = detail::dual_layout(cfg);
  SemisimplicialSet s = detail::assemble_dual(cfg, layout);
  const auto rep = validate(s);
  if (rep.ok()) return s;

  const auto& v = rep.violations.front();
  // Locate the stratum and piece behind simplex v.simplex at level v.n.
  for (const auto& [key, list] : cfg.strata) {
    if (key.size() != v.n + 1 || list.empty()) continue;
    const std::size_t base = layout.offset.at(key);
    if (v.simplex < base || v.simplex >= base + list.size()) continue;
    const auto& name = [&](std::size_t c) { return cfg.components[c]; };
    const StratumKey via_j = erase_position(key, v.j);
    const StratumKey via_i = erase_position(key, v.i);
    throw InvalidInput("inconsistent containment for '" + list[v.simplex - base].label +
                       "' in stratum " + key_string(key) + ": removing " + name(key[v.j]) +
                       " then " + name(via_j[v.i]) + " reaches '" +
                       s.label(v.n - 2, s.face(v.n - 1, s.face(v.n, v.simplex, v.j), v.i)) +
                       "' but removing " + name(key[v.i]) + " then " + name(via_i[v.j - 1]) +
                       " reaches '" +
                       s.label(v.n - 2, s.face(v.n - 1, s.face(v.n, v.simplex, v.i), v.j - 1)) + "'");
  }
  throw InvalidInput("inconsistent containment: " + rep.describe());
}

/// Convenience check: throws on any structural or containment defect.
inline void require_valid(const SncConfiguration& cfg) { (void)dual_complex(cfg); }

/// Configuration of X x Y: components are pairs (i, j) ordered
/// lexicographically, X^T = X^{proj_1 T} x Y^{proj_2 T}, containment componentwise.
inline SncConfiguration product_config(const SncConfiguration& a, const SncConfiguration& b) {
  require_valid(a);
  require_valid(b);
  SncConfiguration out;
  out.complete = a.complete && b.complete;
  const std::size_t nb = b.components.size();
  for (const auto& ca : a.components)
    for (const auto& cb : b.components) out.components.push_back(ca + "*" + cb);

  auto keys_of = [](const SncConfiguration& c) {
    std::vector<StratumKey> keys;
    for (std::size_t i = 0; i < c.components.size(); ++i) keys.push_back({i});
    for (const auto& [key, list] : c.strata)
      if (!list.empty()) keys.push_back(key);
    return keys;
  };
  // Piece p of factor stratum `key` after deleting index `idx` from it.
  auto shrink = [](const SncConfiguration& c, const StratumKey& key, std::size_t p,
                   std::size_t idx) -> std::pair<StratumKey, std::size_t> {
    const std::size_t pos = static_cast<std::size_t>(std::find(key.begin(), key.end(), idx) - key.begin());
    return {erase_position(key, pos), key.size() == 2 ? 0 : c.pieces(key)[p].faces[pos]};
  };

  for (const auto& ka : keys_of(a)) {
    for (const auto& kb : keys_of(b)) {
      const std::size_t grid = ka.size() * kb.size();
      if (grid < 2) continue;
      if (grid > 20)
        throw InvalidInput("product_config: stratum " + key_string(ka) + " x " + key_string(kb) +
                           " is too large to enumerate");
      const std::size_t pa_count = a.piece_count(ka), pb_count = b.piece_count(kb);
      for (std::uint32_t mask = 1; mask < (1u << grid); ++mask) {
        if (std::popcount(mask) < 2) continue;
        std::vector<bool> row_hit(ka.size()), col_hit(kb.size());
        StratumKey key;
        std::vector<std::pair<std::size_t, std::size_t>> cells;
        for (std::size_t bit = 0; bit < grid; ++bit) {
          if (!(mask >> bit & 1u)) continue;
          const std::size_t r = bit / kb.size(), c = bit % kb.size();
          row_hit[r] = col_hit[c] = true;
          key.push_back(ka[r] * nb + kb[c]);
          cells.emplace_back(r, c);
        }
        if (std::find(row_hit.begin(), row_hit.end(), false) != row_hit.end() ||
            std::find(col_hit.begin(), col_hit.end(), false) != col_hit.end())
          continue;

        auto& list = out.strata[key];
        for (std::size_t pa = 0; pa < pa_count; ++pa) {
          for (std::size_t pb = 0; pb < pb_count; ++pb) {
            StratumPiece piece;
            piece.label = a.piece_label(ka, pa) + "*" + b.piece_label(kb, pb) + "@" + key_string(key);
            for (std::size_t k = 0; k < cells.size(); ++k) {
              if (cells.size() == 2) {
                piece.faces.push_back(0);
                continue;
              }
              const auto [r, c] = cells[k];
              bool row_kept = false, col_kept = false;
              for (std::size_t m = 0; m < cells.size(); ++m) {
                if (m == k) continue;
                row_kept |= cells[m].first == r;
                col_kept |= cells[m].second == c;
              }
              auto [ka2, pa2] = row_kept ? std::pair{ka, pa} : shrink(a, ka, pa, ka[r]);
              auto [kb2, pb2] = col_kept ? std::pair{kb, pb} : shrink(b, kb, pb, kb[c]);
              piece.faces.push_back(pa2 * b.piece_count(kb2) + pb2);
            }
            list.push_back(std::move(piece));
          }
        }
      }
    }
  }
  return out;
}

}  // namespace w0
