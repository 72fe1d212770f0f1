#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "w0/geometry/snc.hpp"

namespace w0 {

/// A resolution X~ -> X of a variety with isolated singular points S_0,
/// described combinatorially: the exceptional SNC divisor E (one component
/// per connected irreducible piece), the point of S_0 under each piece of
/// every stratum of E, and which component of X~ contains each E^i.
struct ResolutionData {
  SncConfiguration exceptional;
  std::vector<std::string> singular_points;
  /// Keyed by component name or stratum-piece label; value indexes singular_points.
  std::map<std::string, std::size_t> image;
  std::vector<std::string> ambient_components;
  /// ambient_of[i] indexes ambient_components for exceptional component i.
  std::vector<std::size_t> ambient_of;

  friend bool operator==(const ResolutionData&, const ResolutionData&) = default;
};

inline void check_structure(const ResolutionData& res) {
  const auto& e = res.exceptional;
  (void)dual_complex(e);
  std::set<std::string> names(res.singular_points.begin(), res.singular_points.end());
  if (names.size() != res.singular_points.size()) throw InvalidInput("duplicate singular point name");
  std::set<std::string> amb(res.ambient_components.begin(), res.ambient_components.end());
  if (amb.size() != res.ambient_components.size()) throw InvalidInput("duplicate ambient component name");
  if (res.ambient_of.size() != e.components.size())
    throw InvalidInput("ambient component missing for some exceptional component");
  for (std::size_t i = 0; i < e.components.size(); ++i)
    if (res.ambient_of[i] >= res.ambient_components.size())
      throw InvalidInput("exceptional component '" + e.components[i] +
                         "' lies in an undefined ambient component");

  auto image_of = [&](const std::string& label) {
    auto it = res.image.find(label);
    if (it == res.image.end()) throw InvalidInput("no image point for '" + label + "'");
    if (it->second >= res.singular_points.size())
      throw InvalidInput("image of '" + label + "' is not a singular point");
    return it->second;
  };
  std::vector<bool> covered(res.singular_points.size(), false);
  for (const auto& c : e.components) covered[image_of(c)] = true;
  for (const auto& [key, list] : e.strata)
    for (const auto& piece : list) {
      const std::size_t p = image_of(piece.label);
      for (std::size_t k = 0; k < key.size(); ++k) {
        const StratumKey facet = erase_position(key, k);
        const std::string& outer = e.piece_label(facet, piece.faces[k]);
        if (image_of(outer) != p)
          throw InvalidInput("'" + piece.label + "' lies over '" + res.singular_points[p] +
                             "' but contains-in '" + outer + "' which lies over '" +
                             res.singular_points[image_of(outer)] + "'");
      }
    }
  for (const auto& [label, p] : res.image) {
    bool known = std::find(e.components.begin(), e.components.end(), label) != e.components.end();
    for (const auto& [key, list] : e.strata)
      for (const auto& piece : list) known |= piece.label == label;
    if (!known) throw InvalidInput("image given for unknown stratum '" + label + "'");
  }
  for (std::size_t p = 0; p < covered.size(); ++p)
    if (!covered[p])
      throw InvalidInput("singular point '" + res.singular_points[p] + "' has an empty exceptional fibre");
}

/// Height of the constant tower s_0 <- s_1 <- ... kept for each singular
/// point: the deepest level any E-simplex over it reaches down to (k such
/// that a (k+1)-fold intersection lies over it), rounded up to an even
/// number so that the tower on its own is acyclic.
inline std::vector<std::size_t> tower_heights(const ResolutionData& res) {
  std::vector<std::size_t> h(res.singular_points.size(), 0);
  for (const auto& [key, list] : res.exceptional.strata)
    for (const auto& piece : list) {
      auto& v = h[res.image.at(piece.label)];
      v = std::max(v, key.size() - 1);
    }
  for (auto& v : h) v += v % 2;
  return h;
}

/// Nerve of the simplicial resolution  ... E_1 + S_2 => E_0 + S_1 => X~ + S_0.
/// Level 0 lists the ambient components then S_0; level n >= 1 lists the
/// pieces of n-fold intersections of E (key order) then the tower points
/// present at level n. A piece sigma of E^{i_0..i_{n-1}} has faces
/// delta_k = containment after removing i_k (k < n; the ambient component
/// when n = 1) and delta_n = its image point one level down; tower points
/// have every face equal to themselves one level down.
inline SemisimplicialSet resolution_nerve(const ResolutionData& res) {
  check_structure(res);
  const auto& e = res.exceptional;
  const auto heights = tower_heights(res);
  const auto layout = detail::dual_layout(e);  // E-level m sits at nerve level m + 1

  const std::size_t top_e = layout.counts.size();  // highest nerve level carrying E-simplices
  std::size_t top = top_e;
  for (auto h : heights) top = std::max(top, h);
  const std::size_t levels =
      (res.ambient_components.empty() && res.singular_points.empty()) ? 0 : top + 1;

  std::vector<std::size_t> counts(levels, 0);
  std::vector<std::vector<std::size_t>> tower_id(levels, std::vector<std::size_t>(heights.size(), SIZE_MAX));
  std::vector<std::size_t> e_count(levels, 0);
  for (std::size_t n = 0; n < levels; ++n) {
    e_count[n] = n == 0 ? res.ambient_components.size() : (n - 1 < top_e ? layout.counts[n - 1] : 0);
    counts[n] = e_count[n];
    for (std::size_t p = 0; p < heights.size(); ++p)
      if (n <= heights[p]) tower_id[n][p] = counts[n]++;
  }

  std::vector<std::vector<std::vector<std::size_t>>> faces(levels);
  std::vector<std::vector<std::string>> labels(levels);
  for (std::size_t n = 0; n < levels; ++n) {
    faces[n].resize(n == 0 ? 0 : counts[n]);
    labels[n].resize(counts[n]);
    for (std::size_t p = 0; p < heights.size(); ++p)
      if (tower_id[n][p] != SIZE_MAX) {
        labels[n][tower_id[n][p]] = res.singular_points[p] + (n == 0 ? "" : "#" + std::to_string(n));
        if (n > 0) faces[n][tower_id[n][p]].assign(n + 1, tower_id[n - 1][p]);
      }
  }
  for (std::size_t a = 0; a < res.ambient_components.size(); ++a) labels[0][a] = res.ambient_components[a];

  for (std::size_t i = 0; i < e.components.size(); ++i) {
    labels[1][i] = e.components[i];
    faces[1][i] = {res.ambient_of[i], tower_id[0][res.image.at(e.components[i])]};
  }
  for (const auto& [key, list] : e.strata) {
    if (list.empty()) continue;
    const std::size_t n = key.size();
    const std::size_t base = layout.offset.at(key);
    for (std::size_t q = 0; q < list.size(); ++q) {
      auto& f = faces[n][base + q];
      labels[n][base + q] = list[q].label;
      f.resize(n + 1);
      for (std::size_t k = 0; k < n; ++k)
        f[k] = layout.offset.at(erase_position(key, k)) + list[q].faces[k];
      f[n] = tower_id[n - 1][res.image.at(list[q].label)];
    }
  }
  SemisimplicialSet nerve(std::move(counts), std::move(faces), std::move(labels));
  auto rep = validate(nerve);
  if (!rep.ok()) throw InvalidInput("resolution nerve is not semisimplicial: " + rep.describe());
  return nerve;
}

}  // namespace w0
