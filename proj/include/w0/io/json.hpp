#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "w0/geometry/pair.hpp"
#include "w0/geometry/resolution.hpp"
#include "w0/geometry/snc.hpp"

namespace w0::io {

using nlohmann::json;

/// User-supplied dimensions for bound checking.
struct BoundsData {
  std::vector<long long> kh;
  std::vector<long long> h;

  friend bool operator==(const BoundsData&, const BoundsData&) = default;
};

using Document = std::variant<SemisimplicialSet, SncConfiguration, ResolutionData, PairData, BoundsData>;

inline const char* kind_name(const Document& d) {
  constexpr const char* names[] = {"semisimplicial", "snc", "resolution", "pair", "bounds"};
  return names[d.index()];
}

namespace detail {

inline std::string escape(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

// A JSON value together with its location, for diagnostics.
class Node {
 public:
  Node(const json& value, std::string path) : value_(value), path_(std::move(path)) {}

  const json& value() const { return value_; }
  const std::string& path() const { return path_; }
  std::string where() const { return path_.empty() ? "/" : path_; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(where(), what); }

  bool has(const std::string& key) const { return value_.is_object() && value_.contains(key); }

  Node operator[](const std::string& key) const {
    if (!value_.is_object()) fail("expected an object");
    auto it = value_.find(key);
    if (it == value_.end()) throw ParseError(path_ + "/" + escape(key), "missing required field");
    return Node(*it, path_ + "/" + escape(key));
  }

  Node operator[](std::size_t i) const { return Node(value_.at(i), path_ + "/" + std::to_string(i)); }

  const json::array_t& array() const {
    if (!value_.is_array()) fail("expected an array");
    return value_.get_ref<const json::array_t&>();
  }

  std::size_t size() const { return array().size(); }

  const json::object_t& object() const {
    if (!value_.is_object()) fail("expected an object");
    return value_.get_ref<const json::object_t&>();
  }

  std::string string() const {
    if (!value_.is_string()) fail("expected a string");
    return value_.get<std::string>();
  }

  std::size_t index() const {
    if (!value_.is_number_integer() || value_.get<long long>() < 0) fail("expected a non-negative integer");
    return value_.get<std::size_t>();
  }

  long long integer() const {
    if (!value_.is_number_integer()) fail("expected an integer");
    return value_.get<long long>();
  }

  bool boolean() const {
    if (!value_.is_boolean()) fail("expected true or false");
    return value_.get<bool>();
  }

  std::vector<std::string> strings() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < size(); ++i) out.push_back((*this)[i].string());
    return out;
  }

 private:
  const json& value_;
  std::string path_;
};

inline StratumKey parse_key(const Node& at, const std::string& text) {
  StratumKey key;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string token = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (token.empty() || token.find_first_not_of("0123456789 ") != std::string::npos)
      at.fail("stratum key '" + text + "' must be a comma-separated list of component indices");
    key.push_back(std::stoul(token));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return key;
}

// The configuration fields shared by "snc", "resolution" and pair members.
inline SncConfiguration parse_snc_fields(const Node& doc) {
  SncConfiguration cfg;
  cfg.components = doc["components"].strings();
  if (doc.has("complete")) cfg.complete = doc["complete"].boolean();
  if (!doc.has("strata")) {
    try {
      check_structure(cfg);
    } catch (const InvalidInput& e) {
      throw ParseError(doc.where() + (doc.path().empty() ? "" : "/") + "components", e.what());
    }
    return cfg;
  }

  const Node strata = doc["strata"];
  // Pass 1: keys and labels, so that facet references can be resolved.
  std::map<StratumKey, std::string> key_text;
  for (const auto& [text, list] : strata.object()) {
    const Node entry = strata[text];
    StratumKey key = parse_key(entry, text);
    for (std::size_t c : key)
      if (c >= cfg.components.size())
        entry.fail("stratum " + text + " references undefined component " + std::to_string(c));
    if (key.size() < 2) entry.fail("stratum " + text + " needs at least two component indices");
    if (!std::is_sorted(key.begin(), key.end()) || std::adjacent_find(key.begin(), key.end()) != key.end())
      entry.fail("stratum " + text + ": indices must be strictly increasing");
    if (cfg.strata.count(key)) entry.fail("stratum " + text + " listed twice");
    auto& pieces = cfg.strata[key];
    for (std::size_t p = 0; p < entry.size(); ++p) pieces.push_back({entry[p]["label"].string(), {}});
    key_text[key] = text;
  }
  // Pass 2: containment.
  for (auto& [key, pieces] : cfg.strata) {
    const Node entry = strata[key_text[key]];
    for (std::size_t p = 0; p < pieces.size(); ++p) {
      const Node piece = entry[p];
      std::map<std::string, std::string> given;
      if (piece.has("faces"))
        for (const auto& [fk, fv] : piece["faces"].object()) {
          const Node ref = piece["faces"][fk];
          StratumKey facet = parse_key(ref, fk);
          if (facet.size() + 1 != key.size() || !std::includes(key.begin(), key.end(), facet.begin(), facet.end()))
            ref.fail("'" + fk + "' is not a facet of stratum " + key_text[key]);
          given[key_string(facet)] = ref.string();
        }
      for (std::size_t k = 0; k < key.size(); ++k) {
        const StratumKey facet = erase_position(key, k);
        const std::string fk = key_string(facet);
        const std::size_t available = cfg.piece_count(facet);
        auto it = given.find(fk);
        if (it == given.end()) {
          if (available == 1) {
            pieces[p].faces.push_back(0);
            continue;
          }
          piece.fail("stratum " + key_text[key] + ", piece '" + pieces[p].label + "': containment in facet " +
                     fk + (available == 0 ? " which is empty" : " must be given (it has several pieces)"));
        }
        std::size_t found = SIZE_MAX;
        for (std::size_t q = 0; q < available; ++q)
          if (cfg.piece_label(facet, q) == it->second) found = q;
        if (found == SIZE_MAX)
          throw ParseError(piece.where() + "/faces/" + escape(fk),
                           "stratum " + key_text[key] + ": '" + it->second + "' is not a piece of facet " + fk);
        pieces[p].faces.push_back(found);
      }
    }
  }
  try {
    (void)dual_complex(cfg);
  } catch (const InvalidInput& e) {
    doc.fail(e.what());
  }
  return cfg;
}

inline SemisimplicialSet parse_semisimplicial(const Node& doc) {
  std::vector<std::size_t> counts;
  const Node levels = doc["levels"];
  for (std::size_t n = 0; n < levels.size(); ++n) counts.push_back(levels[n].index());
  std::vector<std::vector<std::vector<std::size_t>>> faces(counts.size());
  if (doc.has("faces")) {
    const Node fnode = doc["faces"];
    for (const auto& [text, _] : fnode.object()) {
      const Node lvl = fnode[text];
      if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        lvl.fail("face levels are keyed by dimension");
      const std::size_t n = std::stoul(text);
      if (n == 0 || n >= counts.size()) lvl.fail("no level " + text + " to attach faces to");
      for (std::size_t x = 0; x < lvl.size(); ++x) {
        std::vector<std::size_t> f;
        for (std::size_t k = 0; k < lvl[x].size(); ++k) f.push_back(lvl[x][k].index());
        faces[n].push_back(std::move(f));
      }
    }
  }
  for (std::size_t n = 1; n < counts.size(); ++n)
    if (faces[n].size() != counts[n])
      throw ParseError("/faces/" + std::to_string(n), "expected " + std::to_string(counts[n]) +
                                                          " face lists, found " + std::to_string(faces[n].size()));
  std::vector<std::vector<std::string>> labels;
  if (doc.has("labels")) {
    const Node lnode = doc["labels"];
    for (std::size_t n = 0; n < lnode.size(); ++n) labels.push_back(lnode[n].strings());
  }
  SemisimplicialSet s(std::move(counts), std::move(faces), std::move(labels));
  auto rep = validate(s);
  if (!rep.ok()) throw ParseError("/faces", rep.describe());
  return s;
}

inline ResolutionData parse_resolution(const Node& doc) {
  ResolutionData res;
  res.exceptional = parse_snc_fields(doc);
  res.singular_points = doc["singular_points"].strings();
  res.ambient_components = doc["ambient_components"].strings();
  std::map<std::string, std::size_t> point_index, ambient_index;
  for (std::size_t i = 0; i < res.singular_points.size(); ++i) point_index[res.singular_points[i]] = i;
  for (std::size_t i = 0; i < res.ambient_components.size(); ++i) ambient_index[res.ambient_components[i]] = i;

  const Node image = doc["image"];
  for (const auto& [label, _] : image.object()) {
    const Node at = image[label];
    auto it = point_index.find(at.string());
    if (it == point_index.end()) at.fail("'" + at.string() + "' is not a singular point");
    res.image[label] = it->second;
  }
  res.ambient_of.assign(res.exceptional.components.size(), 0);
  if (doc.has("ambient_map")) {
    const Node amap = doc["ambient_map"];
    std::vector<bool> seen(res.ambient_of.size(), false);
    for (const auto& [name, _] : amap.object()) {
      const Node at = amap[name];
      auto c = std::find(res.exceptional.components.begin(), res.exceptional.components.end(), name);
      if (c == res.exceptional.components.end()) at.fail("'" + name + "' is not an exceptional component");
      auto a = ambient_index.find(at.string());
      if (a == ambient_index.end()) at.fail("'" + at.string() + "' is not an ambient component");
      const auto i = static_cast<std::size_t>(c - res.exceptional.components.begin());
      res.ambient_of[i] = a->second;
      seen[i] = true;
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
      if (!seen[i]) amap.fail("no ambient component for '" + res.exceptional.components[i] + "'");
  } else if (res.ambient_components.size() != 1 && !res.exceptional.components.empty()) {
    doc.fail("ambient_map is required unless there is exactly one ambient component");
  }
  try {
    check_structure(res);
  } catch (const InvalidInput& e) {
    doc.fail(e.what());
  }
  return res;
}

inline PairData parse_pair(const Node& doc) {
  PairData p;
  p.ambient = parse_snc_fields(doc["ambient"]);
  p.closed = parse_snc_fields(doc["closed"]);
  const Node inc = doc["inclusion"];
  p.component_map.assign(p.closed.components.size(), SIZE_MAX);
  if (!p.closed.components.empty()) {
    const Node comps = inc["components"];
    for (const auto& [name, _] : comps.object()) {
      const Node at = comps[name];
      auto c = std::find(p.closed.components.begin(), p.closed.components.end(), name);
      if (c == p.closed.components.end()) at.fail("'" + name + "' is not a component of the closed subvariety");
      auto a = std::find(p.ambient.components.begin(), p.ambient.components.end(), at.string());
      if (a == p.ambient.components.end()) at.fail("'" + at.string() + "' is not an ambient component");
      p.component_map[static_cast<std::size_t>(c - p.closed.components.begin())] =
          static_cast<std::size_t>(a - p.ambient.components.begin());
    }
    for (std::size_t i = 0; i < p.component_map.size(); ++i)
      if (p.component_map[i] == SIZE_MAX) comps.fail("no image for component '" + p.closed.components[i] + "'");
  }
  if (inc.has("strata")) {
    const Node st = inc["strata"];
    for (const auto& [label, _] : st.object()) p.stratum_map[label] = st[label].string();
  }
  try {
    (void)induced_map(p);
  } catch (const InvalidInput& e) {
    inc.fail(e.what());
  }
  return p;
}

inline BoundsData parse_bounds(const Node& doc) {
  BoundsData b;
  for (std::size_t i = 0; i < doc["kh"].size(); ++i) b.kh.push_back(doc["kh"][i].integer());
  for (std::size_t i = 0; i < doc["h"].size(); ++i) b.h.push_back(doc["h"][i].integer());
  return b;
}

}  // namespace detail

/// Dispatches on the required top-level "kind" field and runs every
/// structural validation before returning.
inline Document parse_document(const json& j) {
  const detail::Node doc(j, "");
  const std::string kind = doc["kind"].string();
  if (kind == "semisimplicial") return detail::parse_semisimplicial(doc);
  if (kind == "snc") return detail::parse_snc_fields(doc);
  if (kind == "resolution") return detail::parse_resolution(doc);
  if (kind == "pair") return detail::parse_pair(doc);
  if (kind == "bounds") return detail::parse_bounds(doc);
  doc["kind"].fail("unknown document kind '" + kind + "'");
}

inline Document parse_text(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("malformed JSON: ") + e.what());
  }
  return parse_document(j);
}

// Serialization.

inline json to_json(const SemisimplicialSet& s) {
  json j{{"kind", "semisimplicial"}, {"levels", s.counts()}};
  json faces = json::object();
  for (std::size_t n = 1; n < s.levels(); ++n) faces[std::to_string(n)] = s.face_data()[n];
  j["faces"] = faces;
  if (s.has_labels()) j["labels"] = s.labels();
  return j;
}

namespace detail {

inline json snc_fields(const SncConfiguration& cfg) {
  json j{{"components", cfg.components}, {"complete", cfg.complete}};
  json strata = json::object();
  for (const auto& [key, list] : cfg.strata) {
    json arr = json::array();
    for (const auto& piece : list) {
      json faces = json::object();
      for (std::size_t k = 0; k < key.size(); ++k) {
        const StratumKey facet = erase_position(key, k);
        faces[key_string(facet)] = cfg.piece_label(facet, piece.faces[k]);
      }
      arr.push_back({{"label", piece.label}, {"faces", faces}});
    }
    strata[key_string(key)] = arr;
  }
  j["strata"] = strata;
  return j;
}

}  // namespace detail

inline json to_json(const SncConfiguration& cfg) {
  json j = detail::snc_fields(cfg);
  j["kind"] = "snc";
  return j;
}

inline json to_json(const ResolutionData& r) {
  json j = detail::snc_fields(r.exceptional);
  j["kind"] = "resolution";
  j["singular_points"] = r.singular_points;
  j["ambient_components"] = r.ambient_components;
  json image = json::object();
  for (const auto& [label, p] : r.image) image[label] = r.singular_points.at(p);
  j["image"] = image;
  json amap = json::object();
  for (std::size_t i = 0; i < r.ambient_of.size(); ++i)
    amap[r.exceptional.components[i]] = r.ambient_components.at(r.ambient_of[i]);
  j["ambient_map"] = amap;
  return j;
}

inline json to_json(const PairData& p) {
  json comps = json::object();
  for (std::size_t i = 0; i < p.component_map.size(); ++i)
    comps[p.closed.components[i]] = p.ambient.components.at(p.component_map[i]);
  return json{{"kind", "pair"},
              {"ambient", detail::snc_fields(p.ambient)},
              {"closed", detail::snc_fields(p.closed)},
              {"inclusion", {{"components", comps}, {"strata", p.stratum_map}}}};
}

inline json to_json(const BoundsData& b) { return json{{"kind", "bounds"}, {"kh", b.kh}, {"h", b.h}}; }

inline json to_json(const Document& d) {
  return std::visit([](const auto& v) { return to_json(v); }, d);
}

inline json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Integer& v = m(r, c);
      if (v >= INT64_MIN && v <= INT64_MAX) row.push_back(static_cast<long long>(v));
      else row.push_back(v.str());
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace w0::io
