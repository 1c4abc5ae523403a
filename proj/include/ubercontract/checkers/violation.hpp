#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ubercontract/complex/io.hpp"

namespace ubercontract {

/// A failed check together with enough data to re-run the primitive queries.
struct Violation {
  std::string condition;
  std::vector<VertexId> vertices;
  std::vector<std::vector<VertexId>> paths;
  std::vector<std::pair<std::string, Extended>> measured;
  std::string message;

  Extended value(const std::string& name) const {
    for (const auto& [k, v] : measured) {
      if (k == name) return v;
    }
    throw Error(ErrorCode::kInvalidArgument, "no measured quantity named " + name);
  }
};

inline Json extended_to_json(const Extended& e) { return e.is_infinite() ? Json("inf") : Json(e.value()); }

inline Json violation_to_json(const PolygonalComplex& c, const Violation& v) {
  Json j;
  j["condition"] = v.condition;
  j["vertices"] = Json::array();
  for (VertexId x : v.vertices) j["vertices"].push_back(c.label(x));
  j["paths"] = Json::array();
  for (const auto& p : v.paths) {
    Json path = Json::array();
    for (VertexId x : p) path.push_back(c.label(x));
    j["paths"].push_back(path);
  }
  j["measured"] = Json::object();
  for (const auto& [k, e] : v.measured) j["measured"][k] = extended_to_json(e);
  if (!v.message.empty()) j["message"] = v.message;
  return j;
}

inline std::string violation_to_text(const PolygonalComplex& c, const Violation& v) {
  std::string out = v.condition + ":";
  for (VertexId x : v.vertices) out += " " + c.label(x);
  for (const auto& [k, e] : v.measured) out += " " + k + "=" + e.to_string();
  for (const auto& p : v.paths) {
    out += " [";
    for (std::size_t i = 0; i < p.size(); ++i) out += (i ? " " : "") + c.label(p[i]);
    out += "]";
  }
  if (!v.message.empty()) out += " (" + v.message + ")";
  return out;
}

/// Unordered pairs x < y within one component, plus x = y for completeness
/// when `diagonal` is set.
inline std::vector<std::pair<VertexId, VertexId>> all_vertex_pairs(const PolygonalComplex& c, bool diagonal = false) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId x = 0; x < c.num_vertices(); ++x) {
    for (VertexId y = diagonal ? x : x + 1; y < c.num_vertices(); ++y) out.emplace_back(x, y);
  }
  return out;
}

/// Lexicographically smallest geodesic from a to b, read off the table.
inline std::vector<VertexId> table_geodesic(const PolygonalComplex& c, const DistanceTable& d, VertexId a, VertexId b) {
  if (!d.connected(a, b)) throw Error(ErrorCode::kNoPath, "no path from " + c.label(a) + " to " + c.label(b));
  std::vector<VertexId> path{a};
  while (path.back() != b) {
    VertexId cur = path.back();
    for (VertexId w : c.neighbors(cur)) {
      if (d.at(w, b) == d.at(cur, b) - 1) {
        path.push_back(w);
        break;
      }
    }
  }
  return path;
}

inline std::vector<VertexId> sorted_unique(std::vector<VertexId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace ubercontract
