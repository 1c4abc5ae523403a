#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ubercontract/error.hpp"

namespace ubercontract {

using VertexId = std::size_t;

/// Finite 2-dimensional complex: labelled vertices, edges and polygons given
/// as cyclic vertex sequences. Cells are stored as supplied; malformed input
/// is kept so that validate() can report it, and only well-formed edges
/// enter the adjacency structure.
class PolygonalComplex {
 public:
  VertexId add_vertex(std::string label) {
    VertexId id = labels_.size();
    label_index_.emplace(label, id);
    labels_.push_back(std::move(label));
    neighbors_.emplace_back();
    return id;
  }

  void add_edge(VertexId u, VertexId v) {
    raw_edges_.emplace_back(u, v);
    if (u == v || u >= labels_.size() || v >= labels_.size()) return;
    auto key = std::minmax(u, v);
    if (!edge_index_.emplace(key, edges_.size()).second) return;
    edges_.push_back(key);
    insert_sorted(neighbors_[u], v);
    insert_sorted(neighbors_[v], u);
  }

  void add_polygon(std::vector<VertexId> cycle) { polygons_.push_back(std::move(cycle)); }

  std::size_t num_vertices() const { return labels_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t num_polygons() const { return polygons_.size(); }

  const std::string& label(VertexId v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<VertexId> find_vertex(const std::string& label) const {
    auto it = label_index_.find(label);
    if (it == label_index_.end()) return std::nullopt;
    return it->second;
  }
  VertexId vertex(const std::string& label) const {
    auto v = find_vertex(label);
    if (!v) throw Error(ErrorCode::kInvalidArgument, "no vertex labelled '" + label + "'");
    return *v;
  }

  /// Sorted neighbours in the 1-skeleton.
  const std::vector<VertexId>& neighbors(VertexId v) const { return neighbors_.at(v); }
  std::size_t degree(VertexId v) const { return neighbors_.at(v).size(); }
  bool has_edge(VertexId u, VertexId v) const { return edge_index_.count(std::minmax(u, v)) > 0; }

  /// Distinct well-formed edges (u < v), in insertion order.
  const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
  /// Edges exactly as supplied, including loops and duplicates.
  const std::vector<std::pair<VertexId, VertexId>>& raw_edges() const { return raw_edges_; }
  const std::vector<std::vector<VertexId>>& polygons() const { return polygons_; }

 private:
  static void insert_sorted(std::vector<VertexId>& v, VertexId x) { v.insert(std::lower_bound(v.begin(), v.end(), x), x); }

  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> label_index_;
  std::vector<std::vector<VertexId>> neighbors_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<std::pair<VertexId, VertexId>> raw_edges_;
  std::map<std::pair<VertexId, VertexId>, std::size_t> edge_index_;
  std::vector<std::vector<VertexId>> polygons_;
};

struct ComplexIssue {
  std::string kind;
  std::string detail;
};

struct ValidationReport {
  std::vector<ComplexIssue> violations;
  bool connected = true;
  std::size_t components = 0;

  bool valid() const { return violations.empty(); }
};

/// Connected components of the 1-skeleton; component[v] is a dense index.
inline std::vector<std::size_t> connected_components(const PolygonalComplex& c, std::size_t* count = nullptr) {
  const std::size_t n = c.num_vertices();
  std::vector<std::size_t> comp(n, n);
  std::size_t next = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (comp[s] != n) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      for (VertexId w : c.neighbors(u)) {
        if (comp[w] == n) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

inline ValidationReport validate(const PolygonalComplex& c) {
  ValidationReport r;
  const std::size_t n = c.num_vertices();
  auto vname = [&](VertexId v) { return v < n ? c.label(v) : "#" + std::to_string(v); };
  std::set<std::string> seen_labels;
  for (VertexId v = 0; v < n; ++v) {
    if (!seen_labels.insert(c.label(v)).second) r.violations.push_back({"duplicate label", c.label(v)});
  }
  std::set<std::pair<VertexId, VertexId>> seen;
  for (auto [u, v] : c.raw_edges()) {
    std::string e = vname(u) + " -- " + vname(v);
    if (u >= n || v >= n) {
      r.violations.push_back({"edge endpoint missing", e});
    } else if (u == v) {
      r.violations.push_back({"loop edge", e});
    } else if (!seen.insert(std::minmax(u, v)).second) {
      r.violations.push_back({"duplicate edge", e});
    }
  }
  for (std::size_t p = 0; p < c.polygons().size(); ++p) {
    const auto& cyc = c.polygons()[p];
    std::string name = "polygon " + std::to_string(p);
    if (cyc.size() < 3) {
      r.violations.push_back({"polygon too short", name});
      continue;
    }
    if (std::any_of(cyc.begin(), cyc.end(), [&](VertexId v) { return v >= n; })) {
      r.violations.push_back({"polygon vertex missing", name});
      continue;
    }
    std::set<VertexId> distinct(cyc.begin(), cyc.end());
    if (distinct.size() != cyc.size()) r.violations.push_back({"polygon cycle not simple", name});
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      VertexId a = cyc[i];
      VertexId b = cyc[(i + 1) % cyc.size()];
      if (a != b && !c.has_edge(a, b)) {
        r.violations.push_back({"polygon boundary edge absent", name + ": " + vname(a) + " -- " + vname(b)});
      }
    }
  }
  connected_components(c, &r.components);
  r.connected = r.components <= 1;
  return r;
}

}  // namespace ubercontract
