#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include "ubercontract/complex/metric.hpp"

namespace ubercontract {

/// Link of a vertex: one node per incident edge (named by the far endpoint)
/// and one unit arc per polygon corner at the vertex.
struct LinkGraph {
  VertexId base = 0;
  std::vector<VertexId> nodes;  // sorted neighbours of base
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  std::vector<std::vector<std::size_t>> adjacency;

  std::optional<std::size_t> node_index(VertexId neighbor) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), neighbor);
    if (it == nodes.end() || *it != neighbor) return std::nullopt;
    return static_cast<std::size_t>(it - nodes.begin());
  }

  /// Link distances from one node; kUnreachable marks ∞.
  std::vector<int> distances_from(std::size_t node) const {
    std::vector<int> d(nodes.size(), kUnreachable);
    std::deque<std::size_t> queue{node};
    d[node] = 0;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t w : adjacency[u]) {
        if (d[w] == kUnreachable) {
          d[w] = d[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return d;
  }
};

inline LinkGraph link_graph(const PolygonalComplex& c, VertexId v) {
  LinkGraph g;
  g.base = v;
  g.nodes = c.neighbors(v);
  g.adjacency.assign(g.nodes.size(), {});
  for (const auto& cyc : c.polygons()) {
    const std::size_t k = cyc.size();
    if (k < 3) continue;
    for (std::size_t i = 0; i < k; ++i) {
      if (cyc[i] != v) continue;
      auto a = g.node_index(cyc[(i + k - 1) % k]);
      auto b = g.node_index(cyc[(i + 1) % k]);
      if (!a || !b || *a == *b) continue;
      g.arcs.emplace_back(std::min(*a, *b), std::max(*a, *b));
      g.adjacency[*a].push_back(*b);
      g.adjacency[*b].push_back(*a);
    }
  }
  for (auto& adj : g.adjacency) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
  return g;
}

/// Angle at v between the edges v--e1 and v--e2.
inline Extended corner_angle(const PolygonalComplex& c, VertexId v, VertexId e1, VertexId e2) {
  LinkGraph g = link_graph(c, v);
  auto a = g.node_index(e1);
  auto b = g.node_index(e2);
  if (!a || !b) {
    VertexId bad = a ? e2 : e1;
    throw Error(ErrorCode::kEdgeNotIncident,
                "edge " + c.label(v) + " -- " + c.label(bad) + " is not incident to " + c.label(v));
  }
  return to_extended(g.distances_from(*a)[*b]);
}

/// Link distance tables for every vertex, computed on first use.
class AngleTable {
 public:
  explicit AngleTable(const PolygonalComplex& c) : complex_(&c), tables_(c.num_vertices()) {}

  /// Angle between edges v--a and v--b; both must be neighbours of v.
  Extended angle(VertexId v, VertexId a, VertexId b) const { return to_extended(raw(v, a, b)); }

  /// Raw link distance (kUnreachable for ∞).
  int raw(VertexId v, VertexId a, VertexId b) const {
    const Entry& e = entry(v);
    auto ia = e.link.node_index(a);
    auto ib = e.link.node_index(b);
    if (!ia || !ib) throw Error(ErrorCode::kEdgeNotIncident, "edge not incident to " + complex_->label(v));
    return e.dist[*ia * e.link.nodes.size() + *ib];
  }

  /// Angle by positions in neighbors(v).
  int raw_by_index(VertexId v, std::size_t ia, std::size_t ib) const {
    const Entry& e = entry(v);
    return e.dist[ia * e.link.nodes.size() + ib];
  }

  const LinkGraph& link(VertexId v) const { return entry(v).link; }

 private:
  struct Entry {
    LinkGraph link;
    std::vector<int> dist;
  };

  const Entry& entry(VertexId v) const {
    auto& slot = tables_.at(v);
    if (!slot) {
      Entry e{link_graph(*complex_, v), {}};
      const std::size_t k = e.link.nodes.size();
      e.dist.resize(k * k);
      for (std::size_t i = 0; i < k; ++i) {
        auto row = e.link.distances_from(i);
        std::copy(row.begin(), row.end(), e.dist.begin() + static_cast<std::ptrdiff_t>(i * k));
      }
      slot = std::move(e);
    }
    return *slot;
  }

  const PolygonalComplex* complex_;
  mutable std::vector<std::optional<Entry>> tables_;
};

/// Angle at v between two geodesic paths starting at v: the angle of their
/// first edges.
inline Extended path_angle(const PolygonalComplex& c, VertexId v, const std::vector<VertexId>& g1,
                           const std::vector<VertexId>& g2) {
  for (const auto* g : {&g1, &g2}) {
    if (g->size() < 2 || g->front() != v || !is_geodesic_path(c, *g)) {
      throw Error(ErrorCode::kNotGeodesic, "path is not a geodesic of positive length starting at " + c.label(v));
    }
  }
  return corner_angle(c, v, g1[1], g2[1]);
}

/// Minimum of the angle over first edges of geodesics from v to w and to w'.
inline Extended vertex_angle(const PolygonalComplex& c, const DistanceTable& d, const AngleTable& angles, VertexId v,
                             VertexId w, VertexId w2) {
  if (w == v || w2 == v) throw Error(ErrorCode::kInvalidArgument, "angle at a vertex towards itself");
  if (!d.connected(v, w) || !d.connected(v, w2)) throw Error(ErrorCode::kNoPath, "vertices in different components");
  Extended best = Extended::infinity();
  for (VertexId a : first_steps(c, d, v, w)) {
    for (VertexId b : first_steps(c, d, v, w2)) best = std::min(best, angles.angle(v, a, b));
  }
  return best;
}

inline Extended vertex_angle(const PolygonalComplex& c, VertexId v, VertexId w, VertexId w2) {
  if (w == v || w2 == v) throw Error(ErrorCode::kInvalidArgument, "angle at a vertex towards itself");
  GeodesicDag d1 = geodesic_dag(c, v, w);
  GeodesicDag d2 = geodesic_dag(c, v, w2);
  LinkGraph g = link_graph(c, v);
  Extended best = Extended::infinity();
  for (VertexId a : d1.first_vertices()) {
    auto dist = g.distances_from(*g.node_index(a));
    for (VertexId b : d2.first_vertices()) best = std::min(best, to_extended(dist[*g.node_index(b)]));
  }
  return best;
}

}  // namespace ubercontract
