#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <vector>

#include "ubercontract/complex/extended.hpp"
#include "ubercontract/complex/polygonal_complex.hpp"

namespace ubercontract {

inline constexpr int kUnreachable = -1;

/// Saturating count of geodesics; kCountSaturated marks overflow.
inline constexpr std::uint64_t kCountSaturated = std::numeric_limits<std::uint64_t>::max();

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r) || r == kCountSaturated) return kCountSaturated;
  return r;
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (a == kCountSaturated || b == kCountSaturated) return (a == 0 || b == 0) ? 0 : kCountSaturated;
  if (__builtin_mul_overflow(a, b, &r) || r == kCountSaturated) return kCountSaturated;
  return r;
}

/// Breadth-first distances from src; kUnreachable for other components.
inline std::vector<int> bfs_distances(const PolygonalComplex& c, VertexId src) {
  std::vector<int> d(c.num_vertices(), kUnreachable);
  std::deque<VertexId> queue{src};
  d.at(src) = 0;
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : c.neighbors(u)) {
      if (d[w] == kUnreachable) {
        d[w] = d[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return d;
}

inline Extended to_extended(int d) { return d == kUnreachable ? Extended::infinity() : Extended(d); }

inline Extended distance(const PolygonalComplex& c, VertexId u, VertexId v) { return to_extended(bfs_distances(c, u).at(v)); }

/// All-pairs distances and saturating geodesic counts.
class DistanceTable {
 public:
  explicit DistanceTable(const PolygonalComplex& c) : n_(c.num_vertices()), d_(n_ * n_), count_(n_ * n_, 0) {
    std::vector<VertexId> order;
    order.reserve(n_);
    for (VertexId s = 0; s < n_; ++s) {
      int* d = &d_[s * n_];
      std::uint64_t* cnt = &count_[s * n_];
      std::fill(d, d + n_, kUnreachable);
      order.clear();
      d[s] = 0;
      cnt[s] = 1;
      order.push_back(s);
      for (std::size_t head = 0; head < order.size(); ++head) {
        VertexId u = order[head];
        for (VertexId w : c.neighbors(u)) {
          if (d[w] == kUnreachable) {
            d[w] = d[u] + 1;
            order.push_back(w);
          }
          if (d[w] == d[u] + 1) cnt[w] = saturating_add(cnt[w], cnt[u]);
        }
      }
    }
  }

  std::size_t size() const { return n_; }
  int at(VertexId u, VertexId v) const { return d_[u * n_ + v]; }
  Extended distance(VertexId u, VertexId v) const { return to_extended(at(u, v)); }
  bool connected(VertexId u, VertexId v) const { return at(u, v) != kUnreachable; }
  /// Number of geodesics from u to v, or kCountSaturated.
  std::uint64_t geodesic_count(VertexId u, VertexId v) const { return count_[u * n_ + v]; }

  /// d(u, v) over a vertex set; kUnreachable if none is reachable.
  int distance_to_set(VertexId u, const std::vector<VertexId>& set) const {
    int best = kUnreachable;
    for (VertexId s : set) {
      int d = at(u, s);
      if (d != kUnreachable && (best == kUnreachable || d < best)) best = d;
    }
    return best;
  }

  int diameter() const {
    int best = 0;
    for (int d : d_) best = std::max(best, d);
    return best;
  }

 private:
  std::size_t n_;
  std::vector<int> d_;
  std::vector<std::uint64_t> count_;
};

/// All geodesics from source to target as a DAG: successors[w] lists the
/// neighbours one step closer to the target, for w on some geodesic.
struct GeodesicDag {
  VertexId source = 0;
  VertexId target = 0;
  int distance = 0;
  std::vector<int> from_source;
  std::vector<int> to_target;
  std::vector<std::vector<VertexId>> successors;

  bool contains(VertexId v) const {
    return from_source[v] != kUnreachable && to_target[v] != kUnreachable && from_source[v] + to_target[v] == distance;
  }

  /// Vertices on at least one geodesic, sorted.
  std::vector<VertexId> vertices() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < from_source.size(); ++v) {
      if (contains(v)) out.push_back(v);
    }
    return out;
  }

  const std::vector<VertexId>& first_vertices() const { return successors[source]; }

  std::uint64_t count() const {
    std::vector<std::uint64_t> ways(from_source.size(), 0);
    auto verts = vertices();
    std::sort(verts.begin(), verts.end(), [&](VertexId a, VertexId b) { return to_target[a] < to_target[b]; });
    for (VertexId v : verts) {
      if (v == target) {
        ways[v] = 1;
        continue;
      }
      for (VertexId w : successors[v]) ways[v] = saturating_add(ways[v], ways[w]);
    }
    return ways[source];
  }

  /// Lexicographically smallest geodesic.
  std::vector<VertexId> some_path() const {
    std::vector<VertexId> path{source};
    while (path.back() != target) path.push_back(successors[path.back()].front());
    return path;
  }

  /// All geodesics in lexicographic order, at most `limit` of them.
  std::vector<std::vector<VertexId>> all_paths(std::size_t limit = 100000) const {
    std::vector<std::vector<VertexId>> out;
    std::vector<VertexId> path{source};
    enumerate(path, out, limit);
    return out;
  }

  /// A geodesic avoiding every blocked vertex, if one exists.
  std::optional<std::vector<VertexId>> path_avoiding(const std::vector<bool>& blocked) const {
    if (blocked[source] || blocked[target]) return std::nullopt;
    const std::size_t n = from_source.size();
    std::vector<VertexId> parent(n, n);
    std::vector<bool> seen(n, false);
    std::deque<VertexId> queue{source};
    seen[source] = true;
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop_front();
      if (u == target) break;
      for (VertexId w : successors[u]) {
        if (seen[w] || blocked[w]) continue;
        seen[w] = true;
        parent[w] = u;
        queue.push_back(w);
      }
    }
    if (!seen[target]) return std::nullopt;
    std::vector<VertexId> path;
    for (VertexId v = target; v != source; v = parent[v]) path.push_back(v);
    path.push_back(source);
    std::reverse(path.begin(), path.end());
    return path;
  }

 private:
  void enumerate(std::vector<VertexId>& path, std::vector<std::vector<VertexId>>& out, std::size_t limit) const {
    if (out.size() >= limit) return;
    if (path.back() == target) {
      out.push_back(path);
      return;
    }
    for (VertexId w : successors[path.back()]) {
      path.push_back(w);
      enumerate(path, out, limit);
      path.pop_back();
    }
  }
};

inline GeodesicDag geodesic_dag(const PolygonalComplex& c, VertexId u, VertexId v) {
  GeodesicDag dag;
  dag.source = u;
  dag.target = v;
  dag.from_source = bfs_distances(c, u);
  if (dag.from_source.at(v) == kUnreachable) {
    throw Error(ErrorCode::kNoPath, "no path from " + c.label(u) + " to " + c.label(v));
  }
  dag.to_target = bfs_distances(c, v);
  dag.distance = dag.from_source[v];
  dag.successors.assign(c.num_vertices(), {});
  for (VertexId w = 0; w < c.num_vertices(); ++w) {
    if (!dag.contains(w)) continue;
    for (VertexId x : c.neighbors(w)) {
      if (dag.to_target[x] == dag.to_target[w] - 1 && dag.contains(x)) dag.successors[w].push_back(x);
    }
  }
  return dag;
}

/// Vertices lying on at least one geodesic from u to v.
inline std::vector<VertexId> interval(const PolygonalComplex& c, VertexId u, VertexId v) {
  return geodesic_dag(c, u, v).vertices();
}

/// Neighbours of v that start some geodesic from v to w.
inline std::vector<VertexId> first_steps(const PolygonalComplex& c, const DistanceTable& d, VertexId v, VertexId w) {
  std::vector<VertexId> out;
  int dv = d.at(v, w);
  if (dv <= 0) return out;
  for (VertexId x : c.neighbors(v)) {
    if (d.at(x, w) == dv - 1) out.push_back(x);
  }
  return out;
}

/// True when every geodesic from x to y passes through v.
inline bool every_geodesic_contains(const PolygonalComplex& c, const DistanceTable& d, VertexId x, VertexId y, VertexId v) {
  int dxy = d.at(x, y);
  if (dxy == kUnreachable) return false;
  if (v == x || v == y) return true;
  if (d.at(x, v) + d.at(v, y) != dxy) return false;
  std::uint64_t total = d.geodesic_count(x, y);
  std::uint64_t through = saturating_mul(d.geodesic_count(x, v), d.geodesic_count(v, y));
  if (total != kCountSaturated && through != kCountSaturated) return total == through;
  std::vector<bool> blocked(c.num_vertices(), false);
  blocked[v] = true;
  return !geodesic_dag(c, x, y).path_avoiding(blocked).has_value();
}

inline bool is_path(const PolygonalComplex& c, const std::vector<VertexId>& path) {
  if (path.empty()) return false;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!c.has_edge(path[i], path[i + 1])) return false;
  }
  return true;
}

inline bool is_geodesic_path(const PolygonalComplex& c, const std::vector<VertexId>& path) {
  if (!is_path(c, path)) return false;
  return distance(c, path.front(), path.back()) == Extended(static_cast<std::int64_t>(path.size() - 1));
}

/// Vertices of lambda at minimal distance from x, sorted.
inline std::vector<VertexId> closest_point_projection(const DistanceTable& d, VertexId x, const std::vector<VertexId>& lambda) {
  int best = d.distance_to_set(x, lambda);
  std::vector<VertexId> out;
  if (best == kUnreachable) return out;
  for (VertexId s : lambda) {
    if (d.at(x, s) == best) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<VertexId> closest_point_projection(const PolygonalComplex& c, VertexId x, const std::vector<VertexId>& lambda) {
  if (lambda.empty()) throw Error(ErrorCode::kInvalidArgument, "projection onto an empty set");
  auto dist = bfs_distances(c, x);
  int best = kUnreachable;
  for (VertexId s : lambda) {
    if (dist.at(s) != kUnreachable && (best == kUnreachable || dist[s] < best)) best = dist[s];
  }
  std::vector<VertexId> out;
  for (VertexId s : lambda) {
    if (best != kUnreachable && dist[s] == best) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ubercontract
