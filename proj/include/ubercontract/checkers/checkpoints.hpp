#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "ubercontract/checkers/violation.hpp"
#include "ubercontract/complex/builders.hpp"

namespace ubercontract {

/// Checkpoints S_i listed in increasing index order; the index plays the
/// role of the map from the quasi-line to the reals.
struct CheckpointSystem {
  std::vector<std::vector<VertexId>> checkpoints;
  std::vector<std::int64_t> indices;
  int L = 0;

  std::vector<VertexId> quasi_line() const {
    std::vector<VertexId> out;
    for (const auto& s : checkpoints) out.insert(out.end(), s.begin(), s.end());
    return sorted_unique(out);
  }
};

struct CheckpointOptions {
  // Pairs whose interval meets this set are excluded rather than judged.
  std::vector<VertexId> boundary;
  std::size_t max_violations = 1000;
};

struct CheckpointReport {
  std::vector<Violation> violations;
  std::vector<std::pair<VertexId, VertexId>> excluded;
  std::size_t judged_pairs = 0;
  std::size_t checks = 0;

  bool ok() const { return violations.empty(); }
};

namespace detail {

inline void validate_system(const PolygonalComplex& c, const VertexMap& h, const CheckpointSystem& sys) {
  const std::size_t n = c.num_vertices();
  auto bad = [](const std::string& why) { throw Error(ErrorCode::kInvalidArgument, why); };
  if (sys.checkpoints.empty()) bad("checkpoint system is empty");
  if (sys.checkpoints.size() != sys.indices.size()) bad("one index per checkpoint required");
  if (sys.L < 0) bad("negative L");
  if (h.size() != n) bad("map size does not match the complex");
  std::vector<char> hit(n, 0);
  for (auto img : h) {
    if (!img) continue;
    if (*img >= n) bad("map image out of range");
    if (hit[*img]++) bad("map is not injective");
  }
  std::vector<char> seen(n, 0);
  for (std::size_t k = 0; k < sys.checkpoints.size(); ++k) {
    if (sys.checkpoints[k].empty()) bad("empty checkpoint");
    if (k > 0 && sys.indices[k] <= sys.indices[k - 1]) bad("indices must increase strictly");
    for (VertexId v : sys.checkpoints[k]) {
      if (v >= n) bad("checkpoint vertex out of range");
      if (seen[v]++) bad("checkpoints overlap at " + c.label(v));
    }
  }
  // Consecutive checkpoints are h-translates wherever h is defined on S_k.
  for (std::size_t k = 0; k + 1 < sys.checkpoints.size(); ++k) {
    if (sys.indices[k + 1] != sys.indices[k] + 1) continue;
    std::vector<VertexId> image;
    bool defined = true;
    for (VertexId v : sys.checkpoints[k]) {
      if (!h[v]) {
        defined = false;
        break;
      }
      image.push_back(*h[v]);
    }
    if (defined && sorted_unique(image) != sorted_unique(sys.checkpoints[k + 1])) {
      bad("checkpoint " + std::to_string(sys.indices[k + 1]) + " is not the translate of its predecessor");
    }
  }
}

}  // namespace detail

/// For each test pair, every checkpoint whose index lies strictly between the
/// projection indices of x and y (for every projection choice), and which is
/// at distance >= L from both projections, must meet every x-y geodesic.
inline CheckpointReport check_checkpoint_system(const PolygonalComplex& c, const VertexMap& h, const CheckpointSystem& sys,
                                                const std::vector<std::pair<VertexId, VertexId>>& test_set,
                                                const CheckpointOptions& opts = {}) {
  detail::validate_system(c, h, sys);
  const std::size_t n = c.num_vertices();
  DistanceTable d(c);
  auto lambda = sys.quasi_line();
  std::vector<std::optional<std::size_t>> owner(n);
  for (std::size_t k = 0; k < sys.checkpoints.size(); ++k) {
    for (VertexId v : sys.checkpoints[k]) owner[v] = k;
  }
  std::vector<std::vector<VertexId>> proj(n);
  std::vector<char> proj_done(n, 0);
  auto projection = [&](VertexId x) -> const std::vector<VertexId>& {
    if (!proj_done[x]) {
      proj[x] = closest_point_projection(d, x, lambda);
      proj_done[x] = 1;
    }
    return proj[x];
  };
  auto set_distance = [&](const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
    int best = std::numeric_limits<int>::max();
    for (VertexId u : a) {
      for (VertexId v : b) {
        if (d.connected(u, v)) best = std::min(best, d.at(u, v));
      }
    }
    return best;
  };
  auto boundary = sorted_unique(opts.boundary);

  CheckpointReport rep;
  for (auto [x, y] : test_set) {
    if (x >= n || y >= n) throw Error(ErrorCode::kInvalidArgument, "test pair out of range");
    if (x == y || !d.connected(x, y)) continue;
    const auto& px = projection(x);
    const auto& py = projection(y);
    if (px.empty() || py.empty()) continue;
    bool excluded = false;
    for (VertexId b : boundary) {
      if (d.at(x, b) != kUnreachable && d.at(x, b) + d.at(b, y) == d.at(x, y)) {
        excluded = true;
        break;
      }
    }
    if (excluded) {
      rep.excluded.emplace_back(x, y);
      continue;
    }
    auto index_range = [&](const std::vector<VertexId>& p) {
      std::size_t lo = *owner[p.front()], hi = lo;
      for (VertexId v : p) {
        lo = std::min(lo, *owner[v]);
        hi = std::max(hi, *owner[v]);
      }
      return std::pair{lo, hi};
    };
    auto [xlo, xhi] = index_range(px);
    auto [ylo, yhi] = index_range(py);
    std::size_t from = 0, to = 0;  // candidate positions [from, to)
    if (xhi < ylo) {
      from = xhi + 1;
      to = ylo;
    } else if (yhi < xlo) {
      from = yhi + 1;
      to = xlo;
    }
    bool judged = false;
    std::optional<GeodesicDag> dag;
    for (std::size_t k = from; k < to; ++k) {
      const auto& s = sys.checkpoints[k];
      if (set_distance(s, px) < sys.L || set_distance(s, py) < sys.L) continue;
      judged = true;
      ++rep.checks;
      if (std::find(s.begin(), s.end(), x) != s.end() || std::find(s.begin(), s.end(), y) != s.end()) continue;
      bool meets = false;
      if (s.size() == 1) {
        meets = every_geodesic_contains(c, d, x, y, s[0]);
      } else {
        if (!dag) dag = geodesic_dag(c, x, y);
        std::vector<bool> blocked(n, false);
        for (VertexId v : s) blocked[v] = true;
        meets = !dag->path_avoiding(blocked).has_value();
      }
      if (meets) continue;
      if (rep.violations.size() >= opts.max_violations) continue;
      if (!dag) dag = geodesic_dag(c, x, y);
      std::vector<bool> blocked(n, false);
      for (VertexId v : s) blocked[v] = true;
      Violation v;
      v.condition = "checkpoint_avoided";
      v.vertices = {x, y};
      v.vertices.insert(v.vertices.end(), s.begin(), s.end());
      v.paths.push_back(*dag->path_avoiding(blocked));
      v.measured = {{"checkpoint_index", Extended(sys.indices[k])},
                    {"index_x", Extended(sys.indices[xhi])},
                    {"index_y", Extended(sys.indices[ylo])},
                    {"d(x,y)", Extended(d.at(x, y))}};
      if (yhi < xlo) {
        v.measured[1].second = Extended(sys.indices[xlo]);
        v.measured[2].second = Extended(sys.indices[yhi]);
      }
      rep.violations.push_back(std::move(v));
    }
    if (judged) ++rep.judged_pairs;
  }
  return rep;
}

inline CheckpointReport check_checkpoint_system(const PolygonalComplex& c, const VertexMap& h, const CheckpointSystem& sys,
                                                const CheckpointOptions& opts = {}) {
  return check_checkpoint_system(c, h, sys, all_vertex_pairs(c), opts);
}

/// Inverse of an injective partial map.
inline VertexMap invert_map(const VertexMap& h) {
  VertexMap inv(h.size());
  for (VertexId v = 0; v < h.size(); ++v) {
    if (h[v]) inv.at(*h[v]) = v;
  }
  return inv;
}

struct BigAngleResult {
  Extended angle;
  CheckpointSystem system;
  CheckpointReport report;
};

/// Singleton checkpoints h^i v along an h-invariant geodesic axis, accepted
/// only when the axis turns by more than `threshold` at v.
inline BigAngleResult assemble_checkpoints_from_big_angle(const PolygonalComplex& c, const std::vector<VertexId>& axis,
                                                          const VertexMap& h, VertexId v, Extended threshold, int L,
                                                          const CheckpointOptions& opts = {}) {
  if (!is_geodesic_path(c, axis)) throw Error(ErrorCode::kNotGeodesic, "axis is not a geodesic");
  if (h.size() != c.num_vertices()) throw Error(ErrorCode::kInvalidArgument, "map size does not match the complex");
  auto pos = std::find(axis.begin(), axis.end(), v);
  if (pos == axis.end() || pos == axis.begin() || pos + 1 == axis.end()) {
    throw Error(ErrorCode::kInvalidArgument, c.label(v) + " is not an interior vertex of the axis");
  }
  std::set<VertexId> on_axis(axis.begin(), axis.end());
  for (VertexId a : axis) {
    if (h[a] && !on_axis.count(*h[a])) throw Error(ErrorCode::kInvalidArgument, "axis is not invariant under the map");
  }
  BigAngleResult res;
  res.angle = corner_angle(c, v, *(pos - 1), *(pos + 1));
  if (!(res.angle > threshold)) {
    throw Error(ErrorCode::kAngleTooSmall,
                "angle " + res.angle.to_string() + " at " + c.label(v) + " does not exceed " + threshold.to_string());
  }
  std::map<std::int64_t, VertexId> orbit{{0, v}};
  VertexMap inv = invert_map(h);
  std::set<VertexId> seen{v};
  for (int dir : {1, -1}) {
    const VertexMap& step = dir == 1 ? h : inv;
    VertexId cur = v;
    for (std::int64_t i = dir;; i += dir) {
      if (!step[cur] || seen.count(*step[cur])) break;
      cur = *step[cur];
      seen.insert(cur);
      orbit[i] = cur;
    }
  }
  for (auto [i, w] : orbit) {
    res.system.indices.push_back(i);
    res.system.checkpoints.push_back({w});
  }
  res.system.L = L;
  res.report = check_checkpoint_system(c, h, res.system, opts);
  return res;
}

}  // namespace ubercontract
