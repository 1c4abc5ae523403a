#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "ubercontract/checkers/violation.hpp"

namespace ubercontract {

struct ContractionReport {
  std::int64_t constant = 0;
  // Ball B(center, radius) whose projection has diameter `constant`.
  std::optional<VertexId> witness_center;
  int witness_radius = 0;
  std::vector<VertexId> witness_projection;
  int radius_bound = 0;
  std::size_t balls_tested = 0;
};

namespace detail {

inline std::vector<VertexId> checked_set(const PolygonalComplex& c, const std::vector<VertexId>& lambda) {
  if (lambda.empty()) throw Error(ErrorCode::kInvalidArgument, "quasi-line is empty");
  for (VertexId v : lambda) {
    if (v >= c.num_vertices()) throw Error(ErrorCode::kInvalidArgument, "vertex id " + std::to_string(v) + " out of range");
  }
  return sorted_unique(lambda);
}

inline std::vector<std::vector<VertexId>> all_projections(const DistanceTable& d, const std::vector<VertexId>& lambda) {
  std::vector<std::vector<VertexId>> out(d.size());
  for (VertexId x = 0; x < d.size(); ++x) out[x] = closest_point_projection(d, x, lambda);
  return out;
}

}  // namespace detail

/// Largest projection diameter over closed balls B(x, r), r <= radius_bound,
/// disjoint from lambda. The projection of a ball is the union of the
/// projections of its points.
inline ContractionReport contraction_constant(const PolygonalComplex& c, const std::vector<VertexId>& lambda_in,
                                              int radius_bound) {
  auto lambda = detail::checked_set(c, lambda_in);
  if (radius_bound < 0) throw Error(ErrorCode::kInvalidArgument, "negative radius bound");
  DistanceTable d(c);
  auto proj = detail::all_projections(d, lambda);
  const std::size_t n = c.num_vertices();
  ContractionReport rep;
  rep.radius_bound = radius_bound;

  std::vector<char> in_union(n, 0);
  for (VertexId x = 0; x < n; ++x) {
    int to_lambda = d.distance_to_set(x, lambda);
    if (to_lambda == kUnreachable) continue;
    int rmax = std::min(radius_bound, to_lambda - 1);
    if (rmax < 0) continue;
    std::vector<std::vector<VertexId>> shells(static_cast<std::size_t>(rmax) + 1);
    for (VertexId v = 0; v < n; ++v) {
      int dv = d.at(x, v);
      if (dv != kUnreachable && dv <= rmax) shells[static_cast<std::size_t>(dv)].push_back(v);
    }
    std::vector<VertexId> members;
    std::int64_t diam = 0;
    for (int r = 0; r <= rmax; ++r) {
      for (VertexId v : shells[static_cast<std::size_t>(r)]) {
        for (VertexId p : proj[v]) {
          if (in_union[p]) continue;
          for (VertexId q : members) diam = std::max<std::int64_t>(diam, d.at(p, q));
          in_union[p] = 1;
          members.push_back(p);
        }
      }
      ++rep.balls_tested;
      if (!rep.witness_center || diam > rep.constant) {
        rep.constant = diam;
        rep.witness_center = x;
        rep.witness_radius = r;
        rep.witness_projection = sorted_unique(members);
      }
    }
    for (VertexId p : members) in_union[p] = 0;
  }
  return rep;
}

/// Every pair x, y in one component and every choice of projections must
/// satisfy d(πx, πy) <= max(C, 4 d(x, y)).
inline std::vector<Violation> check_coarse_lipschitz(const PolygonalComplex& c, const std::vector<VertexId>& lambda_in,
                                                     std::int64_t C, std::size_t max_violations = 1000) {
  auto lambda = detail::checked_set(c, lambda_in);
  DistanceTable d(c);
  auto proj = detail::all_projections(d, lambda);
  std::vector<Violation> out;
  for (VertexId x = 0; x < c.num_vertices(); ++x) {
    for (VertexId y = x + 1; y < c.num_vertices(); ++y) {
      if (!d.connected(x, y)) continue;
      std::int64_t bound = std::max<std::int64_t>(C, 4 * static_cast<std::int64_t>(d.at(x, y)));
      for (VertexId px : proj[x]) {
        for (VertexId py : proj[y]) {
          if (d.at(px, py) <= bound) continue;
          if (out.size() >= max_violations) return out;
          Violation v;
          v.condition = "coarse_lipschitz";
          v.vertices = {x, y, px, py};
          v.measured = {{"d(px,py)", Extended(d.at(px, py))},
                        {"d(x,y)", Extended(d.at(x, y))},
                        {"bound", Extended(bound)}};
          out.push_back(std::move(v));
        }
      }
    }
  }
  return out;
}

}  // namespace ubercontract
