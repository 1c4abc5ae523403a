#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "ubercontract/checkers/violation.hpp"
#include "ubercontract/complex/builders.hpp"

namespace ubercontract {

/// Total bijection of the vertices carrying edges to edges and polygons to
/// polygons.
inline bool is_automorphism(const PolygonalComplex& c, const VertexMap& phi) {
  const std::size_t n = c.num_vertices();
  if (phi.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (const auto& img : phi) {
    if (!img || *img >= n || hit[*img]++) return false;
  }
  for (auto [u, v] : c.edges()) {
    if (!c.has_edge(*phi[u], *phi[v])) return false;
  }
  auto canon = [&](const std::vector<VertexId>& cyc) {
    std::vector<std::string> labels;
    for (VertexId v : cyc) labels.push_back(std::to_string(v));
    return detail::canonical_cycle(labels);
  };
  std::set<std::vector<std::string>> polys;
  for (const auto& p : c.polygons()) polys.insert(canon(p));
  for (const auto& p : c.polygons()) {
    std::vector<VertexId> img;
    for (VertexId v : p) img.push_back(*phi[v]);
    if (!polys.count(canon(img))) return false;
  }
  return true;
}

/// Positions of the maps moving both x and y by at most r.
inline std::vector<std::size_t> coarse_stabilizer(const PolygonalComplex& c, const std::vector<VertexMap>& isoms, VertexId x,
                                                  VertexId y, int r) {
  if (x >= c.num_vertices() || y >= c.num_vertices()) throw Error(ErrorCode::kInvalidArgument, "vertex out of range");
  if (r < 0) throw Error(ErrorCode::kInvalidArgument, "negative radius");
  auto dx = bfs_distances(c, x);
  auto dy = bfs_distances(c, y);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < isoms.size(); ++k) {
    if (!is_automorphism(c, isoms[k])) {
      throw Error(ErrorCode::kInvalidArgument, "map " + std::to_string(k) + " is not an automorphism");
    }
    int mx = dx[*isoms[k][x]];
    int my = dy[*isoms[k][y]];
    if (mx != kUnreachable && my != kUnreachable && mx <= r && my <= r) out.push_back(k);
  }
  return out;
}

}  // namespace ubercontract
