#pragma once

#include <cstdint>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ubercontract/complex/polygonal_complex.hpp"

namespace ubercontract {

/// Partial vertex map; nullopt where the image leaves the finite portion.
using VertexMap = std::vector<std::optional<VertexId>>;

inline std::string grid_label(long x, long y) { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }

/// Path 0 - 1 - ... - (n-1), labels "0".."n-1".
inline PolygonalComplex path_complex(std::size_t n) {
  PolygonalComplex c;
  for (std::size_t i = 0; i < n; ++i) c.add_vertex(std::to_string(i));
  for (std::size_t i = 0; i + 1 < n; ++i) c.add_edge(i, i + 1);
  return c;
}

/// Random recursive tree: vertex i attaches to a uniformly chosen earlier
/// vertex. Labels "t0".."t(n-1)".
inline PolygonalComplex random_tree(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PolygonalComplex c;
  for (std::size_t i = 0; i < n; ++i) {
    c.add_vertex("t" + std::to_string(i));
    if (i > 0) c.add_edge(std::uniform_int_distribution<std::size_t>(0, i - 1)(rng), i);
  }
  return c;
}

/// cols × rows vertices of the square lattice starting at (x0, y0), labels
/// "(x,y)". With `filled`, every unit square is a polygon.
inline PolygonalComplex grid_complex(long x0, long y0, std::size_t cols, std::size_t rows, bool filled = true) {
  PolygonalComplex c;
  auto id = [&](std::size_t i, std::size_t j) { return j * cols + i; };
  for (std::size_t j = 0; j < rows; ++j) {
    for (std::size_t i = 0; i < cols; ++i) c.add_vertex(grid_label(x0 + static_cast<long>(i), y0 + static_cast<long>(j)));
  }
  for (std::size_t j = 0; j < rows; ++j) {
    for (std::size_t i = 0; i < cols; ++i) {
      if (i + 1 < cols) c.add_edge(id(i, j), id(i + 1, j));
      if (j + 1 < rows) c.add_edge(id(i, j), id(i, j + 1));
    }
  }
  if (filled) {
    for (std::size_t j = 0; j + 1 < rows; ++j) {
      for (std::size_t i = 0; i + 1 < cols; ++i) c.add_polygon({id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  }
  return c;
}

/// The portion [-n, n]^2 of the square lattice.
inline PolygonalComplex centered_grid(long n) {
  auto side = static_cast<std::size_t>(2 * n + 1);
  return grid_complex(-n, -n, side, side);
}

/// Z × {0, 1} portion with n columns.
inline PolygonalComplex ladder_complex(std::size_t n, bool filled = true) { return grid_complex(0, 0, n, 2, filled); }

/// Two squares sharing an edge.
inline PolygonalComplex glued_squares() { return grid_complex(0, 0, 3, 2); }

inline PolygonalComplex triangle_complex() {
  PolygonalComplex c;
  for (const char* l : {"a", "b", "c"}) c.add_vertex(l);
  c.add_edge(0, 1);
  c.add_edge(1, 2);
  c.add_edge(0, 2);
  c.add_polygon({0, 1, 2});
  return c;
}

/// k squares glued at opposite corners: c0, s1/t1, c1, s2/t2, c2, ...
/// Square i has cycle (c(i-1), s_i, c_i, t_i).
inline PolygonalComplex square_chain(std::size_t k) {
  PolygonalComplex c;
  c.add_vertex("c0");
  for (std::size_t i = 1; i <= k; ++i) {
    VertexId prev = c.vertex("c" + std::to_string(i - 1));
    VertexId s = c.add_vertex("s" + std::to_string(i));
    VertexId t = c.add_vertex("t" + std::to_string(i));
    VertexId next = c.add_vertex("c" + std::to_string(i));
    c.add_edge(prev, s);
    c.add_edge(s, next);
    c.add_edge(prev, t);
    c.add_edge(t, next);
    c.add_polygon({prev, s, next, t});
  }
  return c;
}

/// Square complex grown by gluing `squares` new squares one at a time, each
/// along a random existing edge (or, with probability 1/4, at a single
/// vertex). Links stay forests, so the result is CAT(0).
inline PolygonalComplex random_square_tree(std::size_t squares, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PolygonalComplex c;
  std::size_t counter = 0;
  auto fresh = [&]() { return c.add_vertex("q" + std::to_string(counter++)); };
  VertexId a = fresh(), b = fresh(), d = fresh(), e = fresh();
  c.add_edge(a, b);
  c.add_edge(b, d);
  c.add_edge(d, e);
  c.add_edge(e, a);
  c.add_polygon({a, b, d, e});
  for (std::size_t s = 1; s < squares; ++s) {
    bool at_vertex = std::uniform_int_distribution<int>(0, 3)(rng) == 0;
    if (at_vertex) {
      VertexId p = std::uniform_int_distribution<VertexId>(0, c.num_vertices() - 1)(rng);
      VertexId x = fresh(), y = fresh(), z = fresh();
      c.add_edge(p, x);
      c.add_edge(x, y);
      c.add_edge(y, z);
      c.add_edge(z, p);
      c.add_polygon({p, x, y, z});
    } else {
      auto [u, v] = c.edges()[std::uniform_int_distribution<std::size_t>(0, c.num_edges() - 1)(rng)];
      VertexId x = fresh(), y = fresh();
      c.add_edge(v, x);
      c.add_edge(x, y);
      c.add_edge(y, u);
      c.add_polygon({u, v, x, y});
    }
  }
  return c;
}

/// Vertex map induced by a label transformation; labels without an image
/// (or whose image is absent) map to nullopt.
inline VertexMap map_by_label(const PolygonalComplex& c, const std::function<std::optional<std::string>(const std::string&)>& f) {
  VertexMap m(c.num_vertices());
  for (VertexId v = 0; v < c.num_vertices(); ++v) {
    if (auto l = f(c.label(v))) m[v] = c.find_vertex(*l);
  }
  return m;
}

/// Translation by (dx, dy) on a lattice portion.
inline VertexMap grid_shift(const PolygonalComplex& c, long dx, long dy) {
  return map_by_label(c, [&](const std::string& l) -> std::optional<std::string> {
    long x = 0, y = 0;
    if (std::sscanf(l.c_str(), "(%ld,%ld)", &x, &y) != 2) return std::nullopt;
    return grid_label(x + dx, y + dy);
  });
}

/// Shift by `step` on path_complex.
inline VertexMap path_shift(const PolygonalComplex& c, long step) {
  return map_by_label(c, [&](const std::string& l) -> std::optional<std::string> { return std::to_string(std::stol(l) + step); });
}

/// Shift by one square on square_chain.
inline VertexMap chain_shift(const PolygonalComplex& c) {
  return map_by_label(c, [](const std::string& l) -> std::optional<std::string> {
    return l.substr(0, 1) + std::to_string(std::stol(l.substr(1)) + 1);
  });
}

inline VertexMap identity_map(const PolygonalComplex& c) {
  VertexMap m(c.num_vertices());
  for (VertexId v = 0; v < c.num_vertices(); ++v) m[v] = v;
  return m;
}

}  // namespace ubercontract
