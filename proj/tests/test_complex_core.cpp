#include <gtest/gtest.h>

#include <set>

#include "ubercontract/complex/builders.hpp"
#include "ubercontract/complex/io.hpp"

using namespace ubercontract;

namespace {

constexpr int kInf = 1 << 28;

// Independent oracle: Floyd–Warshall over the edge list.
std::vector<std::vector<int>> floyd_warshall(const PolygonalComplex& c) {
  const std::size_t n = c.num_vertices();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [u, v] : c.edges()) d[u][v] = d[v][u] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

// Independent oracle: every simple path of length <= bound from u to v.
void simple_paths(const PolygonalComplex& c, std::vector<VertexId>& path, std::vector<bool>& used, VertexId target,
                  std::size_t bound, std::vector<std::vector<VertexId>>& out) {
  if (path.back() == target) {
    out.push_back(path);
    return;
  }
  if (path.size() > bound) return;
  for (VertexId w : c.neighbors(path.back())) {
    if (used[w]) continue;
    used[w] = true;
    path.push_back(w);
    simple_paths(c, path, used, target, bound, out);
    path.pop_back();
    used[w] = false;
  }
}

std::vector<std::vector<VertexId>> shortest_paths_brute(const PolygonalComplex& c, VertexId u, VertexId v, std::size_t bound) {
  std::vector<std::vector<VertexId>> all;
  std::vector<VertexId> path{u};
  std::vector<bool> used(c.num_vertices(), false);
  used[u] = true;
  simple_paths(c, path, used, v, bound, all);
  std::size_t best = SIZE_MAX;
  for (const auto& p : all) best = std::min(best, p.size());
  std::vector<std::vector<VertexId>> out;
  for (const auto& p : all) {
    if (p.size() == best) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexId at(const PolygonalComplex& c, long x, long y) { return c.vertex(grid_label(x, y)); }

}  // namespace

TEST(ExtendedTest, InfinityOrdersAboveIntegers) {
  EXPECT_LT(Extended(1000000), Extended::infinity());
  EXPECT_EQ(Extended::infinity(), Extended::infinity());
  EXPECT_EQ((Extended(2) + Extended::infinity()).to_string(), "inf");
  EXPECT_EQ(3 * Extended(2), Extended(6));
  EXPECT_EQ(0 * Extended::infinity(), Extended(0));
}

TEST(ValidateTest, SingleSquareValidConnected) {
  auto r = validate(grid_complex(0, 0, 2, 2));
  EXPECT_TRUE(r.valid());
  EXPECT_TRUE(r.connected);
}

TEST(ValidateTest, MissingBoundaryEdge) {
  PolygonalComplex c;
  for (int i = 0; i < 4; ++i) c.add_vertex(std::to_string(i));
  c.add_edge(0, 1);
  c.add_edge(1, 2);
  c.add_edge(2, 3);
  c.add_polygon({0, 1, 2, 3});
  auto r = validate(c);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].kind, "polygon boundary edge absent");
}

TEST(ValidateTest, DisjointSquaresDisconnected) {
  PolygonalComplex c;
  for (int s = 0; s < 2; ++s) {
    VertexId b = c.num_vertices();
    for (int i = 0; i < 4; ++i) c.add_vertex(std::to_string(s) + ":" + std::to_string(i));
    for (int i = 0; i < 4; ++i) c.add_edge(b + static_cast<VertexId>(i), b + static_cast<VertexId>((i + 1) % 4));
    c.add_polygon({b, b + 1, b + 2, b + 3});
  }
  auto r = validate(c);
  EXPECT_TRUE(r.valid());
  EXPECT_FALSE(r.connected);
  EXPECT_EQ(r.components, 2u);
}

TEST(ValidateTest, LoopsDuplicatesAndBadPolygons) {
  PolygonalComplex c;
  for (int i = 0; i < 3; ++i) c.add_vertex(std::to_string(i));
  c.add_edge(0, 0);
  c.add_edge(0, 1);
  c.add_edge(1, 0);
  c.add_edge(1, 7);
  c.add_polygon({0, 1});
  c.add_polygon({0, 1, 0});
  std::multiset<std::string> kinds;
  for (const auto& v : validate(c).violations) kinds.insert(v.kind);
  EXPECT_EQ(kinds.count("loop edge"), 1u);
  EXPECT_EQ(kinds.count("duplicate edge"), 1u);
  EXPECT_EQ(kinds.count("edge endpoint missing"), 1u);
  EXPECT_EQ(kinds.count("polygon too short"), 1u);
  EXPECT_EQ(kinds.count("polygon cycle not simple"), 1u);
  EXPECT_EQ(c.num_edges(), 1u);
}

TEST(DistanceTest, Basics) {
  auto sq = grid_complex(0, 0, 2, 2);
  EXPECT_EQ(distance(sq, 0, 0), Extended(0));
  EXPECT_EQ(distance(sq, at(sq, 0, 0), at(sq, 1, 1)), Extended(2));
  auto g = grid_complex(0, 0, 3, 2);
  EXPECT_EQ(distance(g, at(g, 0, 0), at(g, 2, 1)), Extended(3));
  PolygonalComplex two;
  two.add_vertex("a");
  two.add_vertex("b");
  EXPECT_TRUE(distance(two, 0, 1).is_infinite());
}

TEST(DistanceTest, MatchesFloydWarshallAndIsAMetric) {
  std::vector<PolygonalComplex> corpus = {random_tree(60, 1), centered_grid(3), ladder_complex(9), square_chain(4),
                                          random_square_tree(12, 5), triangle_complex()};
  for (const auto& c : corpus) {
    auto fw = floyd_warshall(c);
    DistanceTable d(c);
    const std::size_t n = c.num_vertices();
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = 0; v < n; ++v) {
        ASSERT_EQ(d.at(u, v), fw[u][v]);
        EXPECT_EQ(d.at(u, v), d.at(v, u));
        for (VertexId w = 0; w < n; w += 3) EXPECT_LE(d.at(u, v), d.at(u, w) + d.at(w, v));
      }
    }
  }
}

TEST(GeodesicTest, TreeIntervalIsUniquePath) {
  auto t = random_tree(40, 9);
  auto fw = floyd_warshall(t);
  for (VertexId v = 1; v < 40; v += 7) {
    auto dag = geodesic_dag(t, 0, v);
    EXPECT_EQ(dag.count(), 1u);
    auto path = dag.some_path();
    std::vector<VertexId> sorted = path;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(dag.vertices(), sorted);
    EXPECT_EQ(static_cast<int>(path.size()) - 1, fw[0][v]);
  }
}

TEST(GeodesicTest, LatticeCountsAndIntervals) {
  auto g = centered_grid(3);
  auto dag = geodesic_dag(g, at(g, 0, 0), at(g, 2, 1));
  EXPECT_EQ(dag.count(), 3u);
  EXPECT_EQ(dag.distance, 3);
  auto box = interval(g, at(g, 0, 0), at(g, 2, 2));
  std::vector<VertexId> expected;
  for (long x = 0; x <= 2; ++x) {
    for (long y = 0; y <= 2; ++y) expected.push_back(at(g, x, y));
  }
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(box, expected);
}

TEST(GeodesicTest, DagMatchesBruteForcePaths) {
  std::vector<PolygonalComplex> corpus = {grid_complex(0, 0, 4, 3), square_chain(3), random_square_tree(6, 2)};
  for (const auto& c : corpus) {
    DistanceTable d(c);
    for (VertexId u = 0; u < c.num_vertices(); u += 2) {
      for (VertexId v = 0; v < c.num_vertices(); v += 3) {
        auto dag = geodesic_dag(c, u, v);
        auto brute = shortest_paths_brute(c, u, v, static_cast<std::size_t>(d.at(u, v)) + 1);
        EXPECT_EQ(dag.all_paths(), brute);
        EXPECT_EQ(dag.count(), brute.size());
        EXPECT_EQ(d.geodesic_count(u, v), brute.size());
        std::set<VertexId> on;
        for (const auto& p : brute) on.insert(p.begin(), p.end());
        EXPECT_EQ(dag.vertices(), std::vector<VertexId>(on.begin(), on.end()));
      }
    }
  }
}

TEST(GeodesicTest, NoPathThrows) {
  PolygonalComplex two;
  two.add_vertex("a");
  two.add_vertex("b");
  try {
    geodesic_dag(two, 0, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoPath);
  }
}

TEST(GeodesicTest, EveryGeodesicContains) {
  auto g = centered_grid(2);
  DistanceTable d(g);
  EXPECT_TRUE(every_geodesic_contains(g, d, at(g, -2, 0), at(g, 2, 0), at(g, 0, 0)));
  EXPECT_FALSE(every_geodesic_contains(g, d, at(g, -1, 1), at(g, 1, 0), at(g, 0, 0)));
  auto chain = square_chain(3);
  DistanceTable dc(chain);
  EXPECT_TRUE(every_geodesic_contains(chain, dc, chain.vertex("s1"), chain.vertex("t3"), chain.vertex("c2")));
}

TEST(AngleTest, CornerAngles) {
  auto sq = grid_complex(0, 0, 2, 2);
  VertexId o = at(sq, 0, 0);
  EXPECT_EQ(corner_angle(sq, o, at(sq, 1, 0), at(sq, 1, 0)), Extended(0));
  EXPECT_EQ(corner_angle(sq, o, at(sq, 1, 0), at(sq, 0, 1)), Extended(1));
  auto g = centered_grid(2);
  VertexId c = at(g, 0, 0);
  EXPECT_EQ(corner_angle(g, c, at(g, 1, 0), at(g, -1, 0)), Extended(2));
  EXPECT_EQ(corner_angle(g, c, at(g, 1, 0), at(g, 0, 1)), Extended(1));
  auto t = path_complex(3);
  EXPECT_TRUE(corner_angle(t, 1, 0, 2).is_infinite());
  try {
    corner_angle(g, c, at(g, 2, 2), at(g, 1, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEdgeNotIncident);
  }
}

TEST(AngleTest, CornerAngleSymmetricAndTriangle) {
  auto c = random_square_tree(15, 4);
  AngleTable a(c);
  for (VertexId v = 0; v < c.num_vertices(); ++v) {
    for (VertexId x : c.neighbors(v)) {
      for (VertexId y : c.neighbors(v)) {
        EXPECT_EQ(a.angle(v, x, y), a.angle(v, y, x));
        EXPECT_EQ(a.angle(v, x, y), corner_angle(c, v, x, y));
        for (VertexId z : c.neighbors(v)) EXPECT_LE(a.angle(v, x, y), a.angle(v, x, z) + a.angle(v, z, y));
      }
    }
  }
}

TEST(AngleTest, LinkGraphCounts) {
  auto g = centered_grid(2);
  auto link = link_graph(g, at(g, 0, 0));
  EXPECT_EQ(link.nodes.size(), 4u);
  EXPECT_EQ(link.arcs.size(), 4u);
  auto corner = link_graph(g, at(g, 2, 2));
  EXPECT_EQ(corner.arcs.size(), 1u);
}

TEST(AngleTest, PathAndVertexAngles) {
  auto g = centered_grid(2);
  VertexId o = at(g, 0, 0);
  EXPECT_EQ(vertex_angle(g, o, at(g, 1, 0), at(g, -1, 0)), Extended(2));
  // First edges {E, N} towards (1,1) and {W, S} towards (-1,-1); E and S
  // span a square, so the minimum is 1.
  EXPECT_EQ(vertex_angle(g, o, at(g, 1, 1), at(g, -1, -1)), Extended(1));
  EXPECT_EQ(vertex_angle(g, o, at(g, 1, 1), at(g, -1, 1)), Extended(0));
  EXPECT_EQ(vertex_angle(g, o, at(g, 2, 0), at(g, -1, 0)), Extended(2));
  DistanceTable d(g);
  AngleTable a(g);
  for (VertexId w = 0; w < g.num_vertices(); ++w) {
    for (VertexId w2 = 0; w2 < g.num_vertices(); ++w2) {
      if (w == o || w2 == o) continue;
      EXPECT_EQ(vertex_angle(g, d, a, o, w, w2), vertex_angle(g, o, w, w2));
    }
  }
  EXPECT_EQ(path_angle(g, o, {o, at(g, 1, 0), at(g, 2, 0)}, {o, at(g, 0, 1)}), Extended(1));
  try {
    path_angle(g, o, {o, at(g, 1, 0), at(g, 0, 0)}, {o, at(g, 0, 1)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotGeodesic);
  }
  auto t = path_complex(5);
  EXPECT_TRUE(vertex_angle(t, 2, 0, 4).is_infinite());
}

TEST(ProjectionTest, Examples) {
  auto g = centered_grid(3);
  std::vector<VertexId> axis;
  for (long x = -3; x <= 3; ++x) axis.push_back(at(g, x, 0));
  EXPECT_EQ(closest_point_projection(g, at(g, 3, 2), axis), std::vector<VertexId>{at(g, 3, 0)});
  EXPECT_EQ(closest_point_projection(g, at(g, 1, 0), axis), std::vector<VertexId>{at(g, 1, 0)});
  auto t = random_tree(50, 3);
  std::vector<VertexId> lam = {5, 17, 33};
  DistanceTable d(t);
  for (VertexId x = 0; x < 50; ++x) {
    auto p = closest_point_projection(t, x, lam);
    EXPECT_FALSE(p.empty());
    EXPECT_EQ(p, closest_point_projection(d, x, lam));
    for (VertexId s : p) {
      EXPECT_NE(std::find(lam.begin(), lam.end(), s), lam.end());
      EXPECT_EQ(d.at(x, s), d.distance_to_set(x, lam));
    }
  }
}

TEST(IoTest, JsonRoundTripAndErrors) {
  for (const auto& c : {centered_grid(2), random_tree(30, 7), square_chain(3), triangle_complex()}) {
    std::string text = complex_to_json(c).dump();
    EXPECT_TRUE(labeled_isomorphic(c, parse_complex(text)));
  }
  try {
    parse_complex("{\"vertices\": [");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    EXPECT_NE(std::string(e.what()).find("byte"), std::string::npos);
  }
  EXPECT_THROW(parse_complex("{\"edges\": []}"), Error);
  auto c = parse_complex(R"({"vertices":[{"id":10,"label":"a"},{"id":20,"label":"b"}],"edges":[[10,20],[10,99]]})");
  EXPECT_EQ(c.num_edges(), 1u);
  EXPECT_EQ(validate(c).violations.size(), 1u);
}

TEST(IoTest, IsomorphismDetectsDifferences) {
  auto a = grid_complex(0, 0, 3, 3);
  auto b = grid_complex(0, 0, 3, 3, false);
  EXPECT_FALSE(labeled_isomorphic(a, b));
  EXPECT_TRUE(labeled_isomorphic(a, a));
}

TEST(IoTest, DotExport) {
  auto sq = grid_complex(0, 0, 2, 2);
  std::string dot = skeleton_to_dot(sq);
  EXPECT_NE(dot.find("graph skeleton {"), std::string::npos);
  EXPECT_NE(dot.find("label=\"(1,1)\""), std::string::npos);
  EXPECT_NE(link_to_dot(sq, 0).find("0 -- 1"), std::string::npos);
}
