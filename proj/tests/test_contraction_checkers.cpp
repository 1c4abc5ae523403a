#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <random>
#include <set>
#include <tuple>

#include "ubercontract/checkers.hpp"

using namespace ubercontract;

namespace {

std::vector<VertexId> row_of(const PolygonalComplex& c, long y) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < c.num_vertices(); ++v) {
    long a = 0, b = 0;
    if (std::sscanf(c.label(v).c_str(), "(%ld,%ld)", &a, &b) == 2 && b == y) out.push_back(v);
  }
  return out;
}

std::pair<long, long> coords(const PolygonalComplex& c, VertexId v) {
  long a = 0, b = 0;
  std::sscanf(c.label(v).c_str(), "(%ld,%ld)", &a, &b);
  return {a, b};
}

// Oracle: balls and projections rebuilt from single-source BFS only.
std::int64_t brute_contraction(const PolygonalComplex& c, const std::vector<VertexId>& lambda, int bound) {
  std::int64_t best = 0;
  for (VertexId x = 0; x < c.num_vertices(); ++x) {
    auto dx = bfs_distances(c, x);
    for (int r = 0; r <= bound; ++r) {
      std::vector<VertexId> ball;
      bool meets = false;
      for (VertexId v = 0; v < c.num_vertices(); ++v) {
        if (dx[v] != kUnreachable && dx[v] <= r) {
          ball.push_back(v);
          if (std::find(lambda.begin(), lambda.end(), v) != lambda.end()) meets = true;
        }
      }
      if (meets) break;
      std::set<VertexId> image;
      for (VertexId v : ball) {
        for (VertexId p : closest_point_projection(c, v, lambda)) image.insert(p);
      }
      for (VertexId p : image) {
        auto dp = bfs_distances(c, p);
        for (VertexId q : image) best = std::max<std::int64_t>(best, dp[q]);
      }
    }
  }
  return best;
}

std::vector<VertexId> random_geodesic(const PolygonalComplex& c, std::mt19937_64& rng) {
  std::uniform_int_distribution<VertexId> pick(0, c.num_vertices() - 1);
  return geodesic_dag(c, pick(rng), pick(rng)).some_path();
}

// Tree with a translation: spine a0..a(n-1), each a_i carries a pendant b_i
// and the pendant carries c_i.
PolygonalComplex comb(std::size_t n) {
  PolygonalComplex c;
  for (std::size_t i = 0; i < n; ++i) {
    auto a = c.add_vertex("a" + std::to_string(i));
    auto b = c.add_vertex("b" + std::to_string(i));
    auto d = c.add_vertex("c" + std::to_string(i));
    c.add_edge(a, b);
    c.add_edge(b, d);
    if (i > 0) c.add_edge(c.vertex("a" + std::to_string(i - 1)), a);
  }
  return c;
}

VertexMap comb_shift(const PolygonalComplex& c) {
  return map_by_label(c, [](const std::string& l) -> std::optional<std::string> {
    return l.substr(0, 1) + std::to_string(std::stol(l.substr(1)) + 1);
  });
}

std::vector<VertexId> labelled_path(const PolygonalComplex& c, const std::string& prefix, std::size_t n) {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(c.vertex(prefix + std::to_string(i)));
  return out;
}

// Brute-force SCP oracle on small complexes: all geodesics enumerated.
using Triple = std::tuple<VertexId, VertexId, VertexId>;

Triple norm(VertexId v, VertexId x, VertexId y) { return {v, std::min(x, y), std::max(x, y)}; }

bool brute_every_geodesic_contains(const PolygonalComplex& c, VertexId x, VertexId y, VertexId v) {
  for (const auto& p : geodesic_dag(c, x, y).all_paths()) {
    if (std::find(p.begin(), p.end(), v) == p.end()) return false;
  }
  return true;
}

std::pair<std::set<Triple>, std::set<Triple>> brute_scp(const PolygonalComplex& c, ScpConstants k) {
  DistanceTable d(c);
  const int bound = d.diameter();
  std::set<Triple> cond1, cond2;
  auto exceeds = [&](Extended a) { return a > Extended(k.A); };
  const std::size_t n = c.num_vertices();
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId x = 0; x < n; ++x) {
      for (VertexId y = 0; y < n; ++y) {
        if (x == v || y == v || !d.connected(v, x) || !d.connected(v, y)) continue;
        for (const auto& g1 : geodesic_dag(c, v, x).all_paths()) {
          for (const auto& g2 : geodesic_dag(c, v, y).all_paths()) {
            if (g1[1] == g2[1] || !exceeds(corner_angle(c, v, g1[1], g2[1]))) continue;
            if (d.at(x, y) != d.at(v, x) + d.at(v, y)) cond1.insert(norm(v, x, y));
          }
        }
      }
    }
  }
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = 0; b < n; ++b) {
      if (a == b || !d.connected(a, b) || d.at(a, b) > bound) continue;
      for (const auto& gamma : geodesic_dag(c, a, b).all_paths()) {
        for (std::size_t pv = 1; pv + 1 < gamma.size(); ++pv) {
          VertexId v = gamma[pv];
          if (!exceeds(corner_angle(c, v, gamma[pv - 1], gamma[pv + 1]))) continue;
          std::vector<VertexId> left_far, right_far;
          for (VertexId x = 0; x < n; ++x) {
            int m = d.distance_to_set(x, gamma);
            if (m == kUnreachable) continue;
            bool lf = true, rf = true;
            for (std::size_t p = 0; p < gamma.size(); ++p) {
              if (d.at(x, gamma[p]) != m) continue;
              std::int64_t off = static_cast<std::int64_t>(p) - static_cast<std::int64_t>(pv);
              if (off >= -k.R) lf = false;
              if (off <= k.R) rf = false;
            }
            if (lf) left_far.push_back(x);
            if (rf) right_far.push_back(x);
          }
          for (VertexId x : left_far) {
            for (VertexId y : right_far) {
              if (!brute_every_geodesic_contains(c, x, y, v)) cond2.insert(norm(v, x, y));
            }
          }
        }
      }
    }
  }
  return {cond1, cond2};
}

std::pair<std::set<Triple>, std::set<Triple>> scp_triples(const ScpReport& r) {
  std::set<Triple> c1, c2;
  for (const auto& v : r.violations) {
    auto t = norm(v.vertices[0], v.vertices[1], v.vertices[2]);
    (v.condition == "scp_concatenation" ? c1 : c2).insert(t);
  }
  return {c1, c2};
}

PolygonalComplex single_square() { return grid_complex(0, 0, 2, 2); }

std::vector<PolygonalComplex> small_corpus() {
  std::vector<PolygonalComplex> out{single_square(), glued_squares(), triangle_complex(), square_chain(2),
                                    grid_complex(0, 0, 3, 3), grid_complex(0, 0, 4, 3, false), ladder_complex(4, false)};
  for (std::uint64_t seed = 1; seed <= 4; ++seed) out.push_back(random_square_tree(4, seed));
  for (std::uint64_t seed = 1; seed <= 3; ++seed) out.push_back(random_tree(12, seed));
  return out;
}

}  // namespace

// ---------------------------------------------------------------- contraction

TEST(Contraction, TreeWithPathIsZero) {
  std::mt19937_64 rng(7);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto t = random_tree(10 + 9 * (seed % 11), seed);
    auto lambda = random_geodesic(t, rng);
    auto rep = contraction_constant(t, lambda, static_cast<int>(t.num_vertices()));
    EXPECT_EQ(rep.constant, 0) << "seed " << seed;
  }
}

TEST(Contraction, WholeVertexSetIsVacuous) {
  auto g = centered_grid(2);
  std::vector<VertexId> all(g.num_vertices());
  for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
  auto rep = contraction_constant(g, all, 10);
  EXPECT_EQ(rep.constant, 0);
  EXPECT_EQ(rep.balls_tested, 0u);
  EXPECT_FALSE(rep.witness_center.has_value());
}

TEST(Contraction, EmptyQuasiLineRejected) {
  try {
    contraction_constant(path_complex(3), {}, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(Contraction, GridGrowsLinearly) {
  for (long n = 2; n <= 5; ++n) {
    auto g = centered_grid(n);
    auto axis = row_of(g, 0);
    auto rep = contraction_constant(g, axis, static_cast<int>(2 * n));
    EXPECT_GE(rep.constant, 2 * (n - 1)) << "n=" << n;
    // The witness is recomputable.
    ASSERT_TRUE(rep.witness_center.has_value());
    DistanceTable d(g);
    EXPECT_GT(d.distance_to_set(*rep.witness_center, axis), rep.witness_radius);
    std::int64_t diam = 0;
    for (VertexId p : rep.witness_projection) {
      for (VertexId q : rep.witness_projection) diam = std::max<std::int64_t>(diam, d.at(p, q));
    }
    EXPECT_EQ(diam, rep.constant);
  }
}

TEST(Contraction, MatchesBruteForce) {
  std::mt19937_64 rng(11);
  std::vector<PolygonalComplex> cs{centered_grid(2), glued_squares(), square_chain(3), ladder_complex(5, false)};
  for (std::uint64_t s = 1; s <= 4; ++s) cs.push_back(random_square_tree(5, s));
  for (const auto& c : cs) {
    for (int trial = 0; trial < 3; ++trial) {
      auto lambda = random_geodesic(c, rng);
      for (int bound : {0, 1, 3}) EXPECT_EQ(contraction_constant(c, lambda, bound).constant, brute_contraction(c, lambda, bound));
    }
  }
}

// ------------------------------------------------------------- Lipschitz lemma

TEST(CoarseLipschitz, HoldsWithExhaustiveConstant) {
  std::mt19937_64 rng(3);
  std::vector<PolygonalComplex> cs{centered_grid(3), square_chain(4), ladder_complex(6), ladder_complex(6, false)};
  for (std::uint64_t s = 1; s <= 5; ++s) cs.push_back(random_square_tree(8, s));
  for (std::uint64_t s = 1; s <= 5; ++s) cs.push_back(random_tree(40, s));
  for (const auto& c : cs) {
    for (int trial = 0; trial < 3; ++trial) {
      auto lambda = random_geodesic(c, rng);
      auto C = contraction_constant(c, lambda, DistanceTable(c).diameter()).constant;
      EXPECT_TRUE(check_coarse_lipschitz(c, lambda, C).empty());
    }
  }
}

TEST(CoarseLipschitz, TreesNeedNoSlack) {
  std::mt19937_64 rng(5);
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto t = random_tree(60, s);
    EXPECT_TRUE(check_coarse_lipschitz(t, random_geodesic(t, rng), 0).empty());
  }
}

TEST(CoarseLipschitz, UnderstatedConstantCaught) {
  // A staircase geodesic: points off the diagonal have long projections.
  auto g = centered_grid(3);
  std::vector<VertexId> axis;
  for (long i = -3; i <= 3; ++i) {
    axis.push_back(g.vertex(grid_label(i, i)));
    if (i < 3) axis.push_back(g.vertex(grid_label(i + 1, i)));
  }
  ASSERT_TRUE(is_geodesic_path(g, axis));
  EXPECT_TRUE(check_coarse_lipschitz(g, row_of(g, 0), 0).empty());
  auto viols = check_coarse_lipschitz(g, axis, 0);
  ASSERT_FALSE(viols.empty());
  DistanceTable d(g);
  for (const auto& v : viols) {
    VertexId x = v.vertices[0], y = v.vertices[1], px = v.vertices[2], py = v.vertices[3];
    EXPECT_NE(x, y);
    auto proj_x = closest_point_projection(g, x, axis);
    auto proj_y = closest_point_projection(g, y, axis);
    EXPECT_TRUE(std::count(proj_x.begin(), proj_x.end(), px));
    EXPECT_TRUE(std::count(proj_y.begin(), proj_y.end(), py));
    EXPECT_GT(d.at(px, py), 4 * d.at(x, y));
  }
}

// --------------------------------------------------------------- checkpoints

TEST(Checkpoints, PathShiftSingletons) {
  auto p = path_complex(200);
  auto h = path_shift(p, 1);
  CheckpointSystem sys;
  for (VertexId v = 0; v < 200; ++v) {
    sys.checkpoints.push_back({v});
    sys.indices.push_back(static_cast<std::int64_t>(v));
  }
  auto rep = check_checkpoint_system(p, h, sys);
  EXPECT_TRUE(rep.ok());
  EXPECT_GT(rep.judged_pairs, 0u);
}

TEST(Checkpoints, LadderRungs) {
  for (bool filled : {true, false}) {
    auto c = ladder_complex(12, filled);
    auto h = grid_shift(c, 1, 0);
    CheckpointSystem sys;
    for (long i = 0; i < 12; ++i) {
      sys.checkpoints.push_back({c.vertex(grid_label(i, 0)), c.vertex(grid_label(i, 1))});
      sys.indices.push_back(i);
    }
    auto rep = check_checkpoint_system(c, h, sys);
    EXPECT_TRUE(rep.ok());
    EXPECT_GT(rep.checks, 0u);
  }
}

TEST(Checkpoints, GridSingletonsFailWithWitness) {
  auto g = centered_grid(3);
  auto h = grid_shift(g, 1, 0);
  CheckpointSystem sys;
  for (long i = -3; i <= 3; ++i) {
    sys.checkpoints.push_back({g.vertex(grid_label(i, 0))});
    sys.indices.push_back(i);
  }
  auto rep = check_checkpoint_system(g, h, sys);
  ASSERT_FALSE(rep.ok());
  for (const auto& v : rep.violations) {
    VertexId x = v.vertices[0], y = v.vertices[1], s = v.vertices[2];
    ASSERT_EQ(v.paths.size(), 1u);
    const auto& w = v.paths[0];
    EXPECT_EQ(w.front(), x);
    EXPECT_EQ(w.back(), y);
    EXPECT_TRUE(is_geodesic_path(g, w));
    EXPECT_EQ(std::count(w.begin(), w.end(), s), 0);
    EXPECT_FALSE(every_geodesic_contains(g, DistanceTable(g), x, y, s));
  }
}

TEST(Checkpoints, TreeSingletonsAlongAnyPath) {
  std::mt19937_64 rng(17);
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto t = random_tree(50, s);
    auto axis = random_geodesic(t, rng);
    CheckpointSystem sys;
    for (std::size_t i = 0; i < axis.size(); ++i) {
      sys.checkpoints.push_back({axis[i]});
      sys.indices.push_back(static_cast<std::int64_t>(i));
    }
    VertexMap nowhere(t.num_vertices());
    EXPECT_TRUE(check_checkpoint_system(t, nowhere, sys).ok()) << "seed " << s;
  }
}

TEST(Checkpoints, Monotonicity) {
  auto g = centered_grid(3);
  auto h = grid_shift(g, 1, 0);
  auto key = [](const Violation& v) { return std::tuple{v.vertices[0], v.vertices[1], v.vertices[2]}; };
  auto keys = [&](const CheckpointReport& r) {
    std::set<std::tuple<VertexId, VertexId, VertexId>> out;
    for (const auto& v : r.violations) out.insert(key(v));
    return out;
  };
  CheckpointSystem sys;
  for (long i = -3; i <= 3; ++i) {
    sys.checkpoints.push_back({g.vertex(grid_label(i, 0))});
    sys.indices.push_back(i);
  }
  CheckpointOptions all;
  all.max_violations = 1u << 20;
  std::set<std::tuple<VertexId, VertexId, VertexId>> prev;
  for (int L = 0; L <= 3; ++L) {
    sys.L = L;
    auto cur = keys(check_checkpoint_system(g, h, sys, all));
    if (L > 0) {
      EXPECT_TRUE(std::includes(prev.begin(), prev.end(), cur.begin(), cur.end()));
    }
    prev = cur;
  }
  sys.L = 0;
  auto pairs = all_vertex_pairs(g);
  auto full = keys(check_checkpoint_system(g, h, sys, pairs, all));
  pairs.resize(pairs.size() / 3);
  auto part = keys(check_checkpoint_system(g, h, sys, pairs, all));
  EXPECT_TRUE(std::includes(full.begin(), full.end(), part.begin(), part.end()));
}

TEST(Checkpoints, BoundaryPairsExcluded) {
  auto g = centered_grid(2);
  auto h = grid_shift(g, 1, 0);
  CheckpointSystem sys;
  for (long i = -2; i <= 2; ++i) {
    sys.checkpoints.push_back({g.vertex(grid_label(i, 0))});
    sys.indices.push_back(i);
  }
  CheckpointOptions opts;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto [a, b] = coords(g, v);
    if (std::abs(a) == 2 || std::abs(b) == 2) opts.boundary.push_back(v);
  }
  auto rep = check_checkpoint_system(g, h, sys, opts);
  EXPECT_FALSE(rep.excluded.empty());
  for (auto [x, y] : rep.excluded) {
    auto iv = interval(g, x, y);
    bool meets = std::any_of(iv.begin(), iv.end(), [&](VertexId v) {
      return std::count(opts.boundary.begin(), opts.boundary.end(), v) > 0;
    });
    EXPECT_TRUE(meets);
  }
  for (const auto& v : rep.violations) {
    EXPECT_EQ(std::count(rep.excluded.begin(), rep.excluded.end(), std::pair{v.vertices[0], v.vertices[1]}), 0);
  }
  // (-1,1) to (1,1) stays inside and detours around (0,0).
  EXPECT_FALSE(rep.ok());
}

TEST(Checkpoints, InconsistentTranslatesRejected) {
  auto p = path_complex(10);
  CheckpointSystem sys{{{0}, {2}}, {0, 1}, 0};
  try {
    check_checkpoint_system(p, path_shift(p, 1), sys);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

// ------------------------------------------------------------------------ SCP

TEST(Scp, GridVacuousAtTwo) {
  auto g = centered_grid(3);
  auto rep = check_scp(g, {2, 0});
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.segments, 0u);
}

TEST(Scp, TriangleConcatenationFails) {
  auto t = triangle_complex();
  auto rep = check_scp(t, {0, 0});
  ASSERT_GT(rep.condition1_violations, 0u);
  const auto& v = rep.violations.front();
  EXPECT_EQ(v.condition, "scp_concatenation");
  EXPECT_EQ(v.value("angle"), Extended(1));
  EXPECT_EQ(v.value("d(x,y)"), Extended(1));
  EXPECT_EQ(v.value("concatenated_length"), Extended(2));
  EXPECT_EQ(corner_angle(t, v.vertices[0], v.paths[0][1], v.paths[1][1]), Extended(1));
}

TEST(Scp, TreesAlwaysPass) {
  for (std::uint64_t s = 0; s < 8; ++s) {
    auto t = random_tree(30 + 10 * s, s);
    for (std::int64_t A : {0, 1, 4}) {
      for (std::int64_t R : {0, 1, 2}) EXPECT_TRUE(check_scp(t, {A, R}).ok()) << s << " " << A << " " << R;
    }
  }
}

TEST(Scp, MatchesBruteForce) {
  ScpOptions all;
  all.max_violations = 1u << 20;
  for (const auto& c : small_corpus()) {
    for (ScpConstants k : {ScpConstants{0, 0}, ScpConstants{1, 0}, ScpConstants{0, 1}, ScpConstants{2, 0}}) {
      auto rep = check_scp(c, k, all);
      auto [b1, b2] = brute_scp(c, k);
      auto [i1, i2] = scp_triples(rep);
      EXPECT_EQ(i1, b1) << "condition 1, A=" << k.A << " R=" << k.R;
      EXPECT_EQ(i2, b2) << "condition 2, A=" << k.A << " R=" << k.R;
    }
  }
}

TEST(Scp, LengthBoundIsMonotone) {
  auto c = grid_complex(0, 0, 4, 3, false);
  ScpOptions o;
  o.max_violations = 1u << 20;
  std::size_t prev = 0;
  for (int b = 1; b <= 5; ++b) {
    o.length_bound = b;
    auto rep = check_scp(c, {0, 0}, o);
    std::size_t total = rep.condition1_violations + rep.condition2_violations;
    EXPECT_GE(total, prev);
    prev = total;
  }
  EXPECT_GT(prev, 0u);
}

// -------------------------------------------------------------- angle of view

namespace {

Extended brute_aov(const PolygonalComplex& c, AovReading reading) {
  Extended best(0);
  for (VertexId z = 0; z < c.num_vertices(); ++z) {
    for (VertexId x = 0; x < c.num_vertices(); ++x) {
      for (VertexId y = 0; y < c.num_vertices(); ++y) {
        if (x == z || y == z || x == y) continue;
        auto iv = interval(c, x, y);
        bool in_interval = std::count(iv.begin(), iv.end(), z) > 0;
        bool qualifies = reading == AovReading::kOutsideInterval ? !in_interval : !brute_every_geodesic_contains(c, x, y, z);
        if (qualifies) best = std::max(best, vertex_angle(c, z, x, y));
      }
    }
  }
  return best;
}

}  // namespace

TEST(AngleOfView, TreesAreZero) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto t = random_tree(5 + 5 * (s % 10), s);
    EXPECT_EQ(measure_angle_of_view(t).value, Extended(0));
  }
}

TEST(AngleOfView, GridAtMostTwo) {
  auto g = grid_complex(0, 0, 7, 7);
  auto rep = measure_angle_of_view(g);
  EXPECT_LE(rep.value, Extended(2));
  EXPECT_EQ(rep.value, Extended(1));
  ASSERT_TRUE(rep.witness.has_value());
  auto [x, y, z] = *rep.witness;
  EXPECT_EQ(vertex_angle(g, z, x, y), rep.value);
  EXPECT_FALSE(every_geodesic_contains(g, DistanceTable(g), x, y, z));
}

TEST(AngleOfView, SingleSquareReadings) {
  auto sq = single_square();
  EXPECT_EQ(measure_angle_of_view(sq).value, Extended(1));
  auto literal = measure_angle_of_view(sq, AovReading::kOutsideInterval);
  EXPECT_EQ(literal.value, Extended(0));
  EXPECT_GT(literal.qualifying_triples, 0u);
}

TEST(AngleOfView, LiteralReadingBreaksImplicationOnSquare) {
  // Under the interval reading A = 0 and SCP(0, 0) genuinely fails: the
  // segment p-s-q has angle 1 at s while p-t-q avoids s.
  auto sq = single_square();
  auto rep = cross_check_aov_scp(sq, AovReading::kOutsideInterval);
  EXPECT_FALSE(rep.ok);
  EXPECT_GT(rep.scp->condition2_violations, 0u);
  EXPECT_TRUE(cross_check_aov_scp(sq).ok);
}

TEST(AngleOfView, MatchesBruteForce) {
  for (const auto& c : small_corpus()) {
    if (c.num_vertices() > 16) continue;
    for (auto reading : {AovReading::kAvoidsSomeGeodesic, AovReading::kOutsideInterval}) {
      EXPECT_EQ(measure_angle_of_view(c, reading).value, brute_aov(c, reading));
    }
  }
}

TEST(AngleOfView, DisconnectedRejected) {
  PolygonalComplex c;
  c.add_vertex("a");
  c.add_vertex("b");
  try {
    measure_angle_of_view(c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(CrossCheck, GridsTreesSquareTrees) {
  EXPECT_TRUE(cross_check_aov_scp(centered_grid(3)).ok);
  for (std::uint64_t s = 0; s < 6; ++s) EXPECT_TRUE(cross_check_aov_scp(random_tree(40, s)).ok);
  for (std::uint64_t s = 1; s <= 12; ++s) {
    auto rep = cross_check_aov_scp(random_square_tree(6 + s, s));
    EXPECT_TRUE(rep.ok) << "seed " << s << " A=" << rep.aov.value;
  }
}

// --------------------------------------------------------- local criterion

TEST(BigAngle, TreeTranslationAxis) {
  auto t = comb(15);
  auto axis = labelled_path(t, "a", 15);
  auto res = assemble_checkpoints_from_big_angle(t, axis, comb_shift(t), t.vertex("a7"), Extended(1000), 0);
  EXPECT_TRUE(res.angle.is_infinite());
  EXPECT_EQ(res.system.checkpoints.size(), 15u);
  EXPECT_EQ(res.system.indices.front(), -7);
  EXPECT_TRUE(res.report.ok());
  EXPECT_GT(res.report.checks, 0u);
}

TEST(BigAngle, SquareChainArticulations) {
  auto c = square_chain(8);
  std::vector<VertexId> axis{c.vertex("c0")};
  for (int i = 1; i <= 8; ++i) {
    axis.push_back(c.vertex("s" + std::to_string(i)));
    axis.push_back(c.vertex("c" + std::to_string(i)));
  }
  auto res = assemble_checkpoints_from_big_angle(c, axis, chain_shift(c), c.vertex("c4"), Extended(0), 0);
  EXPECT_TRUE(res.angle.is_infinite());
  EXPECT_TRUE(res.report.ok());
}

TEST(BigAngle, GridAxisAngleTooSmall) {
  auto g = centered_grid(3);
  std::vector<VertexId> axis;
  for (long i = -3; i <= 3; ++i) axis.push_back(g.vertex(grid_label(i, 0)));
  try {
    assemble_checkpoints_from_big_angle(g, axis, grid_shift(g, 1, 0), g.vertex(grid_label(0, 0)), Extended(2), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAngleTooSmall);
  }
}

TEST(BigAngle, UnfilledLadderLacksConcatenation) {
  // Angle is infinite along the bottom row, but the ladder has no SCP, so
  // singleton checkpoints are bypassed along the top row.
  auto c = ladder_complex(10, false);
  std::vector<VertexId> axis;
  for (long i = 0; i < 10; ++i) axis.push_back(c.vertex(grid_label(i, 0)));
  auto res = assemble_checkpoints_from_big_angle(c, axis, grid_shift(c, 1, 0), c.vertex(grid_label(5, 0)), Extended(0), 0);
  EXPECT_TRUE(res.angle.is_infinite());
  EXPECT_FALSE(res.report.ok());
  EXPECT_FALSE(check_scp(c, {0, 0}).ok());
}

TEST(BigAngle, NonGeodesicAxisRejected) {
  auto c = glued_squares();
  std::vector<VertexId> axis{c.vertex("(0,0)"), c.vertex("(1,0)"), c.vertex("(1,1)"), c.vertex("(0,1)")};
  try {
    assemble_checkpoints_from_big_angle(c, axis, identity_map(c), c.vertex("(1,0)"), Extended(0), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotGeodesic);
  }
}

// ------------------------------------------------------- coarse stabilizer

namespace {

std::vector<VertexMap> dihedral(const PolygonalComplex& g, long side) {
  std::vector<VertexMap> out;
  for (int k = 0; k < 8; ++k) {
    out.push_back(map_by_label(g, [&](const std::string& l) -> std::optional<std::string> {
      long x = 0, y = 0;
      std::sscanf(l.c_str(), "(%ld,%ld)", &x, &y);
      for (int r = 0; r < k % 4; ++r) std::tie(x, y) = std::pair{side - 1 - y, x};
      if (k >= 4) x = side - 1 - x;
      return grid_label(x, y);
    }));
  }
  return out;
}

}  // namespace

TEST(CoarseStabilizer, DihedralGroupOnGrid) {
  auto g = grid_complex(0, 0, 5, 5);
  auto syms = dihedral(g, 5);
  for (const auto& s : syms) EXPECT_TRUE(is_automorphism(g, s));
  VertexId x = g.vertex("(0,0)"), y = g.vertex("(4,0)");
  for (int r = 0; r <= 8; ++r) {
    std::vector<std::size_t> expect;
    for (std::size_t k = 0; k < syms.size(); ++k) {
      auto [ax, ay] = coords(g, x);
      auto [bx, by] = coords(g, *syms[k][x]);
      auto [cx, cy] = coords(g, y);
      auto [dx, dy] = coords(g, *syms[k][y]);
      if (std::abs(ax - bx) + std::abs(ay - by) <= r && std::abs(cx - dx) + std::abs(cy - dy) <= r) expect.push_back(k);
    }
    EXPECT_EQ(coarse_stabilizer(g, syms, x, y, r), expect) << "r=" << r;
  }
  EXPECT_EQ(coarse_stabilizer(g, syms, x, y, 0), std::vector<std::size_t>{0});
  EXPECT_EQ(coarse_stabilizer(g, syms, x, y, 8).size(), 8u);
}

TEST(CoarseStabilizer, IdentityAlwaysReturned) {
  auto c = random_square_tree(6, 2);
  std::vector<VertexMap> maps{identity_map(c)};
  EXPECT_EQ(coarse_stabilizer(c, maps, 0, c.num_vertices() - 1, 0).size(), 1u);
}

TEST(CoarseStabilizer, RejectsNonAutomorphism) {
  auto g = grid_complex(0, 0, 3, 3);
  std::vector<VertexMap> maps{grid_shift(g, 1, 0)};
  try {
    coarse_stabilizer(g, maps, 0, 1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}
