#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "ubercontract/checkers/violation.hpp"

namespace ubercontract {

struct ScpConstants {
  std::int64_t A = 0;
  std::int64_t R = 0;
};

struct ScpOptions {
  // Longest geodesic piece considered; negative means the diameter.
  int length_bound = -1;
  std::size_t max_violations = 1000;
  // Condition 2 enumerates geodesic segments; give up beyond this many.
  std::size_t max_segments = 20'000'000;
};

struct ScpReport {
  std::vector<Violation> violations;
  std::size_t condition1_violations = 0;
  std::size_t condition2_violations = 0;
  std::size_t segments = 0;
  int length_bound = 0;

  bool ok() const { return condition1_violations == 0 && condition2_violations == 0; }
};

namespace detail {

using Bits = boost::dynamic_bitset<>;

inline bool angle_exceeds(int raw, std::int64_t a) { return raw == kUnreachable || raw > a; }

/// Projection data for one side of a growing geodesic segment: nearest
/// distance among positions more than R from v, and among the others.
struct SideState {
  std::vector<int> mid;
  std::vector<int> far;

  int near(VertexId x) const { return std::min(mid[x], far[x]); }
};

inline constexpr int kNone = std::numeric_limits<int>::max();

inline void absorb(const DistanceTable& d, SideState& s, VertexId w, bool is_far) {
  for (VertexId x = 0; x < d.size(); ++x) {
    int dx = d.at(x, w);
    if (dx == kUnreachable) continue;
    int& slot = is_far ? s.far[x] : s.mid[x];
    slot = std::min(slot, dx);
  }
}

class ScpChecker {
 public:
  ScpChecker(const PolygonalComplex& c, ScpConstants k, const ScpOptions& opts)
      : c_(c), k_(k), opts_(opts), d_(c), angles_(c), n_(c.num_vertices()) {
    if (k.A < 0 || k.R < 0) throw Error(ErrorCode::kInvalidArgument, "SCP constants must be non-negative");
    rep_.length_bound = opts.length_bound < 0 ? d_.diameter() : opts.length_bound;
  }

  ScpReport run() {
    for (VertexId v = 0; v < n_; ++v) {
      nb_ = c_.neighbors(v);
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t i = 0; i < nb_.size(); ++i) {
        for (std::size_t j = i + 1; j < nb_.size(); ++j) {
          if (angle_exceeds(angles_.raw_by_index(v, i, j), k_.A)) pairs.emplace_back(i, j);
        }
      }
      if (pairs.empty()) continue;
      condition1(v, pairs);
      condition2(v, pairs);
    }
    return std::move(rep_);
  }

 private:
  void record(Violation v, std::size_t& counter) {
    ++counter;
    if (rep_.violations.size() < opts_.max_violations) rep_.violations.push_back(std::move(v));
  }

  Extended angle_at(VertexId v, std::size_t i, std::size_t j) const { return to_extended(angles_.raw_by_index(v, i, j)); }

  // Geodesics v -> x starting with the edge to nb_i, concatenated with
  // v -> y starting with nb_j, must be geodesic.
  void condition1(VertexId v, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    const int bound = rep_.length_bound;
    std::vector<Bits> reach(nb_.size(), Bits(n_));
    for (std::size_t i = 0; i < nb_.size(); ++i) {
      for (VertexId x = 0; x < n_; ++x) {
        int dx = d_.at(v, x);
        if (dx >= 1 && dx <= bound && d_.at(nb_[i], x) == dx - 1) reach[i].set(x);
      }
    }
    std::vector<Bits> through(n_);
    auto through_v = [&](VertexId x) -> const Bits& {
      Bits& b = through[x];
      if (b.empty()) {
        b.resize(n_);
        for (VertexId y = 0; y < n_; ++y) {
          if (d_.connected(x, y) && d_.at(x, v) + d_.at(v, y) == d_.at(x, y)) b.set(y);
        }
      }
      return b;
    };
    for (auto [i, j] : pairs) {
      for (auto x = reach[i].find_first(); x != Bits::npos; x = reach[i].find_next(x)) {
        Bits bad = reach[j] - through_v(x);
        for (auto y = bad.find_first(); y != Bits::npos; y = bad.find_next(y)) {
          Violation w;
          w.condition = "scp_concatenation";
          w.vertices = {v, x, y};
          auto g1 = table_geodesic(c_, d_, nb_[i], x);
          auto g2 = table_geodesic(c_, d_, nb_[j], y);
          g1.insert(g1.begin(), v);
          g2.insert(g2.begin(), v);
          w.paths = {g1, g2};
          w.measured = {{"angle", angle_at(v, i, j)},
                        {"d(x,y)", Extended(d_.at(x, y))},
                        {"concatenated_length", Extended(d_.at(v, x) + d_.at(v, y))}};
          record(std::move(w), rep_.condition1_violations);
        }
      }
    }
  }

  // Geodesic rays from v of length <= bound starting with nb_[first].
  void rays(VertexId v, std::size_t first, std::vector<std::vector<VertexId>>& out) const {
    std::vector<VertexId> path{v, nb_[first]};
    extend_ray(v, path, out);
  }

  void extend_ray(VertexId v, std::vector<VertexId>& path, std::vector<std::vector<VertexId>>& out) const {
    out.push_back(path);
    const int len = static_cast<int>(path.size()) - 1;
    if (len >= rep_.length_bound) return;
    for (VertexId w : c_.neighbors(path.back())) {
      if (d_.at(v, w) != len + 1) continue;
      path.push_back(w);
      extend_ray(v, path, out);
      path.pop_back();
    }
  }

  // Every geodesic segment gamma through v with angle > A at v; x, y whose
  // projections on gamma all lie on opposite sides, more than R from v.
  void condition2(VertexId v, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    const std::int64_t R = k_.R;
    if (2 * R + 2 > rep_.length_bound) return;
    std::vector<Bits> through(n_);
    auto through_v = [&](VertexId x) -> const Bits& {
      Bits& b = through[x];
      if (b.empty()) {
        b.resize(n_);
        for (VertexId y = 0; y < n_; ++y) {
          if (every_geodesic_contains(c_, d_, x, y, v)) b.set(y);
        }
      }
      return b;
    };
    for (auto [i, j] : pairs) {
      std::vector<std::vector<VertexId>> left;
      rays(v, i, left);
      for (const auto& lr : left) {
        const int la = static_cast<int>(lr.size()) - 1;
        if (la <= R || la + R + 1 > rep_.length_bound) continue;
        SideState ls{std::vector<int>(n_, kNone), std::vector<int>(n_, kNone)};
        for (std::size_t p = 0; p < lr.size(); ++p) absorb(d_, ls, lr[p], static_cast<std::int64_t>(p) > R);
        std::vector<VertexId> right{v, nb_[j]};
        SideState rs{std::vector<int>(n_, kNone), std::vector<int>(n_, kNone)};
        segment_search(v, i, j, lr, right, ls, rs, through_v);
      }
    }
  }

  template <typename Through>
  void segment_search(VertexId v, std::size_t i, std::size_t j, const std::vector<VertexId>& lr, std::vector<VertexId>& right,
                      const SideState& ls, SideState rs, Through& through_v) {
    const int la = static_cast<int>(lr.size()) - 1;
    const int lb = static_cast<int>(right.size()) - 1;
    if (d_.at(lr.back(), right.back()) != la + lb) return;
    if (++rep_.segments > opts_.max_segments) {
      throw Error(ErrorCode::kBudgetExceeded, "more than " + std::to_string(opts_.max_segments) + " geodesic segments");
    }
    absorb(d_, rs, right.back(), lb > k_.R);
    if (la > k_.R && lb > k_.R) judge_segment(v, i, j, lr, right, ls, rs, through_v);
    if (la + lb >= rep_.length_bound) return;
    for (VertexId w : c_.neighbors(right.back())) {
      if (d_.at(v, w) != lb + 1) continue;
      right.push_back(w);
      segment_search(v, i, j, lr, right, ls, rs, through_v);
      right.pop_back();
    }
  }

  template <typename Through>
  void judge_segment(VertexId v, std::size_t i, std::size_t j, const std::vector<VertexId>& lr,
                     const std::vector<VertexId>& right, const SideState& ls, const SideState& rs, Through& through_v) {
    Bits left_far(n_), right_far(n_);
    for (VertexId x = 0; x < n_; ++x) {
      int m = std::min(ls.near(x), rs.near(x));
      if (m == kNone) continue;
      if (ls.far[x] == m && ls.mid[x] > m && rs.near(x) > m) left_far.set(x);
      if (rs.far[x] == m && rs.mid[x] > m && ls.near(x) > m) right_far.set(x);
    }
    if (right_far.none()) return;
    for (auto x = left_far.find_first(); x != Bits::npos; x = left_far.find_next(x)) {
      Bits bad = right_far - through_v(x);
      for (auto y = bad.find_first(); y != Bits::npos; y = bad.find_next(y)) {
        Violation w;
        w.condition = "scp_separation";
        w.vertices = {v, x, y};
        std::vector<VertexId> gamma(lr.rbegin(), lr.rend());
        gamma.insert(gamma.end(), right.begin() + 1, right.end());
        std::vector<bool> blocked(n_, false);
        blocked[v] = true;
        w.paths = {gamma};
        if (auto p = geodesic_dag(c_, x, y).path_avoiding(blocked)) w.paths.push_back(*p);
        w.measured = {{"angle", angle_at(v, i, j)}, {"d(x,gamma)", Extended(std::min(ls.near(x), rs.near(x)))},
                      {"d(y,gamma)", Extended(std::min(ls.near(y), rs.near(y)))}, {"d(x,y)", Extended(d_.at(x, y))}};
        record(std::move(w), rep_.condition2_violations);
      }
    }
  }

  const PolygonalComplex& c_;
  ScpConstants k_;
  ScpOptions opts_;
  DistanceTable d_;
  AngleTable angles_;
  std::size_t n_;
  std::vector<VertexId> nb_;
  ScpReport rep_;
};

}  // namespace detail

/// Strong Concatenation Property with constants (A, R), exhaustive over
/// geodesic pieces up to the length bound.
inline ScpReport check_scp(const PolygonalComplex& c, ScpConstants k, const ScpOptions& opts = {}) {
  return detail::ScpChecker(c, k, opts).run();
}

enum class AovReading {
  // z avoids at least one geodesic from x to y.
  kAvoidsSomeGeodesic,
  // z lies on no geodesic from x to y.
  kOutsideInterval,
};

struct AovReport {
  Extended value{0};
  std::optional<std::array<VertexId, 3>> witness;  // x, y, z
  std::size_t qualifying_triples = 0;
};

inline void require_connected(const PolygonalComplex& c) {
  std::size_t count = 0;
  connected_components(c, &count);
  if (count > 1) throw Error(ErrorCode::kInvalidArgument, "complex is not connected");
}

/// Largest vertex angle at z between x and y over qualifying triples.
inline AovReport measure_angle_of_view(const PolygonalComplex& c, AovReading reading = AovReading::kAvoidsSomeGeodesic) {
  require_connected(c);
  const std::size_t n = c.num_vertices();
  DistanceTable d(c);
  AngleTable angles(c);
  AovReport rep;
  for (VertexId z = 0; z < n; ++z) {
    const auto nb = c.neighbors(z);
    std::vector<std::vector<std::size_t>> firsts(n);
    for (VertexId x = 0; x < n; ++x) {
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (x != z && d.at(nb[i], x) == d.at(z, x) - 1) firsts[x].push_back(i);
      }
    }
    for (VertexId x = 0; x < n; ++x) {
      if (x == z) continue;
      for (VertexId y = x + 1; y < n; ++y) {
        if (y == z) continue;
        bool qualifies = reading == AovReading::kOutsideInterval ? d.at(x, z) + d.at(z, y) != d.at(x, y)
                                                                 : !every_geodesic_contains(c, d, x, y, z);
        if (!qualifies) continue;
        ++rep.qualifying_triples;
        Extended best = Extended::infinity();
        for (std::size_t a : firsts[x]) {
          for (std::size_t b : firsts[y]) best = std::min(best, to_extended(angles.raw_by_index(z, a, b)));
        }
        if (!rep.witness || best > rep.value) {
          rep.value = best;
          rep.witness = std::array<VertexId, 3>{x, y, z};
        }
      }
    }
  }
  return rep;
}

struct CrossCheckReport {
  AovReport aov;
  std::optional<ScpConstants> constants;  // unset when the angle of view is infinite
  std::optional<ScpReport> scp;
  bool ok = true;
};

/// Angle of view A implies SCP with constants (3A, 0).
inline CrossCheckReport cross_check_aov_scp(const PolygonalComplex& c, AovReading reading = AovReading::kAvoidsSomeGeodesic,
                                            const ScpOptions& opts = {}) {
  CrossCheckReport rep;
  rep.aov = measure_angle_of_view(c, reading);
  if (rep.aov.value.is_infinite()) return rep;
  rep.constants = ScpConstants{3 * rep.aov.value.value(), 0};
  rep.scp = check_scp(c, *rep.constants, opts);
  rep.ok = rep.scp->ok();
  return rep;
}

}  // namespace ubercontract
