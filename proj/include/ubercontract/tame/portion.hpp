#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "ubercontract/complex/builders.hpp"
#include "ubercontract/complex/io.hpp"
#include "ubercontract/tame/stabilizer.hpp"
#include "ubercontract/tame/vertices.hpp"

namespace ubercontract::tame {

/// Finite subcomplex of the square complex of the tame group, one square per
/// generating element, vertices merged by orbit equality.
struct TamePortion {
  PolygonalComplex complex;
  std::vector<OrbitVertex> vertices;  // indexed by VertexId
  std::vector<std::string> keys;      // orbit_key of each vertex
  std::vector<TameElement> elements;
  std::string provenance;  // how the element list was produced

  std::optional<VertexId> find(const OrbitVertex& v) const {
    auto it = index.find(orbit_key(v));
    if (it == index.end()) return std::nullopt;
    return it->second;
  }

  std::unordered_map<std::string, VertexId> index;
};

inline constexpr std::size_t kDefaultVertexCap = 20000;

namespace detail {

class PortionBuilder {
 public:
  explicit PortionBuilder(std::size_t vertex_cap) : cap_(vertex_cap) {}

  void add_square(const GroundMap& f) { add_square(square_vertices(f)); }

  void add_square(const std::array<OrbitVertex, 4>& corners) {
    std::array<VertexId, 4> ids{};
    for (std::size_t i = 0; i < 4; ++i) ids[i] = intern(corners[i]);
    for (std::size_t i = 0; i < 4; ++i) p_.complex.add_edge(ids[i], ids[(i + 1) % 4]);
    std::vector<std::string> cyc;
    for (VertexId v : ids) cyc.push_back(p_.keys[v]);
    if (squares_.insert(::ubercontract::detail::canonical_cycle(cyc)).second) {
      p_.complex.add_polygon({ids.begin(), ids.end()});
    }
  }

  TamePortion& portion() { return p_; }

 private:
  VertexId intern(const OrbitVertex& v) {
    std::string key = orbit_key(v);
    if (auto it = p_.index.find(key); it != p_.index.end()) return it->second;
    if (p_.vertices.size() >= cap_) {
      throw Error(ErrorCode::kBudgetExceeded, "portion exceeds the vertex cap of " + std::to_string(cap_));
    }
    VertexId id = p_.complex.add_vertex(canonical_label(v));
    p_.vertices.push_back(v);
    p_.keys.push_back(key);
    p_.index.emplace(std::move(key), id);
    return id;
  }

  std::size_t cap_;
  TamePortion p_;
  std::set<std::vector<std::string>> squares_;
};

/// Appends e to out unless an equal element (same forward map) is present.
inline void push_unique(std::vector<TameElement>& out, std::set<std::string>& seen, TameElement e) {
  if (seen.insert(e.forward().to_string()).second) out.push_back(std::move(e));
}

}  // namespace detail

inline TamePortion build_from_elements(const std::vector<TameElement>& elems, std::size_t vertex_cap = kDefaultVertexCap) {
  detail::PortionBuilder b(vertex_cap);
  for (const auto& e : elems) b.add_square(e.forward());
  TamePortion p = std::move(b.portion());
  p.elements = elems;
  p.provenance = "explicit element list (" + std::to_string(elems.size()) + ")";
  return p;
}

/// How the word ball is turned into a portion.
enum class BallCompletion {
  kNone,  // squares of the ball elements only
  kStar,  // translates of the squares around the base vertices
};

struct BallOptions {
  bool include_inverses = true;
  BallCompletion completion = BallCompletion::kStar;
  std::size_t vertex_cap = kDefaultVertexCap;
  int max_word_length = 6;
  // Total terms allowed in the four components of a ball element; g^3 alone
  // has 16341, which makes the completion impractically slow.
  std::size_t term_cap = 5000;
};

/// Distinct products of at most `length` letters from the alphabet, in
/// breadth-first order.
inline std::vector<TameElement> word_ball(const std::vector<TameElement>& alphabet, int length) {
  std::vector<TameElement> out;
  std::set<std::string> seen;
  detail::push_unique(out, seen, TameElement::identity());
  std::size_t layer_begin = 0;
  for (int len = 1; len <= length; ++len) {
    std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (const auto& a : alphabet) detail::push_unique(out, seen, out[i] * a);
    }
    layer_begin = layer_end;
  }
  return out;
}

/// Elements whose squares make up the neighbourhood of the base square used
/// by the star completion: the 32 signed permutations M, and M ∘ e for e a
/// conjugate N ∘ s^±1 ∘ N^-1 of an elementary letter s of the generators.
inline std::vector<TameElement> star_elements(const std::vector<TameElement>& gens) {
  std::vector<TameElement> perms;
  for (const auto& m : orthogonal_signed_permutations()) {
    perms.push_back(TameElement::from_generator(Generator::orthogonal(m)));
  }
  std::vector<Generator> letters;
  for (const auto& g : gens) {
    for (const auto& l : g.word()) {
      if (l.generator.is_elementary() && std::find(letters.begin(), letters.end(), l.generator) == letters.end()) {
        letters.push_back(l.generator);
      }
    }
  }
  std::vector<TameElement> conj;
  std::set<std::string> seen_conj;
  for (const auto& s : letters) {
    for (bool inv : {false, true}) {
      TameElement e = TameElement::from_generator(s, inv);
      for (const auto& n : perms) detail::push_unique(conj, seen_conj, n * e * n.inverse());
    }
  }
  std::vector<TameElement> out;
  std::set<std::string> seen;
  for (const auto& m : perms) detail::push_unique(out, seen, m);
  for (const auto& m : perms) {
    for (const auto& e : conj) detail::push_unique(out, seen, m * e);
  }
  return out;
}

/// Portion spanned by the word ball of radius `length`. With the star
/// completion each ball element h contributes the squares of k ∘ h for k in
/// star_elements(gens), i.e. the translate by h^-1 of the squares around
/// the base square.
inline TamePortion enumerate_ball(const std::vector<TameElement>& gens, int length, const BallOptions& opts = {}) {
  if (length < 0) throw Error(ErrorCode::kInvalidArgument, "negative word length");
  if (length > opts.max_word_length) {
    throw Error(ErrorCode::kBudgetExceeded, "word length " + std::to_string(length) + " exceeds the bound " +
                                                std::to_string(opts.max_word_length));
  }
  std::vector<TameElement> alphabet = gens;
  if (opts.include_inverses) {
    for (const auto& g : gens) alphabet.push_back(g.inverse());
  }
  std::vector<TameElement> ball = word_ball(alphabet, length);
  std::string provenance = "word ball of length " + std::to_string(length) + " over " +
                           std::to_string(gens.size()) + " generator(s)" +
                           (opts.include_inverses ? " and their inverses" : "") + ", " + std::to_string(ball.size()) +
                           " element(s)";
  // Without generators there is nothing to translate: the identity square.
  if (opts.completion == BallCompletion::kNone || gens.empty()) {
    TamePortion p = build_from_elements(ball, opts.vertex_cap);
    p.provenance = provenance;
    return p;
  }
  // Only the completion composes every star square with h, so only it is capped.
  for (const auto& h : ball) {
    std::size_t terms = 0;
    for (const auto& c : h.forward().components) terms += c.size();
    if (terms > opts.term_cap) {
      throw Error(ErrorCode::kBudgetExceeded, "a ball element has " + std::to_string(terms) +
                                                  " terms, above the term cap of " + std::to_string(opts.term_cap));
    }
  }
  // Distinct star squares once, then h^-1 applied to their distinct corners:
  // h^-1·[f] = [f ∘ h] is the corner of the square of k ∘ h.
  std::vector<std::array<OrbitVertex, 4>> star_squares;
  std::vector<OrbitVertex> corners;
  std::vector<std::array<std::size_t, 4>> corner_ids;
  {
    std::map<std::string, std::size_t> corner_index;
    std::set<std::array<std::size_t, 4>> seen;
    for (const auto& k : star_elements(gens)) {
      auto sq = square_vertices(k.forward());
      std::array<std::size_t, 4> ids{};
      for (std::size_t i = 0; i < 4; ++i) {
        auto [it, fresh] = corner_index.emplace(orbit_key(sq[i]), corners.size());
        if (fresh) corners.push_back(sq[i]);
        ids[i] = it->second;
      }
      if (seen.insert(ids).second) corner_ids.push_back(ids);
    }
  }
  detail::PortionBuilder b(opts.vertex_cap);
  for (const auto& h : ball) {
    TameElement hinv = h.inverse();
    std::vector<OrbitVertex> moved;
    moved.reserve(corners.size());
    for (const auto& v : corners) moved.push_back(act_on_vertex(hinv, v));
    for (const auto& ids : corner_ids) b.add_square({moved[ids[0]], moved[ids[1]], moved[ids[2]], moved[ids[3]]});
  }
  TamePortion p = std::move(b.portion());
  p.elements = ball;
  p.provenance = provenance + ", each carrying the " + std::to_string(corner_ids.size()) +
                 " squares around the base square";
  return p;
}

inline Json portion_to_json(const TamePortion& p) {
  Json j;
  j["provenance"] = p.provenance;
  j["vertices"] = Json::array();
  for (VertexId v = 0; v < p.vertices.size(); ++v) {
    Json polys = Json::array();
    for (const auto& f : vertex_polys(p.vertices[v])) polys.push_back(f.to_string());
    j["vertices"].push_back({{"id", v},
                             {"type", vertex_type(p.vertices[v])},
                             {"label", p.complex.label(v)},
                             {"representative", polys}});
  }
  j["edges"] = Json::array();
  for (auto [u, v] : p.complex.edges()) j["edges"].push_back({u, v});
  j["squares"] = Json::array();
  for (const auto& s : p.complex.polygons()) j["squares"].push_back(s);
  j["elements"] = Json::array();
  for (const auto& e : p.elements) j["elements"].push_back(e.word_string());
  return j;
}

// ---------------------------------------------------------------------------
// Grid verification.

struct GridReport {
  std::string v_label, gv_label, g2v_label;
  std::size_t interval_vertices = 0, interval_edges = 0, interval_squares = 0;
  int d_v_g2v = kUnreachable, d_v_gv = kUnreachable, d_gv_g2v = kUnreachable;
  bool is_grid = false;            // interval is a 4x4 array of squares
  bool isometric = false;          // portion distances equal grid distances
  bool gv_at_center = false;
  bool action_consistent = false;  // g·v = gv and g·gv = g²v by label
  // grid[i][j] is the label at coordinates (i, j), v at (0, 0).
  std::vector<std::vector<std::string>> grid;
  std::array<int, 2> gv_position{-1, -1};
  std::string portion_note;
  std::size_t portion_vertices = 0, portion_squares = 0;

  bool ok() const {
    return is_grid && isometric && gv_at_center && action_consistent && d_v_g2v == 8 && interval_vertices == 25 &&
           interval_edges == 40 && interval_squares == 16;
  }
};

/// Recovers interval(v, g²v) inside the portion and checks that it is a 4x4
/// grid of squares with gv at its centre. All conclusions are relative to the
/// portion: squares outside it could add geodesics.
inline GridReport verify_grid(const TamePortion& p, const OrbitVertex& v, const TameElement& g) {
  constexpr int kSide = 4;
  OrbitVertex gv = act_on_vertex(g, v);
  OrbitVertex g2v = act_on_vertex(g, gv);
  auto iv = p.find(v), igv = p.find(gv), ig2v = p.find(g2v);
  std::string missing;
  if (!iv) missing += " v=" + canonical_label(v);
  if (!ig2v) missing += " g^2v=" + canonical_label(g2v);
  if (!missing.empty()) throw Error(ErrorCode::kVerticesMissing, "portion lacks" + missing);

  const auto& c = p.complex;
  GridReport r;
  r.v_label = c.label(*iv);
  r.gv_label = canonical_label(gv);
  r.g2v_label = c.label(*ig2v);
  r.portion_vertices = c.num_vertices();
  r.portion_squares = c.num_polygons();
  r.portion_note = "relative to the enumerated portion (" + p.provenance + ", " + std::to_string(c.num_vertices()) +
                   " vertices, " + std::to_string(c.num_polygons()) +
                   " squares); v = " + r.v_label + " is the working choice of base vertex";
  r.action_consistent = igv.has_value() && p.find(act_on_vertex(g, gv)) == ig2v;

  auto dv = bfs_distances(c, *iv);
  auto dw = bfs_distances(c, *ig2v);
  r.d_v_g2v = dv[*ig2v];
  if (igv) {
    r.d_v_gv = dv[*igv];
    r.d_gv_g2v = dw[*igv];
  }
  if (r.d_v_g2v == kUnreachable) return r;

  std::vector<VertexId> inter;
  for (VertexId x = 0; x < c.num_vertices(); ++x) {
    if (dv[x] != kUnreachable && dw[x] != kUnreachable && dv[x] + dw[x] == r.d_v_g2v) inter.push_back(x);
  }
  std::vector<char> in(c.num_vertices(), 0);
  for (VertexId x : inter) in[x] = 1;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (auto [a, b] : c.edges()) {
    if (in[a] && in[b]) edges.emplace_back(a, b);
  }
  std::vector<const std::vector<VertexId>*> squares;
  for (const auto& s : c.polygons()) {
    if (std::all_of(s.begin(), s.end(), [&](VertexId x) { return in[x] != 0; })) squares.push_back(&s);
  }
  r.interval_vertices = inter.size();
  r.interval_edges = edges.size();
  r.interval_squares = squares.size();
  if (r.d_v_g2v != 2 * kSide || inter.size() != (kSide + 1) * (kSide + 1)) return r;

  // A second corner a with d(v, a) = d(a, g²v) = 4 of degree 2 in the
  // interval; coordinates then follow from d(x, v) = i + j and
  // d(x, a) = (4 - i) + j.
  std::map<VertexId, int> degree;
  for (auto [a, b] : edges) {
    ++degree[a];
    ++degree[b];
  }
  std::optional<VertexId> corner;
  for (VertexId x : inter) {
    if (dv[x] == kSide && dw[x] == kSide && degree[x] == 2) {
      corner = x;
      break;
    }
  }
  if (!corner) return r;
  auto da = bfs_distances(c, *corner);
  std::map<VertexId, std::array<int, 2>> coord;
  std::vector<std::vector<std::optional<VertexId>>> at(kSide + 1, std::vector<std::optional<VertexId>>(kSide + 1));
  for (VertexId x : inter) {
    int s = dv[x] - da[x] + kSide, t = dv[x] + da[x] - kSide;
    if (s % 2 != 0 || t % 2 != 0) return r;
    int i = s / 2, j = t / 2;
    if (i < 0 || j < 0 || i > kSide || j > kSide || at[i][j]) return r;
    at[i][j] = x;
    coord[x] = {i, j};
  }
  bool grid = edges.size() == 2 * kSide * (kSide + 1) && squares.size() == kSide * kSide;
  for (auto [a, b] : edges) {
    auto [ia, ja] = coord[a];
    auto [ib, jb] = coord[b];
    if (std::abs(ia - ib) + std::abs(ja - jb) != 1) grid = false;
  }
  std::set<std::array<int, 2>> cells;
  for (const auto* s : squares) {
    int mi = kSide, mj = kSide, Mi = 0, Mj = 0;
    for (VertexId x : *s) {
      mi = std::min(mi, coord[x][0]);
      Mi = std::max(Mi, coord[x][0]);
      mj = std::min(mj, coord[x][1]);
      Mj = std::max(Mj, coord[x][1]);
    }
    if (Mi - mi != 1 || Mj - mj != 1) grid = false;
    cells.insert({mi, mj});
  }
  if (cells.size() != kSide * kSide) grid = false;
  r.is_grid = grid;

  r.grid.assign(kSide + 1, std::vector<std::string>(kSide + 1));
  for (int i = 0; i <= kSide; ++i) {
    for (int j = 0; j <= kSide; ++j) r.grid[i][j] = c.label(*at[i][j]);
  }
  if (igv && in[*igv]) r.gv_position = coord[*igv];
  r.gv_at_center = r.gv_position == std::array<int, 2>{kSide / 2, kSide / 2};

  bool iso = true;
  for (VertexId x : inter) {
    auto dx = bfs_distances(c, x);
    for (VertexId y : inter) {
      if (dx[y] != std::abs(coord[x][0] - coord[y][0]) + std::abs(coord[x][1] - coord[y][1])) iso = false;
    }
  }
  r.isometric = iso;
  return r;
}

inline Json grid_report_to_json(const GridReport& r) {
  return Json{{"ok", r.ok()},
              {"v", r.v_label},
              {"gv", r.gv_label},
              {"g2v", r.g2v_label},
              {"interval", {{"vertices", r.interval_vertices}, {"edges", r.interval_edges}, {"squares", r.interval_squares}}},
              {"distances",
               {{"v_g2v", to_extended(r.d_v_g2v).to_string()},
                {"v_gv", to_extended(r.d_v_gv).to_string()},
                {"gv_g2v", to_extended(r.d_gv_g2v).to_string()}}},
              {"is_grid", r.is_grid},
              {"isometric_in_portion", r.isometric},
              {"gv_position", r.gv_position},
              {"gv_at_center", r.gv_at_center},
              {"action_consistent", r.action_consistent},
              {"grid", r.grid},
              {"portion", {{"vertices", r.portion_vertices}, {"squares", r.portion_squares}}},
              {"note", r.portion_note}};
}

inline std::string grid_report_to_text(const GridReport& r) {
  std::string out;
  out += "v     = " + r.v_label + "\n";
  out += "gv    = " + r.gv_label + "\n";
  out += "g^2v  = " + r.g2v_label + "\n";
  out += "interval(v, g^2v): " + std::to_string(r.interval_vertices) + " vertices, " +
         std::to_string(r.interval_edges) + " edges, " + std::to_string(r.interval_squares) + " squares\n";
  out += "d(v, g^2v) = " + to_extended(r.d_v_g2v).to_string() + ", d(v, gv) = " + to_extended(r.d_v_gv).to_string() +
         ", d(gv, g^2v) = " + to_extended(r.d_gv_g2v).to_string() + "\n";
  out += std::string("4x4 grid: ") + (r.is_grid ? "yes" : "no") + ", isometric in portion: " +
         (r.isometric ? "yes" : "no") + ", gv at centre: " + (r.gv_at_center ? "yes" : "no") +
         ", g-action consistent: " + (r.action_consistent ? "yes" : "no") + "\n";
  for (std::size_t i = 0; i < r.grid.size(); ++i) {
    for (std::size_t j = 0; j < r.grid[i].size(); ++j) {
      out += "  (" + std::to_string(i) + "," + std::to_string(j) + ") " + r.grid[i][j] + "\n";
    }
  }
  out += "note: " + r.portion_note + "\n";
  out += std::string("result: ") + (r.ok() ? "PASS" : "FAIL") + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Link exploration.

struct LinkExplorationEntry {
  std::string element;
  std::optional<std::string> image;  // label of h·e, absent if outside the portion
  Extended distance_upper_bound = Extended::infinity();
};

struct LinkExplorationReport {
  std::string vertex;
  std::string base;
  std::vector<LinkExplorationEntry> entries;
  std::string note;
};

/// Link distances at v between a base link node e and its images h·e, for h
/// in the stabilizer of v. Distances in a finite portion only bound the true
/// link distance from above.
inline LinkExplorationReport partial_link_exploration(const TamePortion& p, const OrbitVertex& v,
                                                      const std::vector<TameElement>& stab_elems,
                                                      std::optional<OrbitVertex> base = std::nullopt) {
  auto iv = p.find(v);
  if (!iv) throw Error(ErrorCode::kVerticesMissing, "portion lacks " + canonical_label(v));
  for (std::size_t k = 0; k < stab_elems.size(); ++k) {
    if (!orbit_equal(act_on_vertex(stab_elems[k], v), v)) {
      throw Error(ErrorCode::kNotInStabilizer,
                  "element " + stab_elems[k].word_string() + " moves " + canonical_label(v));
    }
  }
  LinkGraph link = link_graph(p.complex, *iv);
  if (link.nodes.empty()) throw Error(ErrorCode::kInvalidArgument, canonical_label(v) + " has an empty link");
  VertexId e = link.nodes.front();
  if (base) {
    auto ib = p.find(*base);
    if (!ib || !link.node_index(*ib)) {
      throw Error(ErrorCode::kInvalidArgument, canonical_label(*base) + " is not a link node of " + canonical_label(v));
    }
    e = *ib;
  }
  auto de = link.distances_from(*link.node_index(e));
  LinkExplorationReport rep;
  rep.vertex = p.complex.label(*iv);
  rep.base = p.complex.label(e);
  rep.note = "link distances in the portion are upper bounds (" + p.provenance + ")";
  for (const auto& h : stab_elems) {
    LinkExplorationEntry entry;
    entry.element = h.word_string();
    auto img = p.find(act_on_vertex(h, p.vertices[e]));
    if (img) {
      entry.image = p.complex.label(*img);
      if (auto idx = link.node_index(*img)) entry.distance_upper_bound = to_extended(de[*idx]);
    }
    rep.entries.push_back(std::move(entry));
  }
  return rep;
}

inline Json link_report_to_json(const LinkExplorationReport& r) {
  Json j{{"vertex", r.vertex}, {"base", r.base}, {"note", r.note}, {"entries", Json::array()}};
  for (const auto& e : r.entries) {
    j["entries"].push_back({{"element", e.element},
                            {"image", e.image ? Json(*e.image) : Json(nullptr)},
                            {"distance_upper_bound", e.distance_upper_bound.to_string()}});
  }
  return j;
}

// ---------------------------------------------------------------------------
// Common stabilizer report.

struct StabilizerReport {
  ConstraintSet set;
  std::size_t identity_violations = 0;
  std::vector<Constraint> a2_violations;  // a = 2, other parameters at identity
};

inline StabilizerReport common_stabilizer_report() {
  StabilizerReport r;
  r.set = derive_common_stabilizer_constraints();
  r.identity_violations = violated_constraints(r.set, identity_params()).size();
  ParamValues a2 = identity_params();
  a2[0] = BigRational(2);
  r.a2_violations = violated_constraints(r.set, a2);
  return r;
}

namespace detail {

inline std::string zero_eq(const ParamCoeff& c) { return c.to_string() + " = 0"; }

inline std::string mirror_eq(const std::pair<std::size_t, ParamCoeff>& m) {
  return param_name(m.first) + " = " + (m.second.is_zero() ? std::string("0") : m.second.to_string());
}

inline std::string stabilizer_conclusion(const StabilizerSummary& s) {
  if (!s.finite) return "the parameter solution set was not shown to be finite";
  return "finite: at most " + std::to_string(s.solution_bound) + " parameter tuples (a, b) with c = d = 0";
}

}  // namespace detail

inline Json stabilizer_report_to_json(const StabilizerReport& r) {
  const auto& s = r.set.summary;
  Json j;
  j["equations"] = Json::array();
  for (const auto& c : r.set.constraints) {
    j["equations"].push_back({{"component", c.component + 1}, {"monomial", c.monomial.to_string()},
                              {"equation", detail::zero_eq(c.polynomial)}});
  }
  j["steps"] = Json::array();
  for (const auto& st : s.steps) {
    j["steps"].push_back({{"component", st.component + 1},
                          {"monomial", st.monomial.to_string()},
                          {"equation", detail::zero_eq(st.original)},
                          {"reduced", detail::zero_eq(st.reduced)},
                          {"conclusion", st.conclusion}});
  }
  j["summary"] = Json::array();
  for (const auto& rel : s.relations) j["summary"].push_back(rel.to_string());
  j["mirror"] = Json::array();
  for (const auto& m : s.mirror) j["mirror"].push_back(detail::mirror_eq(m));
  j["derived"] = Json::array();
  for (const auto& m : s.derived) j["derived"].push_back(detail::mirror_eq(m));
  j["unresolved"] = s.unresolved.size();
  j["finite"] = s.finite;
  j["solution_bound"] = s.solution_bound;
  j["conclusion"] = detail::stabilizer_conclusion(s);
  j["identity_violations"] = r.identity_violations;
  j["a2_violations"] = Json::array();
  for (const auto& c : r.a2_violations) {
    j["a2_violations"].push_back({{"component", c.component + 1}, {"monomial", c.monomial.to_string()}});
  }
  return j;
}

inline std::string stabilizer_report_to_text(const StabilizerReport& r) {
  const auto& s = r.set.summary;
  std::string out = "coefficient equations of g o f(a,b,c,d) = f(a',b',c',d') o g (" +
                    std::to_string(r.set.constraints.size()) + "):\n";
  for (const auto& c : r.set.constraints) {
    out += "  [" + constraint_location(c.component, c.monomial) + "] " + detail::zero_eq(c.polynomial) + "\n";
  }
  out += "successive isolation:\n";
  for (const auto& st : s.steps) {
    out += "  [" + constraint_location(st.component, st.monomial) + "] " + detail::zero_eq(st.reduced) + "  =>  " +
           st.conclusion + "\n";
  }
  out += "summary:";
  for (const auto& rel : s.relations) out += " " + rel.to_string() + ";";
  out += "\nmirror:";
  for (const auto& m : s.mirror) out += " " + detail::mirror_eq(m) + ";";
  if (!s.derived.empty()) {
    out += "\nderived:";
    for (const auto& m : s.derived) out += " " + detail::mirror_eq(m) + ";";
  }
  out += "\nconclusion: " + detail::stabilizer_conclusion(s) + "\n";
  out += "identity parameters: " + std::to_string(r.identity_violations) + " violated equation(s)\n";
  out += "a = 2: " + std::to_string(r.a2_violations.size()) + " violated equation(s)";
  if (!r.a2_violations.empty()) out += ", first at " + constraint_location(r.a2_violations[0].component, r.a2_violations[0].monomial);
  out += "\n";
  return out;
}

}  // namespace ubercontract::tame
