#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ubercontract/tame/element.hpp"

namespace ubercontract::tame {

/// Vertex [f] of type 1: the line spanned by f, represented with graded-lex
/// leading coefficient 1.
struct Type1Vertex {
  GroundPoly representative;

  static Type1Vertex from(const GroundPoly& f) {
    if (f.is_zero()) throw Error(ErrorCode::kDegenerateTuple, "type-1 vertex of the zero polynomial");
    BigRational inv = 1 / f.leading_coefficient();
    return {f.scaled(inv)};
  }
  std::string key() const { return representative.to_string(); }
  std::string label() const { return "[" + key() + "]"; }
  friend bool operator==(const Type1Vertex&, const Type1Vertex&) = default;
};

/// Vertex [f1, f2] of type 2: the plane spanned by f1, f2, stored as its
/// reduced echelon basis.
struct Type2Vertex {
  std::array<GroundPoly, 2> basis;

  static Type2Vertex from(const GroundPoly& f1, const GroundPoly& f2) {
    auto b = echelon_basis({f1, f2});
    if (b.size() != 2) {
      throw Error(ErrorCode::kDegenerateTuple, "type-2 vertex from dependent pair " + f1.to_string() + ", " +
                                                   f2.to_string());
    }
    return {{b[0], b[1]}};
  }
  std::string key() const { return basis[0].to_string() + ", " + basis[1].to_string(); }
  std::string label() const { return "[" + key() + "]"; }
  friend bool operator==(const Type2Vertex&, const Type2Vertex&) = default;
};

/// Vertex [f1, f2, f3, f4] of type 3: the O(q)-orbit of the tuple. No normal
/// form is computed; `bucket` is an orbit invariant (the echelon basis of the
/// span of the components) used for hashing, and equality is decided by
/// type3_equal.
struct Type3Vertex {
  GroundMap representative;
  std::string bucket;

  static Type3Vertex from(const GroundMap& f) {
    std::vector<GroundPoly> comps(f.components.begin(), f.components.end());
    auto b = echelon_basis(comps);
    if (b.size() != 4) throw Error(ErrorCode::kDegenerateTuple, "dependent components in " + f.to_string());
    std::string key;
    for (const auto& p : b) key += p.to_string() + ";";
    return {f, key};
  }
  std::string label() const {
    std::string out = "[";
    for (std::size_t i = 0; i < 4; ++i) {
      if (i > 0) out += ", ";
      out += representative.components[i].to_string();
    }
    return out + "]";
  }
};

inline bool type1_equal(const Type1Vertex& u, const Type1Vertex& v) { return u.representative == v.representative; }

inline bool type2_equal(const Type2Vertex& u, const Type2Vertex& v) { return u.basis == v.basis; }

/// The unique M with v_i = sum_j M[i][j] u_j, if one exists.
inline std::optional<Matrix4> linear_relation(const GroundMap& u, const GroundMap& v) {
  std::vector<GroundPoly> basis(u.components.begin(), u.components.end());
  if (rank(basis) != 4) throw Error(ErrorCode::kDegenerateTuple, "dependent components in " + u.to_string());
  Matrix4 m;
  for (std::size_t i = 0; i < 4; ++i) {
    auto row = solve_combination(basis, v.components[i]);
    if (!row) return std::nullopt;
    for (std::size_t j = 0; j < 4; ++j) m[i][j] = (*row)[j];
  }
  return m;
}

/// Solve-then-verify: find the linear M taking u to v and test M^T Q M = Q.
inline bool type3_equal(const GroundMap& u, const GroundMap& v) {
  std::vector<GroundPoly> vb(v.components.begin(), v.components.end());
  if (rank(vb) != 4) throw Error(ErrorCode::kDegenerateTuple, "dependent components in " + v.to_string());
  auto m = linear_relation(u, v);
  return m && preserves_quadratic_form(*m);
}

inline bool type3_equal(const Type3Vertex& u, const Type3Vertex& v) {
  if (u.bucket != v.bucket) return false;
  return type3_equal(u.representative, v.representative);
}

using OrbitVertex = std::variant<Type1Vertex, Type2Vertex, Type3Vertex>;

inline int vertex_type(const OrbitVertex& v) { return static_cast<int>(v.index()) + 1; }

inline std::string vertex_label(const OrbitVertex& v) {
  return std::visit([](const auto& x) { return x.label(); }, v);
}

inline bool orbit_equal(const OrbitVertex& u, const OrbitVertex& v) {
  if (u.index() != v.index()) return false;
  if (auto* a = std::get_if<Type1Vertex>(&u)) return type1_equal(*a, std::get<Type1Vertex>(v));
  if (auto* a = std::get_if<Type2Vertex>(&u)) return type2_equal(*a, std::get<Type2Vertex>(v));
  return type3_equal(std::get<Type3Vertex>(u), std::get<Type3Vertex>(v));
}

/// Quadratic form induced by the tuple on its span, in the coordinates of
/// the echelon basis B (written with x_k standing for the B_k coordinate).
/// Together with B this is a complete orbit invariant: two tuples with the
/// same span differ by some M in O(q) exactly when these forms agree.
inline GroundPoly type3_induced_form(const Type3Vertex& v) {
  const auto& f = v.representative;
  std::vector<GroundPoly> comps(f.components.begin(), f.components.end());
  auto basis = echelon_basis(comps);
  RationalMatrix c(4, std::vector<BigRational>(4));
  for (std::size_t k = 0; k < 4; ++k) {
    auto row = solve_combination(comps, basis[k]);
    for (std::size_t i = 0; i < 4; ++i) c[k][i] = (*row)[i];
  }
  RationalMatrix gram = multiply(multiply(c, to_dynamic(doubled_gram_matrix())), transpose(c));
  GroundPoly form;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      BigRational half = gram[i][j] / 2;
      form = form + variable(i) * variable(j) * GroundPoly::constant(half);
    }
  }
  return form;
}

inline std::string type3_canonical_key(const Type3Vertex& v) { return v.bucket + "|" + type3_induced_form(v).to_string(); }

/// Canonical label: echelon basis of the span and the induced form in
/// coordinates y1..y4 of that basis.
inline std::string type3_canonical_label(const Type3Vertex& v) {
  std::vector<GroundPoly> comps(v.representative.components.begin(), v.representative.components.end());
  auto basis = echelon_basis(comps);
  std::string out = "<";
  for (std::size_t k = 0; k < 4; ++k) out += (k ? ", " : "") + basis[k].to_string();
  std::string form = type3_induced_form(v).to_string();
  std::replace(form.begin(), form.end(), 'x', 'y');
  return out + "; " + form + ">";
}

/// Canonical string identifying the orbit; equal keys iff orbit_equal.
inline std::string orbit_key(const OrbitVertex& v) {
  if (auto* a = std::get_if<Type1Vertex>(&v)) return "1:" + a->key();
  if (auto* a = std::get_if<Type2Vertex>(&v)) return "2:" + a->key();
  return "3:" + type3_canonical_key(std::get<Type3Vertex>(v));
}

/// Label that depends only on the orbit (type-3 labels use the span and the
/// induced form rather than a representative).
inline std::string canonical_label(const OrbitVertex& v) {
  if (auto* a = std::get_if<Type3Vertex>(&v)) return type3_canonical_label(*a);
  return vertex_label(v);
}

/// Polynomials stored in the vertex representative.
inline std::vector<GroundPoly> vertex_polys(const OrbitVertex& v) {
  if (auto* a = std::get_if<Type1Vertex>(&v)) return {a->representative};
  if (auto* a = std::get_if<Type2Vertex>(&v)) return {a->basis[0], a->basis[1]};
  const auto& t = std::get<Type3Vertex>(v).representative;
  return {t.components.begin(), t.components.end()};
}

/// t·[f1, ...] = [f1 ∘ t^-1, ...].
inline Type1Vertex act_on_vertex(const TameElement& t, const Type1Vertex& v) {
  return Type1Vertex::from(compose(v.representative, t.inverse_map()));
}

inline Type2Vertex act_on_vertex(const TameElement& t, const Type2Vertex& v) {
  const auto& inv = t.inverse_map();
  return Type2Vertex::from(compose(v.basis[0], inv), compose(v.basis[1], inv));
}

inline Type3Vertex act_on_vertex(const TameElement& t, const Type3Vertex& v) {
  return Type3Vertex::from(compose(v.representative, t.inverse_map()));
}

inline OrbitVertex act_on_vertex(const TameElement& t, const OrbitVertex& v) {
  return std::visit([&](const auto& x) -> OrbitVertex { return act_on_vertex(t, x); }, v);
}

/// The four corners of the square of the tuple f, in cyclic order
/// [f1], [f1, f2], [f1, f2, f3, f4], [f1, f3].
inline std::array<OrbitVertex, 4> square_vertices(const GroundMap& f) {
  return {Type1Vertex::from(f.components[0]), Type2Vertex::from(f.components[0], f.components[1]),
          Type3Vertex::from(f), Type2Vertex::from(f.components[0], f.components[2])};
}

}  // namespace ubercontract::tame
