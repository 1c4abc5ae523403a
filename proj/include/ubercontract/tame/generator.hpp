#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "ubercontract/linear_algebra.hpp"
#include "ubercontract/poly_map.hpp"
#include "ubercontract/poly_parse.hpp"

namespace ubercontract::tame {

using Matrix4 = std::array<std::array<BigRational, 4>, 4>;

/// Twice the Gram matrix of q = x1*x4 - x2*x3, kept integral.
inline Matrix4 doubled_gram_matrix() {
  Matrix4 q;
  for (auto& row : q) row.fill(BigRational(0));
  q[0][3] = 1;
  q[3][0] = 1;
  q[1][2] = -1;
  q[2][1] = -1;
  return q;
}

inline Matrix4 identity_matrix() {
  Matrix4 m;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) m[i][j] = i == j ? 1 : 0;
  }
  return m;
}

inline RationalMatrix to_dynamic(const Matrix4& m) {
  RationalMatrix r(4, std::vector<BigRational>(4));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) r[i][j] = m[i][j];
  }
  return r;
}

inline Matrix4 to_fixed(const RationalMatrix& m) {
  Matrix4 r;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) r[i][j] = m.at(i).at(j);
  }
  return r;
}

/// M^T Q M == Q, i.e. q(Mx) = q(x).
inline bool preserves_quadratic_form(const Matrix4& m) {
  RationalMatrix mm = to_dynamic(m);
  RationalMatrix q = to_dynamic(doubled_gram_matrix());
  return multiply(multiply(transpose(mm), q), mm) == q;
}

/// The linear map x -> Mx, component i = sum_j M[i][j] x_j.
inline GroundMap linear_map(const Matrix4& m) {
  GroundMap r;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) r.components[i].add_term(Monomial::variable(j), m[i][j]);
  }
  return r;
}

inline std::string matrix_to_string(const Matrix4& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < 4; ++i) {
    if (i > 0) out += "; ";
    for (std::size_t j = 0; j < 4; ++j) {
      if (j > 0) out += ' ';
      out += m[i][j].get_str();
    }
  }
  return out + "]";
}

/// Generator of the tame group: a linear map in O(q), or an elementary map
/// (x1, x2 + x1*P, x3, x4 + x3*P) with P a polynomial in x1, x3.
class Generator {
 public:
  struct Orthogonal {
    Matrix4 matrix;
    friend bool operator==(const Orthogonal&, const Orthogonal&) = default;
  };
  struct Elementary {
    GroundPoly p;
    friend bool operator==(const Elementary&, const Elementary&) = default;
  };

  static Generator orthogonal(const Matrix4& m) {
    if (!preserves_quadratic_form(m)) {
      throw Error(ErrorCode::kNotOrthogonal, "matrix " + matrix_to_string(m) + " does not preserve x1*x4 - x2*x3");
    }
    return Generator(Orthogonal{m});
  }

  static Generator elementary(const GroundPoly& p) {
    for (const auto& [k, c] : p.terms()) {
      if (k.exponents[1] != 0 || k.exponents[3] != 0) {
        throw Error(ErrorCode::kBadVariables, "P = " + p.to_string() + " must only involve x1 and x3");
      }
    }
    return Generator(Elementary{p});
  }

  bool is_orthogonal() const { return std::holds_alternative<Orthogonal>(data_); }
  bool is_elementary() const { return std::holds_alternative<Elementary>(data_); }
  const Matrix4& matrix() const { return std::get<Orthogonal>(data_).matrix; }
  const GroundPoly& elementary_poly() const { return std::get<Elementary>(data_).p; }

  GroundMap forward() const {
    if (is_orthogonal()) return linear_map(matrix());
    return elementary_map(elementary_poly());
  }

  GroundMap inverse() const {
    if (is_orthogonal()) {
      auto inv = ::ubercontract::inverse(to_dynamic(matrix()));
      return linear_map(to_fixed(*inv));
    }
    return elementary_map(-elementary_poly());
  }

  std::string to_string() const {
    if (is_orthogonal()) return "O" + matrix_to_string(matrix());
    return "E[" + elementary_poly().to_string() + "]";
  }

  friend bool operator==(const Generator&, const Generator&) = default;

 private:
  explicit Generator(std::variant<Orthogonal, Elementary> data) : data_(std::move(data)) {}

  static GroundMap elementary_map(const GroundPoly& p) {
    GroundMap m = GroundMap::identity();
    m.components[1] += x1() * p;
    m.components[3] += x3() * p;
    return m;
  }

  std::variant<Orthogonal, Elementary> data_;
};

/// Permutation-with-signs matrices x_i -> s_i x_{perm(i)} lying in O(q).
/// There are 32 of them; they realise every reordering of the four
/// components of a tuple compatible with q.
inline std::vector<Matrix4> orthogonal_signed_permutations() {
  std::vector<Matrix4> out;
  std::array<std::size_t, 4> perm = {0, 1, 2, 3};
  do {
    for (int signs = 0; signs < 16; ++signs) {
      Matrix4 m;
      for (auto& row : m) row.fill(BigRational(0));
      for (std::size_t i = 0; i < 4; ++i) m[i][perm[i]] = (signs >> i) & 1 ? -1 : 1;
      if (preserves_quadratic_form(m)) out.push_back(m);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Swap x1 <-> x4.
inline Matrix4 swap_14_matrix() {
  Matrix4 m;
  for (auto& row : m) row.fill(BigRational(0));
  m[0][3] = 1;
  m[1][1] = 1;
  m[2][2] = 1;
  m[3][0] = 1;
  return m;
}

/// Swap x2 <-> x3.
inline Matrix4 swap_23_matrix() {
  Matrix4 m;
  for (auto& row : m) row.fill(BigRational(0));
  m[0][0] = 1;
  m[1][2] = 1;
  m[2][1] = 1;
  m[3][3] = 1;
  return m;
}

/// Parses "O[m11 m12 m13 m14; ...]" or "E[poly]".
inline Generator parse_generator(std::string_view text) {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::kParse, why + " in generator '" + std::string(text) + "'");
  };
  if (text.size() < 3 || text[1] != '[' || text.back() != ']') fail("expected O[...] or E[...]");
  std::string_view body = text.substr(2, text.size() - 3);
  if (text[0] == 'E') return Generator::elementary(parse_ground_poly(body));
  if (text[0] != 'O') fail("unknown generator kind");
  Matrix4 m;
  std::size_t row = 0;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t end = body.find(';', start);
    if (end == std::string_view::npos) end = body.size();
    if (row >= 4) fail("too many rows");
    std::string_view line = body.substr(start, end - start);
    std::size_t col = 0;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && line[i] == ' ') ++i;
      if (i >= line.size()) break;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ') ++j;
      if (col >= 4) fail("too many columns");
      m[row][col++] = parse_rational(line.substr(i, j - i));
      i = j;
    }
    if (col != 4) fail("expected 4 columns");
    ++row;
    start = end + 1;
  }
  if (row != 4) fail("expected 4 rows");
  return Generator::orthogonal(m);
}

}  // namespace ubercontract::tame
