#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ubercontract/polynomial.hpp"

namespace ubercontract {

using RationalMatrix = std::vector<std::vector<BigRational>>;

/// In-place reduced row echelon form; returns the pivot columns.
inline std::vector<std::size_t> reduce_row_echelon(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    BigRational inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      BigRational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

/// Coefficient vectors of a family of polynomials over the union of their
/// monomials, columns in graded-lex order (leading monomial first).
struct CoefficientTable {
  std::vector<Monomial> columns;
  RationalMatrix rows;
};

inline CoefficientTable coefficient_table(const std::vector<GroundPoly>& polys) {
  std::map<Monomial, std::size_t, GradedLexDescending<Monomial>> index;
  for (const auto& p : polys) {
    for (const auto& [k, c] : p.terms()) index.emplace(k, 0);
  }
  CoefficientTable t;
  for (auto& [k, i] : index) {
    i = t.columns.size();
    t.columns.push_back(k);
  }
  t.rows.assign(polys.size(), std::vector<BigRational>(t.columns.size(), BigRational(0)));
  for (std::size_t r = 0; r < polys.size(); ++r) {
    for (const auto& [k, c] : polys[r].terms()) t.rows[r][index.at(k)] = c;
  }
  return t;
}

/// Reduced echelon basis of span(polys); unique for the span.
inline std::vector<GroundPoly> echelon_basis(const std::vector<GroundPoly>& polys) {
  CoefficientTable t = coefficient_table(polys);
  reduce_row_echelon(t.rows);
  std::vector<GroundPoly> basis;
  for (const auto& row : t.rows) {
    GroundPoly p;
    for (std::size_t j = 0; j < row.size(); ++j) p.add_term(t.columns[j], row[j]);
    basis.push_back(std::move(p));
  }
  return basis;
}

inline std::size_t rank(const std::vector<GroundPoly>& polys) {
  CoefficientTable t = coefficient_table(polys);
  return reduce_row_echelon(t.rows).size();
}

/// Solves target = sum_j x_j * basis_j. Returns nullopt when target lies
/// outside the span; basis must be linearly independent.
inline std::optional<std::vector<BigRational>> solve_combination(const std::vector<GroundPoly>& basis,
                                                                 const GroundPoly& target) {
  std::vector<GroundPoly> all = basis;
  all.push_back(target);
  CoefficientTable t = coefficient_table(all);
  const std::size_t n = basis.size();
  const std::size_t m = t.columns.size();
  // Augmented system: one equation per monomial, unknowns x_0..x_{n-1}.
  RationalMatrix a(m, std::vector<BigRational>(n + 1, BigRational(0)));
  for (std::size_t col = 0; col < m; ++col) {
    for (std::size_t j = 0; j < n; ++j) a[col][j] = t.rows[j][col];
    a[col][n] = t.rows[n][col];
  }
  auto pivots = reduce_row_echelon(a);
  std::vector<BigRational> x(n, BigRational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == n) return std::nullopt;
    x[pivots[r]] = a[r][n];
  }
  return x;
}

inline RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix c(a.size(), std::vector<BigRational>(b.front().size(), BigRational(0)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (sgn(a[i][k]) == 0) continue;
      for (std::size_t j = 0; j < b[k].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

inline RationalMatrix transpose(const RationalMatrix& a) {
  RationalMatrix t(a.front().size(), std::vector<BigRational>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  }
  return t;
}

inline std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
  const std::size_t n = a.size();
  RationalMatrix aug(n, std::vector<BigRational>(2 * n, BigRational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  auto pivots = reduce_row_echelon(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  RationalMatrix inv(n, std::vector<BigRational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  }
  return inv;
}

}  // namespace ubercontract
