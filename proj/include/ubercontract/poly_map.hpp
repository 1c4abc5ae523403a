#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "ubercontract/polynomial.hpp"

namespace ubercontract {

/// A polynomial self-map of 4-space, given by its four component polynomials.
template <class C>
struct PolyMap4 {
  using Poly = SparsePolynomial<Monomial, C>;
  std::array<Poly, 4> components;

  static PolyMap4 identity() {
    PolyMap4 m;
    for (std::size_t i = 0; i < 4; ++i) m.components[i] = Poly::monomial(Monomial::variable(i));
    return m;
  }

  const Poly& operator[](std::size_t i) const { return components.at(i); }
  Poly& operator[](std::size_t i) { return components.at(i); }

  friend bool operator==(const PolyMap4&, const PolyMap4&) = default;

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < 4; ++i) {
      if (i > 0) out += ", ";
      out += components[i].to_string();
    }
    return out + ")";
  }
};

using GroundMap = PolyMap4<BigRational>;
using ParamMap = PolyMap4<ParamCoeff>;

namespace detail {

// Lazily computed powers of the four substituted polynomials.
template <class C>
class PowerCache {
 public:
  using Poly = SparsePolynomial<Monomial, C>;
  explicit PowerCache(const PolyMap4<C>& inner) : inner_(inner) {
    for (auto& row : powers_) row.push_back(Poly::constant(RingTraits<C>::one()));
  }
  const Poly& power(std::size_t var, std::size_t n) {
    auto& row = powers_[var];
    while (row.size() <= n) row.push_back(row.back() * inner_.components[var]);
    return row[n];
  }

 private:
  const PolyMap4<C>& inner_;
  std::array<std::vector<Poly>, 4> powers_;
};

template <class C>
SparsePolynomial<Monomial, C> substitute_with(const SparsePolynomial<Monomial, C>& p, PowerCache<C>& cache) {
  using Poly = SparsePolynomial<Monomial, C>;
  Poly result;
  for (const auto& [k, c] : p.terms()) {
    Poly term = Poly::constant(c);
    for (std::size_t v = 0; v < 4; ++v) {
      if (k.exponents[v] > 0) term *= cache.power(v, k.exponents[v]);
    }
    result += term;
  }
  return result;
}

}  // namespace detail

/// p(inner_1, ..., inner_4): substitutes component j of `inner` for x_j.
template <class C>
SparsePolynomial<Monomial, C> compose(const SparsePolynomial<Monomial, C>& p, const PolyMap4<C>& inner) {
  detail::PowerCache<C> cache(inner);
  return detail::substitute_with(p, cache);
}

/// (outer ∘ inner): component i is outer_i with x_j replaced by inner_j.
template <class C>
PolyMap4<C> compose(const PolyMap4<C>& outer, const PolyMap4<C>& inner) {
  detail::PowerCache<C> cache(inner);
  PolyMap4<C> result;
  for (std::size_t i = 0; i < 4; ++i) result.components[i] = detail::substitute_with(outer.components[i], cache);
  return result;
}

inline ParamMap lift(const GroundMap& m) {
  ParamMap r;
  for (std::size_t i = 0; i < 4; ++i) r.components[i] = lift(m.components[i]);
  return r;
}

/// q(x1, x2, x3, x4) = x1*x4 - x2*x3.
inline GroundPoly quadratic_form() { return x1() * x4() - x2() * x3(); }

/// q pulled back along m: m1*m4 - m2*m3.
template <class C>
SparsePolynomial<Monomial, C> quadratic_form_pullback(const PolyMap4<C>& m) {
  return m.components[0] * m.components[3] - m.components[1] * m.components[2];
}

template <class C>
C coefficient_of(const SparsePolynomial<Monomial, C>& p, const Monomial& m) {
  return p.coefficient(m);
}

inline std::array<BigRational, 4> evaluate(const GroundMap& m, const std::array<BigRational, 4>& point) {
  return {evaluate(m.components[0], point), evaluate(m.components[1], point), evaluate(m.components[2], point),
          evaluate(m.components[3], point)};
}

inline GroundMap substitute(const ParamMap& m, const std::array<BigRational, kParamCount>& values) {
  GroundMap r;
  for (std::size_t i = 0; i < 4; ++i) r.components[i] = substitute(m.components[i], values);
  return r;
}

}  // namespace ubercontract
