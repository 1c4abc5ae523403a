#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "ubercontract/monomial.hpp"
#include "ubercontract/rational.hpp"

namespace ubercontract {

/// Customization point for coefficient rings of SparsePolynomial.
template <class C>
struct RingTraits;

template <>
struct RingTraits<BigRational> {
  static BigRational zero() { return BigRational(0); }
  static BigRational one() { return BigRational(1); }
  static bool is_zero(const BigRational& c) { return sgn(c) == 0; }
  static bool is_one(const BigRational& c) { return c == 1; }
  // Returns (negative, magnitude) for sign-aware printing.
  static std::pair<bool, BigRational> split_sign(const BigRational& c) {
    if (sgn(c) < 0) return {true, BigRational(-c)};
    return {false, c};
  }
  static std::string render(const BigRational& c) { return c.get_str(); }
  static std::string render_factor(const BigRational& c) { return c.get_str(); }
};

/// Sparse polynomial: finite map Key -> C with no stored zero coefficients,
/// iterated in graded-lex order from the leading term down.
template <class Key, class C>
class SparsePolynomial {
 public:
  using key_type = Key;
  using coefficient_type = C;
  using Traits = RingTraits<C>;
  using TermMap = std::map<Key, C, GradedLexDescending<Key>>;

  SparsePolynomial() = default;

  static SparsePolynomial constant(const C& c) {
    SparsePolynomial p;
    p.add_term(Key::one(), c);
    return p;
  }
  static SparsePolynomial term(const Key& k, const C& c) {
    SparsePolynomial p;
    p.add_term(k, c);
    return p;
  }
  static SparsePolynomial monomial(const Key& k) { return term(k, Traits::one()); }

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c*k in place, dropping the term if it cancels.
  void add_term(const Key& k, const C& c) {
    if (Traits::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  C coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Traits::zero() : it->second;
  }

  const Key& leading_key() const { return terms_.begin()->first; }
  const C& leading_coefficient() const { return terms_.begin()->second; }

  int total_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.total_degree(); }

  SparsePolynomial operator-() const {
    SparsePolynomial r;
    for (const auto& [k, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), k, C(-c));
    return r;
  }

  SparsePolynomial& operator+=(const SparsePolynomial& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  SparsePolynomial& operator-=(const SparsePolynomial& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, C(-c));
    return *this;
  }
  SparsePolynomial& operator*=(const SparsePolynomial& o) {
    *this = *this * o;
    return *this;
  }

  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }

  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    SparsePolynomial r;
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) r.add_term(ka * kb, C(ca * cb));
    }
    return r;
  }

  SparsePolynomial scaled(const C& s) const {
    SparsePolynomial r;
    if (Traits::is_zero(s)) return r;
    for (const auto& [k, c] : terms_) r.add_term(k, C(c * s));
    return r;
  }

  SparsePolynomial pow(unsigned n) const {
    SparsePolynomial result = constant(Traits::one());
    SparsePolynomial base = *this;
    while (n > 0) {
      if (n & 1U) result *= base;
      n >>= 1U;
      if (n > 0) base *= base;
    }
    return result;
  }

  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
    return a.terms_ == b.terms_;
  }

  /// Canonical rendering, e.g. "x1^2*x3 - 3/2*x2 + 1".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      auto [negative, magnitude] = Traits::split_sign(c);
      if (first) {
        if (negative) out += '-';
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      if (k.is_one()) {
        out += Traits::render(magnitude);
      } else if (Traits::is_one(magnitude)) {
        out += k.to_string();
      } else {
        out += Traits::render_factor(magnitude) + "*" + k.to_string();
      }
    }
    return out;
  }

 private:
  TermMap terms_;
};

/// Laurent polynomials in the stabilizer parameters a, b, c, d, a', b', c', d'.
using ParamCoeff = SparsePolynomial<ParamMonomial, BigRational>;

template <>
struct RingTraits<ParamCoeff> {
  static ParamCoeff zero() { return {}; }
  static ParamCoeff one() { return ParamCoeff::constant(BigRational(1)); }
  static bool is_zero(const ParamCoeff& c) { return c.is_zero(); }
  static bool is_one(const ParamCoeff& c) { return c == one(); }
  static std::pair<bool, ParamCoeff> split_sign(const ParamCoeff& c) {
    if (c.size() == 1 && sgn(c.leading_coefficient()) < 0) return {true, -c};
    return {false, c};
  }
  static std::string render(const ParamCoeff& c) {
    return c.size() == 1 ? c.to_string() : "(" + c.to_string() + ")";
  }
  static std::string render_factor(const ParamCoeff& c) { return render(c); }
};

/// Polynomials in x1..x4 over the rationals.
using GroundPoly = SparsePolynomial<Monomial, BigRational>;
/// Polynomials in x1..x4 whose coefficients are Laurent polynomials in the parameters.
using ParamPoly = SparsePolynomial<Monomial, ParamCoeff>;

inline GroundPoly variable(std::size_t index) { return GroundPoly::monomial(Monomial::variable(index)); }
inline GroundPoly x1() { return variable(0); }
inline GroundPoly x2() { return variable(1); }
inline GroundPoly x3() { return variable(2); }
inline GroundPoly x4() { return variable(3); }
inline GroundPoly constant_poly(long value) { return GroundPoly::constant(BigRational(value)); }

inline ParamCoeff param(Param p, std::int16_t power = 1) {
  return ParamCoeff::monomial(ParamMonomial::variable(p, power));
}

/// Multiplicative inverse of a single-term coefficient over invertible parameters.
inline ParamCoeff unit_inverse(const ParamCoeff& c) {
  if (c.size() != 1) throw Error(ErrorCode::kInvalidArgument, "cannot invert " + c.to_string());
  const auto& [k, v] = *c.terms().begin();
  return ParamCoeff::term(k.inverse(), BigRational(1 / v));
}

/// Embeds a rational polynomial into the parametric ring.
inline ParamPoly lift(const GroundPoly& p) {
  ParamPoly r;
  for (const auto& [k, c] : p.terms()) r.add_term(k, ParamCoeff::constant(c));
  return r;
}

inline BigRational evaluate(const GroundPoly& p, const std::array<BigRational, 4>& point) {
  BigRational total(0);
  for (const auto& [k, c] : p.terms()) {
    BigRational t = c;
    for (std::size_t i = 0; i < 4; ++i) {
      for (unsigned e = 0; e < k.exponents[i]; ++e) t *= point[i];
    }
    total += t;
  }
  return total;
}

/// Evaluates a Laurent coefficient at rational parameter values; invertible
/// parameters that occur with negative exponents must be nonzero.
inline BigRational evaluate(const ParamCoeff& c, const std::array<BigRational, kParamCount>& values) {
  BigRational total(0);
  for (const auto& [k, v] : c.terms()) {
    BigRational t = v;
    for (std::size_t i = 0; i < kParamCount; ++i) {
      int e = k.exponents[i];
      if (e < 0 && sgn(values[i]) == 0) {
        throw Error(ErrorCode::kInvalidArgument, "parameter " + param_name(i) + " must be nonzero");
      }
      for (int j = 0; j < (e < 0 ? -e : e); ++j) {
        if (e > 0) {
          t *= values[i];
        } else {
          t /= values[i];
        }
      }
    }
    total += t;
  }
  return total;
}

inline GroundPoly substitute(const ParamPoly& p, const std::array<BigRational, kParamCount>& values) {
  GroundPoly r;
  for (const auto& [k, c] : p.terms()) r.add_term(k, evaluate(c, values));
  return r;
}

}  // namespace ubercontract
