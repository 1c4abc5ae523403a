#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ubercontract/tame/element.hpp"

namespace ubercontract::tame {

/// f(a,b,c,d) = (a x1, b(x2 + c x1), b^-1(x3 + d x1), a^-1(x4 + c x3 + d x2)),
/// the pointwise stabilizer of the base square. `primed` selects a', b', c', d'.
inline ParamMap stabilizer_family(bool primed = false) {
  const std::size_t off = primed ? 4 : 0;
  auto p = [&](std::size_t i, std::int16_t pow = 1) { return param(static_cast<Param>(i + off), pow); };
  auto x = [](std::size_t i) { return lift(variable(i)); };
  ParamMap f;
  f.components[0] = x(0).scaled(p(0));
  f.components[1] = (x(1) + x(0).scaled(p(2))).scaled(p(1));
  f.components[2] = (x(2) + x(0).scaled(p(3))).scaled(p(1, -1));
  f.components[3] = (x(3) + x(2).scaled(p(2)) + x(1).scaled(p(3))).scaled(p(0, -1));
  return f;
}

/// Parameter values (a, b, c, d, a', b', c', d').
using ParamValues = std::array<BigRational, kParamCount>;

inline ParamValues identity_params() {
  return {BigRational(1), BigRational(1), BigRational(0), BigRational(0),
          BigRational(1), BigRational(1), BigRational(0), BigRational(0)};
}

struct Constraint {
  std::size_t component = 0;  // 0-based
  Monomial monomial;
  ParamCoeff polynomial;  // must vanish
};

/// One step of the successive-isolation reduction.
struct ReductionStep {
  std::size_t component = 0;
  Monomial monomial;
  ParamCoeff original;
  ParamCoeff reduced;
  std::string conclusion;
};

struct StabilizerSummary {
  /// Relations on the unprimed parameters, e.g. a^6 - 1, b^6 - 1, c, d.
  std::vector<ParamCoeff> relations;
  /// Relations determining the primed parameters: a' = a^5, c' = 0, ...
  std::vector<std::pair<std::size_t, ParamCoeff>> mirror;
  /// Auxiliary substitutions among unprimed parameters (b = a^3).
  std::vector<std::pair<std::size_t, ParamCoeff>> derived;
  std::vector<ReductionStep> steps;
  std::vector<Constraint> unresolved;
  bool finite = false;
  /// Product of the root-of-unity orders bounding the unprimed unit parameters.
  long solution_bound = 0;
};

struct ConstraintSet {
  std::vector<Constraint> constraints;
  StabilizerSummary summary;
};

namespace detail {

/// Successive-isolation engine over the stabilizer parameters. Invertible
/// parameters are either free, substituted by a scalar multiple of a Laurent
/// monomial in free ones, or carry an order relation p^n = r; the other
/// parameters may be proven zero.
class IsolationReducer {
 public:
  ParamCoeff reduce(const ParamCoeff& c) const {
    ParamCoeff out;
    for (const auto& [k, v] : c.terms()) {
      ParamCoeff term = ParamCoeff::constant(v);
      bool vanished = false;
      for (std::size_t i = 0; i < kParamCount && !vanished; ++i) {
        int e = k.exponents[i];
        if (e == 0) continue;
        if (zero_[i]) {
          vanished = true;
          break;
        }
        if (auto it = subst_.find(i); it != subst_.end()) {
          term *= power(it->second, e);
        } else {
          term *= ParamCoeff::monomial(ParamMonomial::variable(static_cast<Param>(i), static_cast<std::int16_t>(e)));
        }
      }
      if (!vanished) out += term;
    }
    return apply_orders(out);
  }

  /// Reduces c and draws a conclusion; returns the text of the conclusion.
  std::string absorb(const ParamCoeff& raw, ParamCoeff& reduced) {
    reduced = reduce(raw);
    if (reduced.is_zero()) return "implied";
    if (reduced.size() == 1) {
      const auto& k = reduced.leading_key();
      std::vector<std::size_t> nonunits;
      for (std::size_t i = 0; i < kParamCount; ++i) {
        if (!is_unit_param(i) && k.exponents[i] > 0) nonunits.push_back(i);
      }
      if (nonunits.size() == 1) {
        zero_[nonunits[0]] = true;
        return param_name(nonunits[0]) + " = 0";
      }
      if (nonunits.empty()) {
        inconsistent_ = true;
        return "inconsistent";
      }
      return "";
    }
    if (reduced.size() == 2) {
      auto it = reduced.terms().begin();
      auto [k1, c1] = *it;
      ++it;
      auto [k2, c2] = *it;
      if (!k1.is_unit() || !k2.is_unit()) return "";
      // k1/k2 = -c2/c1.
      ParamMonomial ratio = k1 * k2.inverse();
      BigRational value = -c2 / c1;
      return solve_unit_relation(ratio, value);
    }
    return "";
  }

  bool inconsistent() const { return inconsistent_; }
  bool is_zero(std::size_t i) const { return zero_[i]; }
  const std::map<std::size_t, ParamCoeff>& substitutions() const { return subst_; }
  const std::map<std::size_t, std::pair<int, BigRational>>& orders() const { return orders_; }
  const std::vector<std::size_t>& solve_order() const { return solve_order_; }

  ParamCoeff apply_orders(const ParamCoeff& c) const {
    if (orders_.empty()) return c;
    ParamCoeff out;
    for (const auto& [k, v] : c.terms()) {
      ParamMonomial m = k;
      BigRational scale = v;
      for (const auto& [var, ord] : orders_) {
        int n = ord.first;
        int e = m.exponents[var];
        int q = e >= 0 ? e / n : -((-e + n - 1) / n);
        int r = e - q * n;
        m.exponents[var] = static_cast<std::int16_t>(r);
        BigRational f = pow_rational(ord.second, q);
        scale *= f;
      }
      out.add_term(m, scale);
    }
    return out;
  }

 private:
  static BigRational pow_rational(const BigRational& r, int e) {
    BigRational out(1);
    for (int i = 0; i < (e < 0 ? -e : e); ++i) out *= r;
    return e < 0 ? BigRational(1 / out) : out;
  }

  static ParamCoeff power(const ParamCoeff& c, int e) {
    if (e >= 0) return c.pow(static_cast<unsigned>(e));
    return unit_inverse(c).pow(static_cast<unsigned>(-e));
  }

  std::string solve_unit_relation(const ParamMonomial& ratio, const BigRational& value) {
    // Prefer eliminating primed parameters, then later unprimed ones.
    const std::array<std::size_t, 4> preference = {5, 4, 1, 0};
    for (std::size_t var : preference) {
      int e = ratio.exponents[var];
      if (e != 1 && e != -1) continue;
      if (subst_.count(var) || orders_.count(var)) continue;
      // var^e * rest = value  =>  var = (value / rest)^(1/e).
      ParamMonomial rest = ratio;
      rest.exponents[var] = 0;
      ParamCoeff solution = ParamCoeff::term(rest.inverse(), value);
      if (e == -1) solution = unit_inverse(solution);
      subst_[var] = solution;
      solve_order_.push_back(var);
      for (auto& [other, s] : subst_) {
        if (other != var) s = reduce(s);
      }
      subst_[var] = reduce(solution);
      return param_name(var) + " = " + subst_[var].to_string();
    }
    // Only a single free parameter left: an order relation var^n = value.
    std::size_t var = kParamCount;
    for (std::size_t i = 0; i < kParamCount; ++i) {
      if (ratio.exponents[i] != 0) {
        if (var != kParamCount) return "";
        var = i;
      }
    }
    if (var == kParamCount) {
      if (value != 1) inconsistent_ = true;
      return value == 1 ? "implied" : "inconsistent";
    }
    int n = ratio.exponents[var];
    BigRational rhs = value;
    if (n < 0) {
      n = -n;
      rhs = 1 / rhs;
    }
    orders_[var] = {n, rhs};
    for (auto& [other, s] : subst_) s = reduce(s);
    ParamCoeff rel = param(static_cast<Param>(var), static_cast<std::int16_t>(n)) - ParamCoeff::constant(rhs);
    return rel.to_string() + " = 0";
  }

  std::array<bool, kParamCount> zero_{};
  std::map<std::size_t, ParamCoeff> subst_;
  std::map<std::size_t, std::pair<int, BigRational>> orders_;
  std::vector<std::size_t> solve_order_;
  bool inconsistent_ = false;
};

}  // namespace detail

/// Coefficient equations of g∘f(a,b,c,d) = f'(a',b',c',d')∘g, ordered by
/// (component, graded-lex monomial), plus the successive-isolation summary:
/// first-component monomials x1^5, x1^2*x2, x1^2*x3, then the linear ones,
/// then everything else.
inline ConstraintSet derive_common_stabilizer_constraints(const TameElement& g) {
  ParamMap gl = lift(g.forward());
  ParamMap f = stabilizer_family(false);
  ParamMap fp = stabilizer_family(true);
  ParamMap lhs = compose(gl, f);
  ParamMap rhs = compose(fp, gl);

  ConstraintSet out;
  for (std::size_t i = 0; i < 4; ++i) {
    ParamPoly diff = lhs.components[i] - rhs.components[i];
    for (const auto& [k, c] : diff.terms()) out.constraints.push_back({i, k, c});
  }

  // Isolation order.
  std::vector<const Constraint*> order;
  auto take = [&](std::size_t comp, const Monomial& m) {
    for (const auto& c : out.constraints) {
      if (c.component == comp && c.monomial == m &&
          std::find(order.begin(), order.end(), &c) == order.end()) {
        order.push_back(&c);
      }
    }
  };
  take(0, Monomial::of(5, 0, 0, 0));
  take(0, Monomial::of(2, 1, 0, 0));
  take(0, Monomial::of(2, 0, 1, 0));
  for (std::size_t v = 4; v-- > 0;) take(0, Monomial::variable(v));
  for (const auto& c : out.constraints) take(c.component, c.monomial);

  detail::IsolationReducer reducer;
  StabilizerSummary& s = out.summary;
  std::vector<const Constraint*> pending = order;
  for (int pass = 0; pass < 4 && !pending.empty(); ++pass) {
    std::vector<const Constraint*> still;
    for (const Constraint* c : pending) {
      ParamCoeff reduced;
      std::string conclusion = reducer.absorb(c->polynomial, reduced);
      if (conclusion.empty()) {
        still.push_back(c);
        continue;
      }
      if (pass == 0 || conclusion != "implied") {
        s.steps.push_back({c->component, c->monomial, c->polynomial, reduced, conclusion});
      }
    }
    if (still.size() == pending.size()) {
      pending = still;
      break;
    }
    pending = still;
  }
  for (const Constraint* c : pending) s.unresolved.push_back(*c);

  // Summary relations on a, b, c, d.
  bool finite = s.unresolved.empty() && !reducer.inconsistent();
  long bound = 1;
  for (std::size_t i = 0; i < 4; ++i) {
    if (reducer.is_zero(i)) {
      s.relations.push_back(param(static_cast<Param>(i)));
      continue;
    }
    if (auto it = reducer.orders().find(i); it != reducer.orders().end()) {
      s.relations.push_back(param(static_cast<Param>(i), static_cast<std::int16_t>(it->second.first)) -
                            ParamCoeff::constant(it->second.second));
      bound *= it->second.first;
      continue;
    }
    if (auto it = reducer.substitutions().find(i); it != reducer.substitutions().end()) {
      // p = r * (monomial in parameters with order relations); raising to the
      // common order n gives p^n = r^n * (monomial)^n, reduced.
      const ParamCoeff& value = it->second;
      int n = 1;
      for (const auto& [var, ord] : reducer.orders()) {
        if (value.size() == 1 && value.leading_key().exponents[var] != 0) n = std::lcm(n, ord.first);
      }
      if (value.size() != 1 || n == 1) {
        finite = false;
        continue;
      }
      ParamCoeff rhs = reducer.apply_orders(value.pow(static_cast<unsigned>(n)));
      s.relations.push_back(param(static_cast<Param>(i), static_cast<std::int16_t>(n)) - rhs);
      s.derived.emplace_back(i, value);
      bound *= n;
      continue;
    }
    finite = false;
  }
  for (std::size_t i = 4; i < kParamCount; ++i) {
    if (reducer.is_zero(i)) {
      s.mirror.emplace_back(i, ParamCoeff());
    } else if (auto it = reducer.substitutions().find(i); it != reducer.substitutions().end()) {
      s.mirror.emplace_back(i, it->second);
    } else {
      finite = false;
    }
  }
  s.finite = finite;
  s.solution_bound = finite ? bound : 0;
  return out;
}

inline ConstraintSet derive_common_stabilizer_constraints() { return derive_common_stabilizer_constraints(explicit_g()); }

/// Constraints that do not vanish at the given parameter values.
inline std::vector<Constraint> violated_constraints(const ConstraintSet& set, const ParamValues& values) {
  std::vector<Constraint> out;
  for (const auto& c : set.constraints) {
    if (sgn(evaluate(c.polynomial, values)) != 0) out.push_back(c);
  }
  return out;
}

inline std::string constraint_location(std::size_t component, const Monomial& m) {
  return "component " + std::to_string(component + 1) + ", monomial " + m.to_string();
}

}  // namespace ubercontract::tame
