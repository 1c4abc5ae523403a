#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

#include "ubercontract/error.hpp"

namespace ubercontract {

/// Exponent vector x1^e1 x2^e2 x3^e3 x4^e4.
struct Monomial {
  static constexpr std::size_t kArity = 4;
  std::array<std::uint16_t, kArity> exponents{};

  static Monomial one() { return {}; }
  static Monomial variable(std::size_t index, std::uint16_t power = 1) {
    Monomial m;
    m.exponents.at(index) = power;
    return m;
  }
  static Monomial of(std::uint16_t e1, std::uint16_t e2, std::uint16_t e3, std::uint16_t e4) {
    return Monomial{{e1, e2, e3, e4}};
  }

  int total_degree() const {
    int d = 0;
    for (auto e : exponents) d += e;
    return d;
  }
  bool is_one() const { return total_degree() == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kArity; ++i) {
      m.exponents[i] = static_cast<std::uint16_t>(a.exponents[i] + b.exponents[i]);
    }
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const {
    if (is_one()) return "1";
    std::string out;
    for (std::size_t i = 0; i < kArity; ++i) {
      if (exponents[i] == 0) continue;
      if (!out.empty()) out += '*';
      out += 'x';
      out += std::to_string(i + 1);
      if (exponents[i] != 1) out += '^' + std::to_string(exponents[i]);
    }
    return out;
  }
};

/// Parameters of the square-stabilizer family: a, b, c, d and primed copies.
/// a, b, a', b' are invertible (Laurent exponents allowed).
enum class Param : std::size_t { a = 0, b, c, d, a_prime, b_prime, c_prime, d_prime };

inline constexpr std::size_t kParamCount = 8;

inline constexpr bool is_unit_param(std::size_t index) {
  return index == 0 || index == 1 || index == 4 || index == 5;
}

inline std::string param_name(std::size_t index) {
  static const std::array<const char*, kParamCount> names = {"a", "b", "c", "d", "a'", "b'", "c'", "d'"};
  return names.at(index);
}

struct ParamMonomial {
  static constexpr std::size_t kArity = kParamCount;
  std::array<std::int16_t, kArity> exponents{};

  static ParamMonomial one() { return {}; }
  static ParamMonomial variable(Param p, std::int16_t power = 1) {
    auto index = static_cast<std::size_t>(p);
    if (power < 0 && !is_unit_param(index)) {
      throw Error(ErrorCode::kInvalidArgument, "negative power of non-invertible parameter " + param_name(index));
    }
    ParamMonomial m;
    m.exponents[index] = power;
    return m;
  }

  int total_degree() const {
    int d = 0;
    for (auto e : exponents) d += e;
    return d;
  }
  bool is_one() const {
    for (auto e : exponents) {
      if (e != 0) return false;
    }
    return true;
  }
  /// True when only invertible parameters occur.
  bool is_unit() const {
    for (std::size_t i = 0; i < kArity; ++i) {
      if (!is_unit_param(i) && exponents[i] != 0) return false;
    }
    return true;
  }
  ParamMonomial inverse() const {
    if (!is_unit()) throw Error(ErrorCode::kInvalidArgument, "monomial " + to_string() + " is not invertible");
    ParamMonomial m;
    for (std::size_t i = 0; i < kArity; ++i) m.exponents[i] = static_cast<std::int16_t>(-exponents[i]);
    return m;
  }

  friend ParamMonomial operator*(const ParamMonomial& a, const ParamMonomial& b) {
    ParamMonomial m;
    for (std::size_t i = 0; i < kArity; ++i) {
      m.exponents[i] = static_cast<std::int16_t>(a.exponents[i] + b.exponents[i]);
    }
    return m;
  }

  friend bool operator==(const ParamMonomial&, const ParamMonomial&) = default;

  std::string to_string() const {
    if (is_one()) return "1";
    std::string out;
    for (std::size_t i = 0; i < kArity; ++i) {
      if (exponents[i] == 0) continue;
      if (!out.empty()) out += '*';
      out += param_name(i);
      if (exponents[i] != 1) out += '^' + std::to_string(exponents[i]);
    }
    return out;
  }
};

/// Graded lexicographic order, largest first: higher total degree wins, ties
/// broken by comparing exponents of the first variable, then the second, ...
/// Used as a std::map comparator so iteration runs from the leading term down.
template <class Key>
struct GradedLexDescending {
  bool operator()(const Key& lhs, const Key& rhs) const {
    int dl = lhs.total_degree();
    int dr = rhs.total_degree();
    if (dl != dr) return dl > dr;
    return lhs.exponents > rhs.exponents;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 0;
    for (auto e : m.exponents) h = h * 131 + e;
    return h;
  }
};

}  // namespace ubercontract
