#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "ubercontract/error.hpp"

namespace ubercontract {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (GMP canonical form).
using BigRational = mpq_class;

inline BigRational make_rational(long num, long den = 1) {
  if (den == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

inline BigRational parse_rational(std::string_view text) {
  std::string s(text);
  BigRational r;
  if (s.empty() || r.set_str(s, 10) != 0) {
    throw Error(ErrorCode::kParse, "bad rational '" + s + "'");
  }
  if (r.get_den() == 0) throw Error(ErrorCode::kParse, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

inline std::string to_string(const BigRational& r) { return r.get_str(); }

inline bool is_zero(const BigRational& r) { return sgn(r) == 0; }

}  // namespace ubercontract
