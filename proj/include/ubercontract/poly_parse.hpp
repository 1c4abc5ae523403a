#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "ubercontract/polynomial.hpp"

namespace ubercontract {

/// Parses the canonical text form produced by GroundPoly::to_string, e.g.
/// "x1^2*x3 - 3/2*x2 + 1". Whitespace is ignored; products use '*'.
class GroundPolyParser {
 public:
  explicit GroundPolyParser(std::string_view text) : text_(text) {}

  GroundPoly parse() {
    GroundPoly result;
    skip_space();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    for (;;) {
      GroundPoly t = parse_term();
      result += negative ? -t : t;
      skip_space();
      if (pos_ >= text_.size()) break;
      char op = text_[pos_];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      negative = op == '-';
      ++pos_;
    }
    return result;
  }

 private:
  GroundPoly parse_term() {
    GroundPoly t = parse_factor();
    for (;;) {
      skip_space();
      if (peek() != '*') return t;
      ++pos_;
      t *= parse_factor();
    }
  }

  GroundPoly parse_factor() {
    GroundPoly base = parse_base();
    skip_space();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    return base.pow(static_cast<unsigned>(parse_unsigned()));
  }

  GroundPoly parse_base() {
    skip_space();
    char c = peek();
    if (c == 'x') {
      ++pos_;
      std::size_t index = parse_unsigned();
      if (index < 1 || index > 4) fail("variable index out of range");
      return variable(index - 1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) {
        ++pos_;
      }
      return GroundPoly::constant(parse_rational(text_.substr(start, pos_ - start)));
    }
    if (c == '(') {
      ++pos_;
      std::size_t depth = 1;
      std::size_t start = pos_;
      while (pos_ < text_.size() && depth > 0) {
        if (text_[pos_] == '(') ++depth;
        if (text_[pos_] == ')') --depth;
        ++pos_;
      }
      if (depth != 0) fail("unbalanced parenthesis");
      return GroundPolyParser(text_.substr(start, pos_ - start - 1)).parse();
    }
    fail("unexpected character");
    return {};
  }

  std::size_t parse_unsigned() {
    std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      ++pos_;
    }
    if (start == pos_) fail("expected a number");
    return value;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::kParse, why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline GroundPoly parse_ground_poly(std::string_view text) { return GroundPolyParser(text).parse(); }

}  // namespace ubercontract
