#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ubercontract/tame/generator.hpp"

namespace ubercontract::tame {

struct Letter {
  Generator generator;
  bool inverted = false;

  GroundMap forward() const { return inverted ? generator.inverse() : generator.forward(); }
  GroundMap backward() const { return inverted ? generator.forward() : generator.inverse(); }
  Letter inverse() const { return {generator, !inverted}; }
  std::string to_string() const { return generator.to_string() + (inverted ? "^-1" : ""); }
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Element of the tame group: a generator word together with its expanded
/// forward and inverse maps. The product s*t is the composition s ∘ t.
class TameElement {
 public:
  TameElement() : forward_(GroundMap::identity()), inverse_(GroundMap::identity()) {}

  static TameElement identity() { return {}; }

  static TameElement from_generator(const Generator& g, bool inverted = false) {
    return from_word({Letter{g, inverted}});
  }

  /// forward = l1 ∘ l2 ∘ ... ∘ ln, inverse = ln^-1 ∘ ... ∘ l1^-1.
  static TameElement from_word(Word word) {
    TameElement e;
    for (const auto& letter : word) {
      e.forward_ = compose(e.forward_, letter.forward());
      e.inverse_ = compose(letter.backward(), e.inverse_);
    }
    e.word_ = std::move(word);
    e.check_invariants();
    return e;
  }

  /// Builds an element from maps already known to be mutually inverse; used
  /// for formula-level constructors. The invariants are verified.
  static TameElement from_maps(Word word, GroundMap forward, GroundMap inverse) {
    TameElement e;
    e.word_ = std::move(word);
    e.forward_ = std::move(forward);
    e.inverse_ = std::move(inverse);
    e.check_invariants();
    return e;
  }

  const Word& word() const { return word_; }
  const GroundMap& forward() const { return forward_; }
  const GroundMap& inverse_map() const { return inverse_; }

  TameElement inverse() const {
    TameElement e;
    e.word_.reserve(word_.size());
    for (auto it = word_.rbegin(); it != word_.rend(); ++it) e.word_.push_back(it->inverse());
    e.forward_ = inverse_;
    e.inverse_ = forward_;
    return e;
  }

  friend TameElement operator*(const TameElement& s, const TameElement& t) {
    TameElement e;
    e.word_ = s.word_;
    e.word_.insert(e.word_.end(), t.word_.begin(), t.word_.end());
    e.forward_ = compose(s.forward_, t.forward_);
    e.inverse_ = compose(t.inverse_, s.inverse_);
    return e;
  }

  TameElement power(int n) const {
    TameElement base = n < 0 ? inverse() : *this;
    TameElement r;
    for (int i = 0; i < (n < 0 ? -n : n); ++i) r = r * base;
    return r;
  }

  /// Equality of group elements (by expanded forward map, not by word).
  bool same_element(const TameElement& o) const { return forward_ == o.forward_; }

  std::string word_string() const {
    if (word_.empty()) return "id";
    std::string out;
    for (std::size_t i = 0; i < word_.size(); ++i) {
      if (i > 0) out += " * ";
      out += word_[i].to_string();
    }
    return out;
  }

  void check_invariants() const {
    const GroundMap id = GroundMap::identity();
    if (compose(forward_, inverse_) != id || compose(inverse_, forward_) != id) {
      throw Error(ErrorCode::kInvalidArgument, "forward and inverse maps are not mutually inverse");
    }
    if (quadratic_form_pullback(forward_) != quadratic_form()) {
      throw Error(ErrorCode::kInvalidArgument, "map does not preserve x1*x4 - x2*x3");
    }
  }

 private:
  Word word_;
  GroundMap forward_;
  GroundMap inverse_;
};

/// Parses the text produced by TameElement::word_string, e.g.
/// "O[0 0 0 1; 0 1 0 0; 0 0 1 0; 1 0 0 0] * E[x1^2]^-1".
inline Word parse_word(std::string_view text) {
  Word word;
  std::string s(text);
  auto trim = [](std::string v) {
    auto b = v.find_first_not_of(' ');
    auto e = v.find_last_not_of(' ');
    return b == std::string::npos ? std::string() : v.substr(b, e - b + 1);
  };
  if (trim(s) == "id" || trim(s).empty()) return word;
  // Split on '*' at bracket depth zero.
  std::vector<std::string> parts;
  int depth = 0;
  std::string current;
  for (char c : s) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == '*' && depth == 0) {
      parts.push_back(trim(current));
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(trim(current));
  for (const auto& part : parts) {
    bool inverted = false;
    std::string body = part;
    if (body.size() > 3 && body.compare(body.size() - 3, 3, "^-1") == 0) {
      inverted = true;
      body = trim(body.substr(0, body.size() - 3));
    }
    word.push_back(Letter{parse_generator(body), inverted});
  }
  return word;
}

/// (x4 + x3*x1^2 + x2*x1^2 + x1^5, x2 + x1^3, x3 + x1^3, x1)
inline GroundMap explicit_g_forward() {
  GroundMap g;
  g.components[0] = x4() + x3() * x1().pow(2) + x2() * x1().pow(2) + x1().pow(5);
  g.components[1] = x2() + x1().pow(3);
  g.components[2] = x3() + x1().pow(3);
  g.components[3] = x1();
  return g;
}

/// (x4, x2 - x4^3, x3 - x4^3, x1 - x2*x4^2 - x3*x4^2 + x4^5), obtained by
/// solving y4 = x1, y2 = x2 + x1^3, y3 = x3 + x1^3, y1 = x4 + ... in turn.
inline GroundMap explicit_g_inverse() {
  GroundMap h;
  h.components[0] = x4();
  h.components[1] = x2() - x4().pow(3);
  h.components[2] = x3() - x4().pow(3);
  h.components[3] = x1() - x2() * x4().pow(2) - x3() * x4().pow(2) + x4().pow(5);
  return h;
}

/// g = s14 ∘ s23 ∘ e ∘ s23 ∘ e with e = (x1, x2 + x1^3, x3, x4 + x3*x1^2) and
/// s14, s23 the coordinate swaps x1<->x4, x2<->x3.
inline Word explicit_g_word() {
  Generator s14 = Generator::orthogonal(swap_14_matrix());
  Generator s23 = Generator::orthogonal(swap_23_matrix());
  Generator e = Generator::elementary(x1().pow(2));
  return {Letter{s14}, Letter{s23}, Letter{e}, Letter{s23}, Letter{e}};
}

/// The hyperbolic element g. The displayed formula is normative; the stored
/// word is checked to expand to the same map.
inline TameElement explicit_g() {
  TameElement g = TameElement::from_maps(explicit_g_word(), explicit_g_forward(), explicit_g_inverse());
  if (!TameElement::from_word(explicit_g_word()).same_element(g)) {
    throw Error(ErrorCode::kInvalidArgument, "generator word for g does not match its formula");
  }
  return g;
}

}  // namespace ubercontract::tame
