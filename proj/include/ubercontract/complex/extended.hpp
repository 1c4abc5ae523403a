#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace ubercontract {

/// Non-negative integer or ∞; ∞ compares above every finite value.
class Extended {
 public:
  constexpr Extended() = default;
  constexpr Extended(std::int64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  static constexpr Extended infinity() {
    Extended e;
    e.infinite_ = true;
    return e;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }
  constexpr std::int64_t value() const { return value_; }

  friend constexpr bool operator==(const Extended& a, const Extended& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const Extended& a, const Extended& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  friend constexpr Extended operator+(const Extended& a, const Extended& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Extended(a.value_ + b.value_);
  }
  friend constexpr Extended operator*(std::int64_t k, const Extended& a) {
    if (a.infinite_) return k == 0 ? Extended(0) : infinity();
    return Extended(k * a.value_);
  }

  std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }
  friend std::ostream& operator<<(std::ostream& os, const Extended& e) { return os << e.to_string(); }

 private:
  std::int64_t value_ = 0;
  bool infinite_ = false;
};

}  // namespace ubercontract
