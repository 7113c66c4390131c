#pragma once

#include <cmath>
#include <compare>
#include <ostream>
#include <stdexcept>

namespace cutpath {

// A non-negative real or the marker INF. INF compares above every finite
// value and absorbs addition, so weights and capacities never overflow.
class ExtValue {
 public:
  constexpr ExtValue() = default;

  static constexpr ExtValue inf() {
    ExtValue v;
    v.inf_ = true;
    return v;
  }

  static ExtValue finite(double x) {
    if (!(x >= 0.0) || !std::isfinite(x))
      throw std::domain_error("ExtValue::finite: value must be finite and >= 0");
    ExtValue v;
    v.value_ = x;
    return v;
  }

  static constexpr ExtValue zero() { return ExtValue{}; }

  constexpr bool is_inf() const { return inf_; }
  constexpr bool is_finite() const { return !inf_; }

  double value() const {
    if (inf_) throw std::logic_error("ExtValue::value called on INF");
    return value_;
  }

  // Finite value, or `surrogate` when INF.
  constexpr double value_or(double surrogate) const { return inf_ ? surrogate : value_; }

  friend ExtValue operator+(ExtValue a, ExtValue b) {
    if (a.inf_ || b.inf_) return inf();
    return finite(a.value_ + b.value_);
  }

  friend constexpr bool operator==(ExtValue a, ExtValue b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.value_ == b.value_);
  }

  friend constexpr std::weak_ordering operator<=>(ExtValue a, ExtValue b) {
    if (a.inf_ || b.inf_) return a.inf_ <=> b.inf_;
    if (a.value_ < b.value_) return std::weak_ordering::less;
    if (a.value_ > b.value_) return std::weak_ordering::greater;
    return std::weak_ordering::equivalent;
  }

  friend std::ostream& operator<<(std::ostream& os, ExtValue v) {
    if (v.inf_) return os << "INF";
    return os << v.value_;
  }

 private:
  double value_ = 0.0;
  bool inf_ = false;
};

}  // namespace cutpath
