#pragma once

#include <complex>

#include "lemniscate/errors.hpp"

namespace lemniscate {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

// A point of the Riemann sphere: a finite complex value or the pole marker.
class ExtendedValue {
 public:
  constexpr ExtendedValue() = default;
  constexpr ExtendedValue(Complex v) : value_(v) {}  // NOLINT: implicit by intent

  static constexpr ExtendedValue pole() {
    ExtendedValue p;
    p.pole_ = true;
    return p;
  }

  constexpr bool is_pole() const noexcept { return pole_; }
  constexpr bool is_finite() const noexcept { return !pole_; }

  Complex value() const {
    if (pole_) throw DomainError("value requested at a pole");
    return value_;
  }

  friend bool operator==(const ExtendedValue& a, const ExtendedValue& b) {
    return a.pole_ == b.pole_ && (a.pole_ || a.value_ == b.value_);
  }

 private:
  Complex value_{};
  bool pole_ = false;
};

}  // namespace lemniscate
