#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lemniscate/types.hpp"

namespace lemniscate {

// Taylor coefficients of sl about 0, generated from s'' = -2 s^3 with
// s(0) = 0, s'(0) = 1.
//
// Only degrees 1, 5, 9, ... can be nonzero (sl is odd and sl(iz) = i sl(z)),
// so the coefficients are stored by their index k in a_{4k+1}.
class SeriesCoefficients {
 public:
  // Throws DomainError if degree < 5.
  explicit SeriesCoefficients(int degree);

  int degree() const noexcept { return degree_; }
  double eval_radius() const noexcept { return eval_radius_; }

  // a_n, zero whenever n mod 4 != 1 or n > degree.
  double coefficient(int n) const noexcept;

  // b_k = a_{4k+1}, k = 0 .. reduced().size() - 1
  std::span<const double> reduced() const noexcept { return reduced_; }
  // (4k + 1) b_k, the coefficients of s' as a polynomial in z^4.
  std::span<const double> derivative_reduced() const noexcept { return derivative_; }

 private:
  int degree_;
  double eval_radius_;
  std::vector<double> reduced_;
  std::vector<double> derivative_;
};

inline constexpr int kStandardDegree = 61;
inline constexpr double kStandardEvalRadius = 0.5;
inline constexpr double kTailGuard = 1e-18;

const SeriesCoefficients& standard_coefficients();

SeriesCoefficients taylor_coefficients(int degree);

struct PairValue {
  Complex s;
  Complex c;
  Complex s_prime;
  Complex c_prime;
};

// Evaluates (s, c, s', c') on the series disc. c is recovered as
// s' / (1 + s^2); |s| < 1 on the disc so the quotient is regular.
// Throws DomainError if |z| > eval_radius or z is not finite.
PairValue eval_series_pair(Complex z, const SeriesCoefficients& coeffs);

}  // namespace lemniscate
