#pragma once

#include "lemniscate/types.hpp"

namespace lemniscate {

// The lemniscate constants. K and L come from two independent quadratures, so
// L = sqrt(2) K is a genuine cross-check rather than a definition.
struct LemniscateConstants {
  double K = 0.0;      // integral of (1 + t^4)^(-1/2) over [0, 1]
  double L = 0.0;      // integral of (1 - t^4)^(-1/2) over [0, 1]; sl(L) = 1
  double varpi = 0.0;  // 2 L
  Complex gamma{};     // exp(i pi / 4)
  Complex lambda{};    // gamma / sqrt(2) = (1 + i) / 2

  double K_error = 0.0;  // quadrature error estimates
  double L_error = 0.0;
};

inline constexpr double kMinConstantsTarget = 1e-14;
inline constexpr double kMaxConstantsTarget = 1e-6;

// Throws DomainError for a target outside [1e-14, 1e-6] and ComputationError
// if either quadrature fails to converge.
LemniscateConstants compute_constants(double target_abs_error);

// Constants at the tightest supported target, computed once.
const LemniscateConstants& standard_constants();

// Quadrature of K over [0, 1] with the plain smooth integrand.
double lemniscate_K(double target_abs_error, double* est_error = nullptr);

// L through sigma = sin(theta): integral of (1 + sin^2 theta)^(-1/2) over
// [0, pi/2].
double lemniscate_L(double target_abs_error, double* est_error = nullptr);

// L through sigma = 1 - u^2, a second regularization of the endpoint
// singularity: integral of 2 / sqrt((2 - u^2)(1 + (1 - u^2)^2)) over [0, 1].
double lemniscate_L_square_substitution(double target_abs_error, double* est_error = nullptr);

}  // namespace lemniscate
