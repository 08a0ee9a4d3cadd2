#pragma once

#include "lemniscate/types.hpp"

namespace lemniscate {

struct ArcslResult {
  Complex z;
  double est_error = 0.0;
};

inline constexpr double kArcslMaxModulus = 0.95;
inline constexpr double kBranchMargin = 1e-9;

// Inverse of sl on |w| <= 0.95: the integral of (1 - t^4)^(-1/2) along the
// segment [0, w] with the principal root. tol must lie in [1e-13, 1e-6].
// Throws DomainError outside those ranges.
ArcslResult arcsl(Complex w, double tol);

namespace detail {

// Distance from the image segment {1 - (w t)^4 : t in [0, 1]} to the cut
// (-inf, 0] of the principal square root.
double distance_to_cut(Complex w);

// The segment integral without the modulus restriction. Throws BranchError
// when the integrand comes within kBranchMargin of the cut.
ArcslResult segment_integral(Complex w, double tol);

}  // namespace detail

}  // namespace lemniscate
