#include "lemniscate/inverse.hpp"

#include <algorithm>
#include <cmath>

#include "lemniscate/quadrature.hpp"

namespace lemniscate {

namespace detail {

namespace {

double distance_to_ray(Complex p) { return p.real() <= 0.0 ? std::abs(p.imag()) : std::abs(p); }

double distance_origin_to_segment(Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(a);
  const double t = std::clamp(-(a.real() * ab.real() + a.imag() * ab.imag()) / len2, 0.0, 1.0);
  return std::abs(a + t * ab);
}

}  // namespace

// The image of t -> 1 - (w t)^4 is the straight segment from 1 to 1 - w^4.
// A segment that starts on the positive axis meets the cut only if its far end
// does, so the distance is attained at that end or at the origin.
double distance_to_cut(Complex w) {
  const Complex w2 = w * w;
  const Complex end = 1.0 - w2 * w2;
  if (end.imag() == 0.0 && end.real() <= 0.0) return 0.0;
  return std::min(distance_to_ray(end), distance_origin_to_segment(Complex(1.0, 0.0), end));
}

ArcslResult segment_integral(Complex w, double tol) {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
    throw DomainError("arcsl argument is not finite");
  }
  if (distance_to_cut(w) < kBranchMargin) {
    throw BranchError("1 - sigma^4 meets the branch cut along [0, w]");
  }
  const Complex w4 = (w * w) * (w * w);
  // sigma = w t
  const auto r = quadrature::integrate_doubling<Complex>(
      [w4](double t) {
        const double t2 = t * t;
        return 1.0 / std::sqrt(1.0 - w4 * (t2 * t2));
      },
      0.0, 1.0, tol / std::max(1.0, std::abs(w)));
  return {w * r.value, r.est_error * std::max(1.0, std::abs(w))};
}

}  // namespace detail

ArcslResult arcsl(Complex w, double tol) {
  if (!(tol >= 1e-13 && tol <= 1e-6)) throw DomainError("arcsl tolerance must lie in [1e-13, 1e-6]");
  if (!(std::abs(w) <= kArcslMaxModulus)) {
    throw DomainError("arcsl is restricted to |w| <= 0.95");
  }
  return detail::segment_integral(w, tol);
}

}  // namespace lemniscate
