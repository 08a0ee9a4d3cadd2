#include "lemniscate/series.hpp"

#include <algorithm>
#include <cmath>

namespace lemniscate {

namespace {

// Dense coefficients a_0..a_degree from
// a_{n+2} = -2 / ((n+2)(n+1)) * sum_{i+j+k=n} a_i a_j a_k.
// The square sequence (a*a)_m is extended as new terms appear, so the triple
// convolution is one further convolution against it.
std::vector<double> dense_coefficients(int degree) {
  const auto size = static_cast<std::size_t>(degree) + 1;
  std::vector<double> a(size, 0.0);
  std::vector<double> sq(size, 0.0);  // (a*a)_m
  a[1] = 1.0;
  for (std::size_t n = 0; n + 2 < size; ++n) {
    // a_0..a_{n+1} are final, so (a*a)_m for m <= n is complete.
    double s = 0.0;
    for (std::size_t i = 0; i <= n; ++i) s += a[i] * a[n - i];
    sq[n] = s;
    double cube = 0.0;
    for (std::size_t m = 0; m <= n; ++m) cube += sq[m] * a[n - m];
    const double nd = static_cast<double>(n);
    a[n + 2] = -2.0 * cube / ((nd + 2.0) * (nd + 1.0));
  }
  return a;
}

}  // namespace

SeriesCoefficients::SeriesCoefficients(int degree) : degree_(degree) {
  if (degree < 5) throw DomainError("series degree must be at least 5");
  const std::vector<double> dense = dense_coefficients(degree);
  for (int n = 1; n <= degree; n += 4) {
    reduced_.push_back(dense[static_cast<std::size_t>(n)]);
    derivative_.push_back(static_cast<double>(n) * dense[static_cast<std::size_t>(n)]);
  }
  // Largest radius (capped at 0.5) at which the last stored term stays below
  // the tail guard.
  const int top = 4 * static_cast<int>(reduced_.size() - 1) + 1;
  const double last = std::abs(reduced_.back());
  const double guard_radius = 0.99 * std::pow(kTailGuard / last, 1.0 / top);
  eval_radius_ = std::min(kStandardEvalRadius, guard_radius);
}

double SeriesCoefficients::coefficient(int n) const noexcept {
  if (n < 1 || n > degree_ || n % 4 != 1) return 0.0;
  return reduced_[static_cast<std::size_t>(n / 4)];
}

SeriesCoefficients taylor_coefficients(int degree) { return SeriesCoefficients(degree); }

const SeriesCoefficients& standard_coefficients() {
  static const SeriesCoefficients coeffs(kStandardDegree);
  return coeffs;
}

PairValue eval_series_pair(Complex z, const SeriesCoefficients& coeffs) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("series argument is not finite");
  }
  if (std::abs(z) > coeffs.eval_radius()) {
    throw DomainError("series argument lies outside the evaluation disc");
  }
  const Complex z2 = z * z;
  const Complex u = z2 * z2;
  const auto b = coeffs.reduced();
  const auto d = coeffs.derivative_reduced();
  Complex p = b.back();
  Complex q = d.back();
  for (std::size_t k = b.size() - 1; k-- > 0;) {
    p = p * u + b[k];
    q = q * u + d[k];
  }
  PairValue out;
  out.s = z * p;
  out.s_prime = q;
  out.c = out.s_prime / (1.0 + out.s * out.s);
  out.c_prime = -out.s * (1.0 + out.c * out.c);
  return out;
}

}  // namespace lemniscate
