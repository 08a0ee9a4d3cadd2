#include "lemniscate/constants.hpp"

#include <cmath>
#include <numbers>

#include "lemniscate/quadrature.hpp"

namespace lemniscate {

namespace {

void check_target(double target) {
  if (!(target >= kMinConstantsTarget && target <= kMaxConstantsTarget)) {
    throw DomainError("constants target error must lie in [1e-14, 1e-6]");
  }
}

template <typename F>
double integrate(F&& f, double a, double b, double target, double* est_error) {
  const auto r = quadrature::integrate_doubling<double>(f, a, b, target);
  if (est_error) *est_error = r.est_error;
  return r.value;
}

}  // namespace

double lemniscate_K(double target, double* est_error) {
  check_target(target);
  return integrate([](double t) { return 1.0 / std::sqrt(1.0 + t * t * t * t); }, 0.0, 1.0,
                   target, est_error);
}

double lemniscate_L(double target, double* est_error) {
  check_target(target);
  return integrate(
      [](double theta) {
        const double s = std::sin(theta);
        return 1.0 / std::sqrt(1.0 + s * s);
      },
      0.0, 0.5 * std::numbers::pi, target, est_error);
}

double lemniscate_L_square_substitution(double target, double* est_error) {
  check_target(target);
  return integrate(
      [](double u) {
        const double u2 = u * u;
        const double sigma = 1.0 - u2;
        return 2.0 / std::sqrt((2.0 - u2) * (1.0 + sigma * sigma));
      },
      0.0, 1.0, target, est_error);
}

LemniscateConstants compute_constants(double target) {
  LemniscateConstants c;
  c.K = lemniscate_K(target, &c.K_error);
  c.L = lemniscate_L(target, &c.L_error);
  c.varpi = 2.0 * c.L;
  const double h = 0.5 * std::numbers::sqrt2;
  c.gamma = Complex(h, h);
  c.lambda = Complex(0.5, 0.5);
  return c;
}

const LemniscateConstants& standard_constants() {
  static const LemniscateConstants constants = compute_constants(kMinConstantsTarget);
  return constants;
}

}  // namespace lemniscate
