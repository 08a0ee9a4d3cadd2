#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "lemniscate/errors.hpp"

namespace lemniscate::quadrature {

// Nodes and weights of the n-point Gauss–Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(std::size_t n);

template <typename T>
struct QuadratureResult {
  T value{};
  double est_error = 0.0;
  std::size_t nodes = 0;
};

inline constexpr std::size_t kInitialNodes = 8;
inline constexpr std::size_t kMaxNodes = 4096;

// Applies a rule to f over [a, b].
template <typename T, typename F>
T apply_rule(const GaussLegendreRule& rule, F&& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  T sum{};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return half * sum;
}

// Gauss–Legendre with doubling node counts until two successive estimates
// differ by less than target/2. The error estimate is that difference, floored
// at a few ulps of the result so that it bounds the rounding noise between
// refinements as well.
template <typename T, typename F>
QuadratureResult<T> integrate_doubling(F&& f, double a, double b, double target,
                                       std::size_t max_nodes = kMaxNodes) {
  std::size_t n = kInitialNodes;
  T previous = apply_rule<T>(gauss_legendre(n), f, a, b);
  double diff = std::numeric_limits<double>::infinity();
  while (n < max_nodes) {
    n *= 2;
    const T current = apply_rule<T>(gauss_legendre(n), f, a, b);
    diff = std::abs(current - previous);
    previous = current;
    if (diff < 0.5 * target) {
      const double floor = 8.0 * std::numeric_limits<double>::epsilon() * std::abs(current);
      return {current, diff + floor, n};
    }
  }
  throw ComputationError("Gauss-Legendre refinement did not converge within " +
                             std::to_string(max_nodes) + " nodes",
                         diff);
}

}  // namespace lemniscate::quadrature
