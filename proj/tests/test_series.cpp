#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "lemniscate/constants.hpp"
#include "lemniscate/series.hpp"
#include "oracles/rk4.hpp"

using namespace lemniscate;

namespace {

// Independent oracle: dense Cauchy-product recurrence for the first-order
// system s' = c(1 + s^2), c' = -s(1 + c^2), carrying both series and every
// degree.
std::vector<double> first_order_system_coefficients(int degree) {
  const auto n = static_cast<std::size_t>(degree) + 1;
  std::vector<double> s(n, 0.0), c(n, 0.0);
  c[0] = 1.0;
  const auto product = [](const std::vector<double>& a, const std::vector<double>& b,
                          std::size_t k) {
    double sum = 0.0;
    for (std::size_t i = 0; i <= k; ++i) sum += a[i] * b[k - i];
    return sum;
  };
  std::vector<double> s2(n, 0.0), c2(n, 0.0);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    s2[k] = product(s, s, k);
    c2[k] = product(c, c, k);
    // (k+1) s_{k+1} = c_k + (c s^2)_k
    s[k + 1] = (c[k] + product(c, s2, k)) / static_cast<double>(k + 1);
    c[k + 1] = -(s[k] + product(s, c2, k)) / static_cast<double>(k + 1);
  }
  return s;
}

}  // namespace

TEST_CASE("low-order coefficients") {
  const SeriesCoefficients coeffs = taylor_coefficients(61);
  CHECK(coeffs.coefficient(0) == 0.0);
  CHECK(coeffs.coefficient(1) == 1.0);
  CHECK(coeffs.coefficient(3) == 0.0);
  CHECK(coeffs.coefficient(5) == doctest::Approx(-0.1).epsilon(1e-15));
  CHECK(coeffs.coefficient(9) == doctest::Approx(1.0 / 120.0).epsilon(1e-15));
}

TEST_CASE("coefficients match the first-order system recurrence") {
  const SeriesCoefficients coeffs = taylor_coefficients(61);
  const std::vector<double> oracle = first_order_system_coefficients(61);
  for (int n = 0; n <= 61; ++n) {
    const double expected = oracle[static_cast<std::size_t>(n)];
    if (n % 4 != 1) {
      // the dense recurrence only cancels these up to rounding
      CHECK(std::abs(expected) < 1e-15);
      CHECK(coeffs.coefficient(n) == 0.0);
    } else {
      CHECK(coeffs.coefficient(n) == doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("tail guard holds at the evaluation radius") {
  for (int degree : {5, 9, 21, 61, 101}) {
    const SeriesCoefficients coeffs = taylor_coefficients(degree);
    const int top = 4 * static_cast<int>(coeffs.reduced().size() - 1) + 1;
    CHECK(std::abs(coeffs.coefficient(top)) * std::pow(coeffs.eval_radius(), top) < 1e-18);
    CHECK(coeffs.eval_radius() <= 0.5);
  }
  CHECK(standard_coefficients().eval_radius() == 0.5);
  CHECK(standard_coefficients().degree() == 61);
  CHECK_THROWS_AS(taylor_coefficients(4), DomainError);
}

TEST_CASE("series pair against the RK oracle") {
  const auto& coeffs = standard_coefficients();
  const auto origin = eval_series_pair(0.0, coeffs);
  CHECK(origin.s == Complex(0.0, 0.0));
  CHECK(origin.c == Complex(1.0, 0.0));

  const auto rk = oracle::rk4_to(0.5);
  const auto p = eval_series_pair(0.5, coeffs);
  CHECK(std::abs(p.s - rk.s) <= 1e-10);
  CHECK(std::abs(p.c - rk.c) <= 1e-10);

  const auto rk03 = oracle::rk4_to(0.3);
  const auto q = eval_series_pair(Complex(0.0, 0.3), coeffs);
  CHECK(std::abs(q.s - Complex(0.0, 1.0) * rk03.s) <= 1e-10);
}

TEST_CASE("series pair invariants on the disc") {
  const auto& coeffs = standard_coefficients();
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> radius(0.0, 0.5), angle(0.0, 2.0 * std::numbers::pi);
  for (int i = 0; i < 200; ++i) {
    const Complex z = std::polar(radius(rng), angle(rng));
    const auto p = eval_series_pair(z, coeffs);
    const Complex s2 = p.s * p.s, c2 = p.c * p.c;
    CHECK(std::abs(s2 + s2 * c2 + c2 - 1.0) <= 1e-12);
    CHECK(std::abs((1.0 + s2) * (1.0 + c2) - 2.0) <= 1e-12);
    CHECK(std::abs(p.s_prime * p.s_prime + s2 * s2 - 1.0) <= 1e-12);
    CHECK(std::abs(p.s_prime - p.c * (1.0 + s2)) <= 1e-15);
    CHECK(std::abs(p.c_prime + p.s * (1.0 + c2)) <= 1e-15);
    CHECK(std::abs(p.s) < 1.0);

    const auto conj = eval_series_pair(std::conj(z), coeffs);
    CHECK(std::abs(conj.s - std::conj(p.s)) <= 1e-15);
    CHECK(std::abs(conj.c - std::conj(p.c)) <= 1e-15);
    const auto neg = eval_series_pair(-z, coeffs);
    CHECK(std::abs(neg.s + p.s) <= 1e-15);
    CHECK(std::abs(neg.c - p.c) <= 1e-15);
  }
}

TEST_CASE("sl(gamma t) / gamma is real and increasing") {
  const auto& coeffs = standard_coefficients();
  const Complex gamma = standard_constants().gamma;
  double previous = -1.0;
  for (int i = -50; i <= 50; ++i) {
    const double t = 0.5 * i / 50.0;
    const Complex f = eval_series_pair(gamma * t, coeffs).s / gamma;
    CHECK(std::abs(f.imag()) <= 1e-13);
    CHECK(f.real() > previous);
    previous = f.real();
  }
}

TEST_CASE("arguments outside the disc are rejected") {
  const auto& coeffs = standard_coefficients();
  CHECK_THROWS_AS(eval_series_pair(Complex(0.4, 0.4), coeffs), DomainError);
  CHECK_THROWS_AS(eval_series_pair(Complex(std::nan(""), 0.0), coeffs), DomainError);
  CHECK_NOTHROW(eval_series_pair(Complex(0.0, -0.5), coeffs));
}
