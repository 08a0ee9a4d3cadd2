#include "lemniscate/evaluator.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace lemniscate {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Nearest multiple k of period with x - k*period in [-period/2, period/2).
long long reduce_component(double x, double period, double half, double& rem) {
  double k = std::floor(x / period + 0.5);
  rem = x - k * period;
  if (rem >= half) {
    k += 1.0;
    rem = x - k * period;
  } else if (rem < -half) {
    k -= 1.0;
    rem = x - k * period;
  }
  return static_cast<long long>(k);
}

struct KernelResult {
  Complex s;
  Complex c;
  double min_den;
};

KernelResult run_scalar_kernel(const SeriesCoefficients& coeffs, Complex z0) {
  const double re = z0.real();
  const double im = z0.imag();
  double s_re, s_im, c_re, c_im, den;
  simd::pair_ladder_scalar(
      {coeffs.reduced(), coeffs.derivative_reduced()},
      {std::span(&re, 1), std::span(&im, 1), std::span(&s_re, 1), std::span(&s_im, 1),
       std::span(&c_re, 1), std::span(&c_im, 1), std::span(&den, 1)});
  return {{s_re, s_im}, {c_re, c_im}, den};
}

void check_denominator(double min_den) {
  if (!(min_den >= kDenominatorThreshold)) {
    throw ConsistencyError("duplication denominator vanished away from a known singularity");
  }
}

ExtendedValue scaled(const ExtendedValue& v, int sign) {
  if (v.is_pole()) return v;
  return v.value() * static_cast<double>(sign);
}

}  // namespace

ReducedArgument reduce_argument(Complex z, const LemniscateConstants& consts) {
  if (!finite(z)) throw DomainError("argument is not finite");
  if (std::abs(z.real()) > kMaxArgument || std::abs(z.imag()) > kMaxArgument) {
    throw DomainError("argument too large for lattice reduction");
  }
  const double period = 2.0 * consts.L;
  ReducedArgument r;
  double re0 = 0.0;
  double im0 = 0.0;
  r.m = reduce_component(z.real(), period, consts.L, re0);
  r.n = reduce_component(z.imag(), period, consts.L, im0);
  r.z0 = Complex(re0, im0);
  r.sign = ((r.m + r.n) % 2 == 0) ? 1 : -1;
  return r;
}

Evaluator::Evaluator(LemniscateConstants consts, SeriesCoefficients coeffs)
    : consts_(consts), coeffs_(std::move(coeffs)) {
  const double reach = std::numbers::sqrt2 * consts_.L * std::ldexp(1.0, -simd::kLadderDepth);
  if (coeffs_.eval_radius() < reach) {
    throw DomainError("series disc too small for the duplication ladder");
  }
}

const Evaluator& Evaluator::standard() {
  static const Evaluator evaluator(standard_constants(), standard_coefficients());
  return evaluator;
}

Evaluator::Anchor Evaluator::nearest_anchor(Complex z0) const noexcept {
  const double L = consts_.L;
  const double sx = z0.real() >= 0.0 ? L : -L;
  const double sy = z0.imag() >= 0.0 ? L : -L;
  const std::array<Anchor, 3> candidates{{
      {Neighborhood::sl_pole, Complex(sx, sy)},
      {Neighborhood::cl_pole, Complex(0.0, sy)},
      {Neighborhood::cl_zero, Complex(sx, 0.0)},
  }};
  Anchor best{Neighborhood::regular, Complex{}};
  double best_dist = kNearZoneRadius;
  for (const auto& a : candidates) {
    const double d = std::abs(z0 - a.point);
    if (d < best_dist) {
      best_dist = d;
      best = a;
    }
  }
  return best;
}

Neighborhood Evaluator::classify(Complex z0) const noexcept { return nearest_anchor(z0).kind; }

std::pair<Complex, Complex> Evaluator::regular_pair(Complex z0) const {
  const KernelResult k = run_scalar_kernel(coeffs_, z0);
  check_denominator(k.min_den);
  return {k.s, k.c};
}

FullValue Evaluator::from_regular(const ReducedArgument& r, Complex s, Complex c,
                                  double min_den) const {
  check_denominator(min_den);
  FullValue v;
  v.s = s;
  v.c = c;
  v.s_inv = std::abs(r.z0) < kPoleThreshold ? ExtendedValue::pole() : ExtendedValue(1.0 / s);
  v.c_inv = 1.0 / c;
  return {scaled(v.s, r.sign), scaled(v.c, r.sign), scaled(v.s_inv, r.sign),
          scaled(v.c_inv, r.sign)};
}

// Shift identities around each special point p, with w = z0 - p:
//   corner p, sigma = +1 on L+iL and -L-iL, -1 on the other two:
//     sl = -sigma i / sl(w),  cl = -sigma i / cl(w)
//   p = -iL (tau = +1) or +iL (tau = -1):
//     sl = -tau i / cl(w),    cl = tau i / sl(w)
//   p = +L (rho = +1) or -L (rho = -1):
//     sl = rho cl(w),         cl = -rho sl(w)
FullValue Evaluator::near_anchor(const ReducedArgument& r, const Anchor& a) const {
  const Complex w = r.z0 - a.point;
  const bool at_point = std::abs(w) < kPoleThreshold;
  const auto [sw, cw] = regular_pair(w);
  FullValue v;
  switch (a.kind) {
    case Neighborhood::sl_pole: {
      const double sigma = (a.point.real() * a.point.imag() > 0.0) ? 1.0 : -1.0;
      v.s = at_point ? ExtendedValue::pole() : ExtendedValue(-sigma * kI / sw);
      v.c = -sigma * kI / cw;
      v.s_inv = sigma * kI * sw;
      v.c_inv = sigma * kI * cw;
      break;
    }
    case Neighborhood::cl_pole: {
      const double tau = a.point.imag() < 0.0 ? 1.0 : -1.0;
      v.s = -tau * kI / cw;
      v.c = at_point ? ExtendedValue::pole() : ExtendedValue(tau * kI / sw);
      v.s_inv = tau * kI * cw;
      v.c_inv = -tau * kI * sw;
      break;
    }
    case Neighborhood::cl_zero: {
      const double rho = a.point.real() > 0.0 ? 1.0 : -1.0;
      v.s = rho * cw;
      v.c = -rho * sw;
      v.s_inv = rho / cw;
      v.c_inv = at_point ? ExtendedValue::pole() : ExtendedValue(-rho / sw);
      break;
    }
    case Neighborhood::regular:
      break;
  }
  return {scaled(v.s, r.sign), scaled(v.c, r.sign), scaled(v.s_inv, r.sign),
          scaled(v.c_inv, r.sign)};
}

FullValue Evaluator::full(Complex z) const {
  const ReducedArgument r = reduce(z);
  const Anchor a = nearest_anchor(r.z0);
  if (a.kind != Neighborhood::regular) return near_anchor(r, a);
  const KernelResult k = run_scalar_kernel(coeffs_, r.z0);
  return from_regular(r, k.s, k.c, k.min_den);
}

std::pair<ExtendedValue, ExtendedValue> Evaluator::pair(Complex z) const {
  const FullValue v = full(z);
  return {v.s, v.c};
}

ExtendedValue Evaluator::sl_prime(Complex z) const {
  const FullValue v = full(z);
  if (v.s.is_pole()) return ExtendedValue::pole();
  if (v.c.is_pole() || std::abs(v.c.value()) > 2.0) {
    // cl (1 + sl^2) = 2 cl / (1 + cl^2), written in 1/cl
    const Complex ci = v.c_inv.value();
    return 2.0 * ci / (1.0 + ci * ci);
  }
  const Complex s = v.s.value();
  return v.c.value() * (1.0 + s * s);
}

void Evaluator::full_batch(std::span<const Complex> zs, std::span<FullValue> out,
                           simd::Isa isa) const {
  if (out.size() != zs.size()) throw DomainError("batch output size mismatch");
  std::vector<std::size_t> index;
  std::vector<ReducedArgument> reduced;
  std::vector<double> z_re, z_im;
  index.reserve(zs.size());
  reduced.reserve(zs.size());
  z_re.reserve(zs.size());
  z_im.reserve(zs.size());
  for (std::size_t i = 0; i < zs.size(); ++i) {
    const ReducedArgument r = reduce(zs[i]);
    const Anchor a = nearest_anchor(r.z0);
    if (a.kind != Neighborhood::regular) {
      out[i] = near_anchor(r, a);
      continue;
    }
    index.push_back(i);
    reduced.push_back(r);
    z_re.push_back(r.z0.real());
    z_im.push_back(r.z0.imag());
  }
  const std::size_t n = index.size();
  std::vector<double> s_re(n), s_im(n), c_re(n), c_im(n), den(n);
  simd::pair_ladder(isa, {coeffs_.reduced(), coeffs_.derivative_reduced()},
                    {z_re, z_im, s_re, s_im, c_re, c_im, den});
  for (std::size_t j = 0; j < n; ++j) {
    out[index[j]] = from_regular(reduced[j], {s_re[j], s_im[j]}, {c_re[j], c_im[j]}, den[j]);
  }
}

std::pair<ExtendedValue, ExtendedValue> eval_pair(Complex z) {
  return Evaluator::standard().pair(z);
}

ExtendedValue eval_sl(Complex z) { return Evaluator::standard().sl(z); }

ExtendedValue eval_cl(Complex z) { return Evaluator::standard().cl(z); }

}  // namespace lemniscate
