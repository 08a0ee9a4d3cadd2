#pragma once

#include <span>
#include <utility>

#include "lemniscate/constants.hpp"
#include "lemniscate/series.hpp"
#include "lemniscate/simd/pair_kernel.hpp"
#include "lemniscate/types.hpp"

namespace lemniscate {

// Distance from a reduced argument to a singular representative below which
// the value is reported as a pole.
inline constexpr double kPoleThreshold = 1e-6;
// Smallest duplication denominator accepted on the regular path.
inline constexpr double kDenominatorThreshold = 1e-12;
// Radius around the special points of the fundamental square inside which the
// shift identities replace the duplication ladder.
inline constexpr double kNearZoneRadius = 0.3;
// Arguments with a component beyond this are rejected: the lattice parity is
// no longer representable.
inline constexpr double kMaxArgument = 1e15;

// z = z0 + 2L m + 2iL n with z0 in [-L, L) x [-L, L); sl and cl both pick up
// the factor sign = (-1)^(m+n).
struct ReducedArgument {
  Complex z0;
  int sign = 1;
  long long m = 0;
  long long n = 0;
};

ReducedArgument reduce_argument(Complex z, const LemniscateConstants& consts);

// Which special point of the fundamental square a reduced argument is near.
enum class Neighborhood {
  regular,  // duplication ladder
  sl_pole,  // corners +-L +-iL
  cl_pole,  // +-iL
  cl_zero,  // +-L
};

// sl, cl and their reciprocals. The reciprocals are evaluated directly near
// the singular points, so each of the four is accurate where it is finite.
struct FullValue {
  ExtendedValue s;
  ExtendedValue c;
  ExtendedValue s_inv;
  ExtendedValue c_inv;
};

class Evaluator {
 public:
  // Throws DomainError if the series disc is too small for the fixed ladder.
  Evaluator(LemniscateConstants consts, SeriesCoefficients coeffs);

  static const Evaluator& standard();

  const LemniscateConstants& constants() const noexcept { return consts_; }
  const SeriesCoefficients& coefficients() const noexcept { return coeffs_; }

  ReducedArgument reduce(Complex z) const { return reduce_argument(z, consts_); }
  Neighborhood classify(Complex z0) const noexcept;

  FullValue full(Complex z) const;
  std::pair<ExtendedValue, ExtendedValue> pair(Complex z) const;
  ExtendedValue sl(Complex z) const { return full(z).s; }
  ExtendedValue cl(Complex z) const { return full(z).c; }
  // sl' = cl (1 + sl^2)
  ExtendedValue sl_prime(Complex z) const;

  // Batched evaluation. Points on the regular path go through the selected
  // pair kernel; the rest take the scalar path. Results equal full(z)
  // element-wise for every kernel variant.
  void full_batch(std::span<const Complex> zs, std::span<FullValue> out,
                  simd::Isa isa = simd::active_isa()) const;

 private:
  struct Anchor {
    Neighborhood kind;
    Complex point;
  };
  Anchor nearest_anchor(Complex z0) const noexcept;
  FullValue from_regular(const ReducedArgument& r, Complex s, Complex c, double min_den) const;
  FullValue near_anchor(const ReducedArgument& r, const Anchor& a) const;
  std::pair<Complex, Complex> regular_pair(Complex z0) const;

  LemniscateConstants consts_;
  SeriesCoefficients coeffs_;
};

// Free functions over Evaluator::standard().
std::pair<ExtendedValue, ExtendedValue> eval_pair(Complex z);
ExtendedValue eval_sl(Complex z);
ExtendedValue eval_cl(Complex z);

}  // namespace lemniscate
