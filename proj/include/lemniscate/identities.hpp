#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lemniscate/evaluator.hpp"
#include "lemniscate/types.hpp"

namespace lemniscate {

// Maximum residual per identity over the usable samples. Residuals are
// measured as |sum of terms| / max(1, max |term|): absolute near the origin,
// relative where the functions are large.
struct ResidualReport {
  std::map<std::string, double> residuals;
  int sample_count = 0;    // samples that entered the maxima
  int excluded_count = 0;  // samples dropped for pole proximity

  double max_residual() const;
};

inline constexpr std::uint64_t kStandardSeed = 1729;
inline constexpr int kStandardSamples = 500;
inline constexpr double kStandardWindow = 6.0;

// Names of every registered identity, in report order.
const std::vector<std::string>& identity_names();

// Draws `samples` pairs (z, a) uniformly from |Re|, |Im| <= window and
// evaluates every identity; a is the second argument of the addition
// formulas. Throws DomainError if samples < 1, window <= 0 or no sample is
// usable.
ResidualReport residual_suite(std::uint64_t seed, int samples, double window,
                              const Evaluator& ev = Evaluator::standard());

// Same, at explicit points. zs and as must have equal length.
ResidualReport residuals_at(std::span<const Complex> zs, std::span<const Complex> as,
                            const Evaluator& ev = Evaluator::standard());

// One identity at one point; nullopt when the point is excluded.
// Throws DomainError for an unknown name.
std::optional<double> identity_residual(std::string_view name, Complex z, Complex a,
                                        const Evaluator& ev = Evaluator::standard());

// True when z is within `radius` of a pole of sl or of cl.
bool near_pole(Complex z, double radius, const Evaluator& ev = Evaluator::standard());

struct WeierstrassValue {
  ExtendedValue p;
  ExtendedValue p_prime;
};

// The pseudolemniscatic function lambda^2 / sl(lambda z)^2, with
// p'^2 = 4p^3 + p (g2 = -1, g3 = 0).
WeierstrassValue weierstrass_pseudo(Complex z, const Evaluator& ev = Evaluator::standard());

// The lemniscatic function (1/2) sl(z/sqrt 2)^-2 with periods 4K, 4iK and
// P'^2 = 4P^3 - P (g2 = 1, g3 = 0).
WeierstrassValue weierstrass_lemniscatic(Complex z, const Evaluator& ev = Evaluator::standard());

// Half-periods of the pseudolemniscatic lattice and the values of the
// Weierstrass function there. The triple is taken as is; it does not sum to
// zero.
struct HalfPeriods {
  Complex omega_f;
  Complex omega_g;
  Complex omega_h;
  Complex e_f;
  Complex e_g;
  Complex e_h;
};

HalfPeriods half_periods(const LemniscateConstants& consts = standard_constants());

struct NevilleValue {
  ExtendedValue fj;
  ExtendedValue gj;
  ExtendedValue hj;
};

// fj = lambda / sl(lambda z). gj and hj come from the half-argument formulas
// at u = lambda z / 2:
//   gj = lambda (cl^2 - sl^2) / (2 sl cl),  hj = lambda (1 + sl^2 cl^2) / (2 sl cl)
NevilleValue neville_primitives(Complex z, const Evaluator& ev = Evaluator::standard());

}  // namespace lemniscate
