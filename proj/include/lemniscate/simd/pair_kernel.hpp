#pragma once

#include <cstddef>
#include <span>
#include <string_view>

namespace lemniscate::simd {

// Structure-of-arrays view over a batch of reduced arguments and the outputs
// of the series + duplication ladder. All spans must have equal length.
struct PairBatch {
  std::span<const double> z_re;
  std::span<const double> z_im;
  std::span<double> s_re;
  std::span<double> s_im;
  std::span<double> c_re;
  std::span<double> c_im;
  // min(|1 - s^2 c^2|, |1 + s^2 c^2|) at the last duplication step
  std::span<double> min_denominator;

  std::size_t size() const noexcept { return z_re.size(); }
};

// Coefficients the ladder needs: b_k = a_{4k+1} and (4k+1) b_k.
struct SeriesView {
  std::span<const double> s_coeffs;
  std::span<const double> ds_coeffs;
};

// Number of duplications applied after the series evaluation; the series is
// evaluated at z / 2^kLadderDepth.
inline constexpr int kLadderDepth = 2;

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;

// True when the variant was compiled in and the running CPU supports it.
bool isa_available(Isa isa) noexcept;

// Best available variant, unless LEMNISCATE_SIMD=scalar is set in the
// environment. Resolved once.
Isa active_isa() noexcept;

// Reference kernel. Lane-wise:
//   w = z/4, s(w) = w P(w^4), s'(w) = Q(w^4), c = s'/(1 + s^2),
//   then twice: s <- 2sc/(1 - s^2c^2), c <- (c^2 - s^2)/(1 + s^2c^2).
void pair_ladder_scalar(const SeriesView& series, const PairBatch& batch);

#if defined(LEMNISCATE_HAVE_AVX2)
// Four lanes at a time with the same operation order as the reference
// kernel; results are bit-identical.
void pair_ladder_avx2(const SeriesView& series, const PairBatch& batch);
#endif

// Runs the requested variant, falling back to scalar if it is unavailable.
void pair_ladder(Isa isa, const SeriesView& series, const PairBatch& batch);

inline void pair_ladder(const SeriesView& series, const PairBatch& batch) {
  pair_ladder(active_isa(), series, batch);
}

}  // namespace lemniscate::simd
