// Compiled with -mavx2 -ffp-contract=off; only reached after a runtime CPU
// check.
#include <immintrin.h>

#include <cmath>

#include "lemniscate/simd/pair_kernel.hpp"

namespace lemniscate::simd {

namespace {

struct Cvec {
  __m256d re;
  __m256d im;
};

inline Cvec mul(Cvec a, Cvec b) {
  return {_mm256_sub_pd(_mm256_mul_pd(a.re, b.re), _mm256_mul_pd(a.im, b.im)),
          _mm256_add_pd(_mm256_mul_pd(a.re, b.im), _mm256_mul_pd(a.im, b.re))};
}

inline Cvec div(Cvec a, Cvec b) {
  const __m256d den = _mm256_add_pd(_mm256_mul_pd(b.re, b.re), _mm256_mul_pd(b.im, b.im));
  const __m256d re = _mm256_add_pd(_mm256_mul_pd(a.re, b.re), _mm256_mul_pd(a.im, b.im));
  const __m256d im = _mm256_sub_pd(_mm256_mul_pd(a.im, b.re), _mm256_mul_pd(a.re, b.im));
  return {_mm256_div_pd(re, den), _mm256_div_pd(im, den)};
}

inline __m256d norm2(Cvec a) {
  return _mm256_add_pd(_mm256_mul_pd(a.re, a.re), _mm256_mul_pd(a.im, a.im));
}

}  // namespace

void pair_ladder_avx2(const SeriesView& series, const PairBatch& batch) {
  const auto& b = series.s_coeffs;
  const auto& d = series.ds_coeffs;
  const std::size_t top = b.size() - 1;
  const std::size_t n = batch.size();
  const std::size_t full = n - n % 4;

  const __m256d scale = _mm256_set1_pd(std::ldexp(1.0, -kLadderDepth));
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d zero = _mm256_setzero_pd();

  for (std::size_t lane = 0; lane < full; lane += 4) {
    const Cvec w{_mm256_mul_pd(_mm256_loadu_pd(&batch.z_re[lane]), scale),
                 _mm256_mul_pd(_mm256_loadu_pd(&batch.z_im[lane]), scale)};
    const Cvec w2 = mul(w, w);
    const Cvec u = mul(w2, w2);
    Cvec p{_mm256_set1_pd(b[top]), zero};
    Cvec q{_mm256_set1_pd(d[top]), zero};
    for (std::size_t k = top; k-- > 0;) {
      p = mul(p, u);
      p.re = _mm256_add_pd(p.re, _mm256_set1_pd(b[k]));
      q = mul(q, u);
      q.re = _mm256_add_pd(q.re, _mm256_set1_pd(d[k]));
    }
    Cvec s = mul(w, p);
    const Cvec s2 = mul(s, s);
    Cvec c = div(q, Cvec{_mm256_add_pd(one, s2.re), s2.im});

    __m256d den2 = zero;
    for (int step = 0; step < kLadderDepth; ++step) {
      const Cvec sc = mul(s, c);
      const Cvec sc2 = mul(sc, sc);
      const Cvec ds{_mm256_sub_pd(one, sc2.re), _mm256_sub_pd(zero, sc2.im)};
      const Cvec dc{_mm256_add_pd(one, sc2.re), sc2.im};
      const Cvec cc = mul(c, c);
      const Cvec ss = mul(s, s);
      const Cvec ns{_mm256_mul_pd(two, sc.re), _mm256_mul_pd(two, sc.im)};
      const Cvec nc{_mm256_sub_pd(cc.re, ss.re), _mm256_sub_pd(cc.im, ss.im)};
      den2 = _mm256_min_pd(norm2(ds), norm2(dc));
      s = div(ns, ds);
      c = div(nc, dc);
    }
    _mm256_storeu_pd(&batch.s_re[lane], s.re);
    _mm256_storeu_pd(&batch.s_im[lane], s.im);
    _mm256_storeu_pd(&batch.c_re[lane], c.re);
    _mm256_storeu_pd(&batch.c_im[lane], c.im);
    _mm256_storeu_pd(&batch.min_denominator[lane], _mm256_sqrt_pd(den2));
  }

  if (full < n) {
    const std::size_t tail = n - full;
    pair_ladder_scalar(series, PairBatch{batch.z_re.subspan(full, tail),
                                         batch.z_im.subspan(full, tail),
                                         batch.s_re.subspan(full, tail),
                                         batch.s_im.subspan(full, tail),
                                         batch.c_re.subspan(full, tail),
                                         batch.c_im.subspan(full, tail),
                                         batch.min_denominator.subspan(full, tail)});
  }
}

}  // namespace lemniscate::simd
