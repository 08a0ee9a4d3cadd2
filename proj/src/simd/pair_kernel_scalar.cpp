#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string_view>

#include "lemniscate/simd/pair_kernel.hpp"

namespace lemniscate::simd {

namespace {

// Explicit real arithmetic, in the order the vector kernel uses.
struct Cplx {
  double re;
  double im;
};

inline Cplx mul(Cplx a, Cplx b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

inline Cplx div(Cplx a, Cplx b) {
  const double den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

inline double norm2(Cplx a) { return a.re * a.re + a.im * a.im; }

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(LEMNISCATE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() noexcept {
  static const Isa isa = [] {
    const char* forced = std::getenv("LEMNISCATE_SIMD");
    if (forced && std::string_view(forced) == "scalar") return Isa::scalar;
    return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
  }();
  return isa;
}

void pair_ladder_scalar(const SeriesView& series, const PairBatch& batch) {
  const auto& b = series.s_coeffs;
  const auto& d = series.ds_coeffs;
  const std::size_t top = b.size() - 1;
  const double scale = std::ldexp(1.0, -kLadderDepth);
  for (std::size_t lane = 0; lane < batch.size(); ++lane) {
    const Cplx w{batch.z_re[lane] * scale, batch.z_im[lane] * scale};
    const Cplx w2 = mul(w, w);
    const Cplx u = mul(w2, w2);
    Cplx p{b[top], 0.0};
    Cplx q{d[top], 0.0};
    for (std::size_t k = top; k-- > 0;) {
      p = mul(p, u);
      p.re += b[k];
      q = mul(q, u);
      q.re += d[k];
    }
    Cplx s = mul(w, p);
    const Cplx s2 = mul(s, s);
    Cplx c = div(q, Cplx{1.0 + s2.re, s2.im});

    double den2 = 0.0;
    for (int step = 0; step < kLadderDepth; ++step) {
      const Cplx sc = mul(s, c);
      const Cplx sc2 = mul(sc, sc);
      const Cplx ds{1.0 - sc2.re, 0.0 - sc2.im};
      const Cplx dc{1.0 + sc2.re, sc2.im};
      const Cplx cc = mul(c, c);
      const Cplx ss = mul(s, s);
      const Cplx ns{2.0 * sc.re, 2.0 * sc.im};
      const Cplx nc{cc.re - ss.re, cc.im - ss.im};
      den2 = std::min(norm2(ds), norm2(dc));
      s = div(ns, ds);
      c = div(nc, dc);
    }
    batch.s_re[lane] = s.re;
    batch.s_im[lane] = s.im;
    batch.c_re[lane] = c.re;
    batch.c_im[lane] = c.im;
    batch.min_denominator[lane] = std::sqrt(den2);
  }
}

void pair_ladder(Isa isa, const SeriesView& series, const PairBatch& batch) {
#if defined(LEMNISCATE_HAVE_AVX2)
  if (isa == Isa::avx2 && isa_available(Isa::avx2)) {
    pair_ladder_avx2(series, batch);
    return;
  }
#else
  (void)isa;
#endif
  pair_ladder_scalar(series, batch);
}

}  // namespace lemniscate::simd
