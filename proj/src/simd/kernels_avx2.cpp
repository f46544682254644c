// AVX2 + FMA variants of the inner kernels. This translation unit is compiled
// with -mavx2 -mfma and must only be entered after a CPU feature check.

#include <immintrin.h>

#include <cmath>

#include "log_table.hpp"
#include "zc/simd/kernels.hpp"

namespace zc::simd::avx2 {
namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// exp(x) for |x| <= 700. Cody-Waite reduction by ln 2, degree-13 Taylor on
// |r| <= ln2/2 (truncation below 5e-18 relative).
inline __m256d exp_pd(__m256d x) {
  const __m256d log2e = _mm256_set1_pd(1.4426950408889634074);
  const __m256d ln2_hi = _mm256_set1_pd(6.93147180369123816490e-01);
  const __m256d ln2_lo = _mm256_set1_pd(1.90821492927058770002e-10);

  const __m256d k = _mm256_round_pd(_mm256_mul_pd(x, log2e),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(k, ln2_hi, x);
  r = _mm256_fnmadd_pd(k, ln2_lo, r);

  static constexpr double kInvFact[] = {
      1.0 / 6227020800.0,  // 1/13!
      1.0 / 479001600.0,   // 1/12!
      1.0 / 39916800.0,    // 1/11!
      1.0 / 3628800.0,     // 1/10!
      1.0 / 362880.0,      // 1/9!
      1.0 / 40320.0,       // 1/8!
      1.0 / 5040.0,        // 1/7!
      1.0 / 720.0,         // 1/6!
      1.0 / 120.0,         // 1/5!
      1.0 / 24.0,          // 1/4!
      1.0 / 6.0,           // 1/3!
      0.5,                 // 1/2!
      1.0,                 // 1/1!
      1.0,                 // 1/0!
  };
  __m256d p = _mm256_set1_pd(kInvFact[0]);
  for (int i = 1; i < 14; ++i) p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(kInvFact[i]));

  // 2^k assembled in the exponent field.
  const __m128i ki = _mm256_cvtpd_epi32(k);
  __m256i e = _mm256_cvtepi32_epi64(ki);
  e = _mm256_add_epi64(e, _mm256_set1_epi64x(1023));
  e = _mm256_slli_epi64(e, 52);
  return _mm256_mul_pd(p, _mm256_castsi256_pd(e));
}

// sin and cos of x + x_lo for |x| < 2^19 * pi/2. Three-part Cody-Waite reduction by
// pi/2 followed by the fdlibm minimax kernels on |r| <= pi/4.
inline void sincos_pd(__m256d x, __m256d x_lo, __m256d& s_out, __m256d& c_out) {
  const __m256d two_over_pi = _mm256_set1_pd(6.36619772367581382433e-01);
  const __m256d pio2_1 = _mm256_set1_pd(1.57079632673412561417e+00);
  const __m256d pio2_2 = _mm256_set1_pd(6.07710050630396597660e-11);
  const __m256d pio2_3 = _mm256_set1_pd(2.02226624871116645580e-21);

  const __m256d q = _mm256_round_pd(_mm256_mul_pd(x, two_over_pi),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(q, pio2_1, x);
  r = _mm256_fnmadd_pd(q, pio2_2, r);
  r = _mm256_fnmadd_pd(q, pio2_3, r);
  r = _mm256_add_pd(r, x_lo);

  const __m256d z = _mm256_mul_pd(r, r);

  // sin(r) = r + r^3 (S1 + z (S2 + ... ))
  __m256d ps = _mm256_set1_pd(1.58969099521155010221e-10);
  ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(-2.50507602534068634195e-08));
  ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(2.75573137070700676789e-06));
  ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(-1.98412698298579493134e-04));
  ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(8.33333333332248946124e-03));
  ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(-1.66666666666666324348e-01));
  const __m256d sin_r = _mm256_fmadd_pd(_mm256_mul_pd(ps, z), r, r);

  // cos(r) = 1 - z/2 + z^2 (C1 + z (C2 + ... ))
  __m256d pc = _mm256_set1_pd(-1.13596475577881948265e-11);
  pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(2.08757232129817482790e-09));
  pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(-2.75573143513906633035e-07));
  pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(2.48015872894767294178e-05));
  pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(-1.38888888888741095749e-03));
  pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(4.16666666666666019037e-02));
  const __m256d z2 = _mm256_mul_pd(z, z);
  const __m256d cos_r =
      _mm256_fmadd_pd(pc, z2, _mm256_fnmadd_pd(_mm256_set1_pd(0.5), z, _mm256_set1_pd(1.0)));

  // Quadrant q mod 4: 0 -> (s, c), 1 -> (c, -s), 2 -> (-s, -c), 3 -> (-c, s).
  const __m128i qi = _mm256_cvtpd_epi32(q);
  const __m256i quad = _mm256_cvtepi32_epi64(qi);
  const __m256i one = _mm256_set1_epi64x(1);
  const __m256i two = _mm256_set1_epi64x(2);
  const __m256d swap = _mm256_castsi256_pd(_mm256_cmpeq_epi64(_mm256_and_si256(quad, one), one));
  const __m256i q_plus1 = _mm256_add_epi64(quad, one);
  const __m256d neg_sin =
      _mm256_castsi256_pd(_mm256_cmpeq_epi64(_mm256_and_si256(quad, two), two));
  const __m256d neg_cos =
      _mm256_castsi256_pd(_mm256_cmpeq_epi64(_mm256_and_si256(q_plus1, two), two));

  __m256d s = _mm256_blendv_pd(sin_r, cos_r, swap);
  __m256d c = _mm256_blendv_pd(cos_r, sin_r, swap);
  const __m256d sign = _mm256_set1_pd(-0.0);
  s = _mm256_xor_pd(s, _mm256_and_pd(neg_sin, sign));
  c = _mm256_xor_pd(c, _mm256_and_pd(neg_cos, sign));
  s_out = s;
  c_out = c;
}

}  // namespace

DirichletSums dirichlet_sums(double sigma, double t, std::size_t first, std::size_t last) {
  const auto& table = detail::log_table();
  __m256d sr = _mm256_setzero_pd(), si = _mm256_setzero_pd();
  __m256d lr = _mm256_setzero_pd(), li = _mm256_setzero_pd();
  __m256d mag = _mm256_setzero_pd();
  const __m256d vsig = _mm256_set1_pd(-sigma);
  const __m256d vt = _mm256_set1_pd(t);
  const __m256d vone = _mm256_set1_pd(1.0);
  const __m256d vscale = _mm256_set1_pd(1.0 / 1024.0);
  const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));

  std::size_t n = first;
  for (; n + 4 <= last; n += 4) {
    __m256d L, L_lo;
    if (n + 4 <= table.hi.size()) {
      L = _mm256_loadu_pd(table.hi.data() + n);
      L_lo = _mm256_loadu_pd(table.lo.data() + n);
    } else {
      alignas(32) double h[4], l[4];
      for (int j = 0; j < 4; ++j) detail::log_split(n + j, h[j], l[j]);
      L = _mm256_load_pd(h);
      L_lo = _mm256_load_pd(l);
    }
    const __m256d a = exp_pd(_mm256_mul_pd(vsig, L));
    const __m256d phase = _mm256_mul_pd(vt, L);
    const __m256d phase_lo = _mm256_fmadd_pd(vt, L_lo, _mm256_fmsub_pd(vt, L, phase));
    __m256d sn, cs;
    sincos_pd(phase, phase_lo, sn, cs);
    const __m256d re = _mm256_mul_pd(a, cs);
    const __m256d im = _mm256_mul_pd(a, sn);  // subtracted below: n^{-it} = cos - i sin
    sr = _mm256_add_pd(sr, re);
    si = _mm256_sub_pd(si, im);
    lr = _mm256_fmadd_pd(L, re, lr);
    li = _mm256_fnmadd_pd(L, im, li);
    const __m256d abs_phase = _mm256_and_pd(phase, abs_mask);
    mag = _mm256_fmadd_pd(a, _mm256_fmadd_pd(abs_phase, vscale, vone), mag);
  }

  DirichletSums out;
  out.sum = {hsum(sr), hsum(si)};
  out.log_sum = {hsum(lr), hsum(li)};
  out.magnitude = hsum(mag);
  if (n < last) {
    const DirichletSums tail = scalar::dirichlet_sums(sigma, t, n, last);
    out.sum += tail.sum;
    out.log_sum += tail.log_sum;
    out.magnitude += tail.magnitude;
  }
  return out;
}

PairedSum paired_zero_sum(std::complex<double> w, std::span<const double> gammas) {
  const double a = w.real();
  const double b = w.imag();
  const __m256d va = _mm256_set1_pd(a);
  const __m256d vb = _mm256_set1_pd(b);
  const __m256d w2r = _mm256_set1_pd(a * a - b * b);
  const __m256d di = _mm256_set1_pd(2.0 * a * b);
  const __m256d two = _mm256_set1_pd(2.0);
  __m256d vr = _mm256_setzero_pd(), vi = _mm256_setzero_pd(), mag = _mm256_setzero_pd();

  std::size_t i = 0;
  const std::size_t n = gammas.size();
  for (; i + 4 <= n; i += 4) {
    const __m256d g = _mm256_loadu_pd(gammas.data() + i);
    const __m256d dr = _mm256_fmadd_pd(g, g, w2r);
    const __m256d den = _mm256_fmadd_pd(dr, dr, _mm256_mul_pd(di, di));
    const __m256d inv = _mm256_div_pd(two, den);
    const __m256d qr = _mm256_mul_pd(_mm256_fmadd_pd(va, dr, _mm256_mul_pd(vb, di)), inv);
    const __m256d qi = _mm256_mul_pd(_mm256_fmsub_pd(vb, dr, _mm256_mul_pd(va, di)), inv);
    vr = _mm256_add_pd(vr, qr);
    vi = _mm256_add_pd(vi, qi);
    mag = _mm256_add_pd(mag, _mm256_sqrt_pd(_mm256_fmadd_pd(qr, qr, _mm256_mul_pd(qi, qi))));
  }
  PairedSum out{{hsum(vr), hsum(vi)}, hsum(mag)};
  if (i < n) {
    const PairedSum tail = scalar::paired_zero_sum(w, gammas.subspan(i));
    out.value += tail.value;
    out.magnitude += tail.magnitude;
  }
  return out;
}

}  // namespace zc::simd::avx2
