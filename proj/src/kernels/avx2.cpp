#include "ellgen/kernels.hpp"

#if defined(ELLGEN_HAVE_AVX2_KERNELS)

#include <immintrin.h>

#define ELLGEN_AVX2 __attribute__((target("avx2,fma")))

namespace ellgen::kernels::avx2 {

namespace {

// expm1 on four lanes: t = k ln2 + r with |r| <= ln2/2, expm1(r) by a
// degree-13 Taylor polynomial, then expm1(t) = 2^k expm1(r) + (2^k - 1).
ELLGEN_AVX2 inline __m256d expm1_pd(__m256d t) {
  const __m256d log2e = _mm256_set1_pd(1.4426950408889634074);
  const __m256d ln2_hi = _mm256_set1_pd(6.93147180369123816490e-01);
  const __m256d ln2_lo = _mm256_set1_pd(1.90821492927058770002e-10);

  const __m256d k = _mm256_round_pd(_mm256_mul_pd(t, log2e), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(k, ln2_hi, t);
  r = _mm256_fnmadd_pd(k, ln2_lo, r);

  // Horner for r * (1 + r/2 + r^2/6 + ... + r^12/13!)
  static constexpr double inv_fact[] = {
      1.0,
      1.0 / 2.0,
      1.0 / 6.0,
      1.0 / 24.0,
      1.0 / 120.0,
      1.0 / 720.0,
      1.0 / 5040.0,
      1.0 / 40320.0,
      1.0 / 362880.0,
      1.0 / 3628800.0,
      1.0 / 39916800.0,
      1.0 / 479001600.0,
      1.0 / 6227020800.0,
  };
  __m256d p = _mm256_set1_pd(inv_fact[12]);
  for (int i = 11; i >= 0; --i) p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(inv_fact[i]));
  p = _mm256_mul_pd(p, r);

  // 2^k from the exponent bits.
  const __m256d shifted = _mm256_add_pd(k, _mm256_set1_pd(1023.0 + 4503599627370496.0));
  const __m256d scale = _mm256_castsi256_pd(_mm256_slli_epi64(_mm256_castpd_si256(shifted), 52));
  return _mm256_fmadd_pd(scale, p, _mm256_sub_pd(scale, _mm256_set1_pd(1.0)));
}

}  // namespace

ELLGEN_AVX2 void expm1_batch(std::span<const double> t, std::span<double> out) {
  std::size_t j = 0;
  for (; j + 4 <= t.size(); j += 4) _mm256_storeu_pd(&out[j], expm1_pd(_mm256_loadu_pd(&t[j])));
  if (j < t.size()) scalar::expm1_batch(t.subspan(j), out.subspan(j));
}

ELLGEN_AVX2 void cosh_sinh_power(std::span<const double> t, double x, int power, double scale,
                                 std::span<double> out) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d xv = _mm256_set1_pd(x);
  const __m256d sv = _mm256_set1_pd(scale);
  std::size_t j = 0;
  for (; j + 4 <= t.size(); j += 4) {
    const __m256d e = expm1_pd(_mm256_loadu_pd(&t[j]));
    const __m256d ep1 = _mm256_add_pd(one, e);
    const __m256d sh = _mm256_mul_pd(half, _mm256_add_pd(e, _mm256_div_pd(e, ep1)));
    const __m256d ch = _mm256_add_pd(one, _mm256_div_pd(_mm256_mul_pd(half, _mm256_mul_pd(e, e)), ep1));
    __m256d b = _mm256_fmadd_pd(xv, sh, ch);
    __m256d acc = one;
    for (int p = power; p > 0; p >>= 1) {
      if (p & 1) acc = _mm256_mul_pd(acc, b);
      b = _mm256_mul_pd(b, b);
    }
    _mm256_storeu_pd(&out[j], _mm256_mul_pd(sv, acc));
  }
  if (j < t.size()) scalar::cosh_sinh_power(t.subspan(j), x, power, scale, out.subspan(j));
}

ELLGEN_AVX2 void series_eval(std::span<const double> coeffs, std::span<const double> u_re,
                             std::span<const double> u_im, std::span<double> out_re, std::span<double> out_im) {
  std::size_t j = 0;
  for (; j + 4 <= u_re.size(); j += 4) {
    const __m256d ur = _mm256_loadu_pd(&u_re[j]);
    const __m256d ui = _mm256_loadu_pd(&u_im[j]);
    __m256d re = _mm256_setzero_pd();
    __m256d im = _mm256_setzero_pd();
    for (std::size_t k = coeffs.size(); k-- > 0;) {
      // (re + i im)(ur + i ui) + c
      const __m256d nr = _mm256_fmadd_pd(re, ur, _mm256_fnmadd_pd(im, ui, _mm256_set1_pd(coeffs[k])));
      const __m256d ni = _mm256_fmadd_pd(re, ui, _mm256_mul_pd(im, ur));
      re = nr;
      im = ni;
    }
    _mm256_storeu_pd(&out_re[j], re);
    _mm256_storeu_pd(&out_im[j], im);
  }
  if (j < u_re.size()) {
    scalar::series_eval(coeffs, u_re.subspan(j), u_im.subspan(j), out_re.subspan(j), out_im.subspan(j));
  }
}

}  // namespace ellgen::kernels::avx2

#endif
