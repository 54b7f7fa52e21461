// Compiled with -mavx2 only; entry is guarded by a runtime CPU check.
#include <immintrin.h>

#include "qpr/simd/kernels.hpp"

namespace qpr::simd::avx2 {

namespace {

void symmetric_row(const SymmetricRowArgs& a) {
  const __m256d qn = _mm256_set1_pd(a.qn);
  const __m256d c = _mm256_set1_pd(a.c);
  std::size_t k = 0;
  for (; k + 4 <= a.len; k += 4) {
    const __m256d qk = _mm256_loadu_pd(a.qk + k);
    const __m256d t1 = _mm256_mul_pd(qk, _mm256_loadu_pd(a.cur + k));
    __m256d t2 = _mm256_mul_pd(qn, qk);
    t2 = _mm256_mul_pd(t2, _mm256_loadu_pd(a.cur_shift + k));
    __m256d t3 = _mm256_mul_pd(c, _mm256_loadu_pd(a.q2km1 + k));
    t3 = _mm256_mul_pd(t3, _mm256_loadu_pd(a.prev_shift + k));
    const __m256d r = _mm256_sub_pd(t1, t2);
    _mm256_storeu_pd(a.out + k, _mm256_sub_pd(r, t3));
  }
  for (; k < a.len; ++k) {
    const double t1 = a.qk[k] * a.cur[k];
    double t2 = a.qn * a.qk[k];
    t2 = t2 * a.cur_shift[k];
    double t3 = a.c * a.q2km1[k];
    t3 = t3 * a.prev_shift[k];
    const double r = t1 - t2;
    a.out[k] = r - t3;
  }
}

void laguerre_row(const LaguerreRowArgs& a) {
  const __m256d g = _mm256_set1_pd(a.g);
  const __m256d d = _mm256_set1_pd(a.d);
  const __m256d inv = _mm256_set1_pd(a.inv);
  std::size_t k = 0;
  for (; k + 4 <= a.len; k += 4) {
    const __m256d t1 = _mm256_mul_pd(g, _mm256_loadu_pd(a.cur_shift1 + k));
    __m256d t2 = _mm256_mul_pd(d, _mm256_loadu_pd(a.q2km3 + k));
    t2 = _mm256_mul_pd(t2, _mm256_loadu_pd(a.prev_shift2 + k));
    __m256d r = _mm256_sub_pd(_mm256_loadu_pd(a.cur + k), t1);
    r = _mm256_sub_pd(r, t2);
    const __m256d s = _mm256_mul_pd(_mm256_loadu_pd(a.q2k + k), inv);
    _mm256_storeu_pd(a.out + k, _mm256_mul_pd(s, r));
  }
  for (; k < a.len; ++k) {
    const double t1 = a.g * a.cur_shift1[k];
    double t2 = a.d * a.q2km3[k];
    t2 = t2 * a.prev_shift2[k];
    double r = a.cur[k] - t1;
    r = r - t2;
    const double s = a.q2k[k] * a.inv;
    a.out[k] = s * r;
  }
}

void horner_complex(const HornerArgs& a) {
  std::size_t i = 0;
  const double top = a.ncoeffs > 0 ? a.coeffs[a.ncoeffs - 1] : 0.0;
  for (; i + 4 <= a.npoints; i += 4) {
    const __m256d ur = _mm256_loadu_pd(a.u_re + i);
    const __m256d ui = _mm256_loadu_pd(a.u_im + i);
    __m256d ar = _mm256_set1_pd(top);
    __m256d ai = _mm256_setzero_pd();
    for (std::size_t j = a.ncoeffs; j-- > 1;) {
      const __m256d rr = _mm256_sub_pd(_mm256_mul_pd(ar, ur), _mm256_mul_pd(ai, ui));
      const __m256d ii = _mm256_add_pd(_mm256_mul_pd(ar, ui), _mm256_mul_pd(ai, ur));
      ar = _mm256_add_pd(rr, _mm256_set1_pd(a.coeffs[j - 1]));
      ai = ii;
    }
    _mm256_storeu_pd(a.out_re + i, ar);
    _mm256_storeu_pd(a.out_im + i, ai);
  }
  for (; i < a.npoints; ++i) {
    const double ur = a.u_re[i];
    const double ui = a.u_im[i];
    double ar = top;
    double ai = 0.0;
    for (std::size_t j = a.ncoeffs; j-- > 1;) {
      const double rr = ar * ur - ai * ui;
      const double ii = ar * ui + ai * ur;
      ar = rr + a.coeffs[j - 1];
      ai = ii;
    }
    a.out_re[i] = ar;
    a.out_im[i] = ai;
  }
}

}  // namespace

extern const KernelTable kTable{"avx2", &symmetric_row, &laguerre_row, &horner_complex};

}  // namespace qpr::simd::avx2
