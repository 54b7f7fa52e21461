// aarch64 only; NEON is part of the base ISA there, so no runtime probe.
#include <arm_neon.h>

#include "qpr/simd/kernels.hpp"

namespace qpr::simd::neon {

namespace {

void symmetric_row(const SymmetricRowArgs& a) {
  const float64x2_t qn = vdupq_n_f64(a.qn);
  const float64x2_t c = vdupq_n_f64(a.c);
  std::size_t k = 0;
  for (; k + 2 <= a.len; k += 2) {
    const float64x2_t qk = vld1q_f64(a.qk + k);
    const float64x2_t t1 = vmulq_f64(qk, vld1q_f64(a.cur + k));
    float64x2_t t2 = vmulq_f64(qn, qk);
    t2 = vmulq_f64(t2, vld1q_f64(a.cur_shift + k));
    float64x2_t t3 = vmulq_f64(c, vld1q_f64(a.q2km1 + k));
    t3 = vmulq_f64(t3, vld1q_f64(a.prev_shift + k));
    vst1q_f64(a.out + k, vsubq_f64(vsubq_f64(t1, t2), t3));
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
  const float64x2_t g = vdupq_n_f64(a.g);
  const float64x2_t d = vdupq_n_f64(a.d);
  const float64x2_t inv = vdupq_n_f64(a.inv);
  std::size_t k = 0;
  for (; k + 2 <= a.len; k += 2) {
    const float64x2_t t1 = vmulq_f64(g, vld1q_f64(a.cur_shift1 + k));
    float64x2_t t2 = vmulq_f64(d, vld1q_f64(a.q2km3 + k));
    t2 = vmulq_f64(t2, vld1q_f64(a.prev_shift2 + k));
    float64x2_t r = vsubq_f64(vld1q_f64(a.cur + k), t1);
    r = vsubq_f64(r, t2);
    const float64x2_t s = vmulq_f64(vld1q_f64(a.q2k + k), inv);
    vst1q_f64(a.out + k, vmulq_f64(s, r));
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
  for (; i + 2 <= a.npoints; i += 2) {
    const float64x2_t ur = vld1q_f64(a.u_re + i);
    const float64x2_t ui = vld1q_f64(a.u_im + i);
    float64x2_t ar = vdupq_n_f64(top);
    float64x2_t ai = vdupq_n_f64(0.0);
    for (std::size_t j = a.ncoeffs; j-- > 1;) {
      const float64x2_t rr = vsubq_f64(vmulq_f64(ar, ur), vmulq_f64(ai, ui));
      const float64x2_t ii = vaddq_f64(vmulq_f64(ar, ui), vmulq_f64(ai, ur));
      ar = vaddq_f64(rr, vdupq_n_f64(a.coeffs[j - 1]));
      ai = ii;
    }
    vst1q_f64(a.out_re + i, ar);
    vst1q_f64(a.out_im + i, ai);
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

extern const KernelTable kTable{"neon", &symmetric_row, &laguerre_row, &horner_complex};

}  // namespace qpr::simd::neon
