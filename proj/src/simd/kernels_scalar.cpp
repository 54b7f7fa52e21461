#include "qpr/simd/kernels.hpp"

namespace qpr::simd {

namespace {

void symmetric_row(const SymmetricRowArgs& a) {
  for (std::size_t k = 0; k < a.len; ++k) {
    const double t1 = a.qk[k] * a.cur[k];
    double t2 = a.qn * a.qk[k];
    t2 = t2 * a.cur_shift[k];
    double t3 = a.c * a.q2km1[k];
    t3 = t3 * a.prev_shift[k];
    double r = t1 - t2;
    a.out[k] = r - t3;
  }
}

void laguerre_row(const LaguerreRowArgs& a) {
  for (std::size_t k = 0; k < a.len; ++k) {
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
  for (std::size_t i = 0; i < a.npoints; ++i) {
    const double ur = a.u_re[i];
    const double ui = a.u_im[i];
    double ar = a.ncoeffs > 0 ? a.coeffs[a.ncoeffs - 1] : 0.0;
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

constexpr KernelTable kScalar{"scalar", &symmetric_row, &laguerre_row, &horner_complex};

}  // namespace

const KernelTable& scalar_kernels() noexcept { return kScalar; }

}  // namespace qpr::simd
