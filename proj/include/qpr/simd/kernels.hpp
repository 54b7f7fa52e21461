#pragma once

// Data-parallel inner loops with a scalar reference and vector variants
// chosen at runtime. Every variant performs the same IEEE operations in the
// same order (no FMA), so results are bit-identical across variants.

#include <cstddef>
#include <string_view>

namespace qpr::simd {

/// One row of the symmetric table. For k in [0, len):
///   out[k] = qk[k]*cur[k] - (qn*qk[k])*cur_shift[k] - (c*q2km1[k])*prev_shift[k]
/// where cur_shift[k] = a_{n,k-1} and prev_shift[k] = a_{n-1,k-1} (zero padded).
struct SymmetricRowArgs {
  double* out;
  const double* cur;
  const double* cur_shift;
  const double* prev_shift;
  const double* qk;     // q^k
  const double* q2km1;  // q^{2k-1}
  double qn;
  double c;
  std::size_t len;
};

/// One row of the Laguerre-type table. For k in [0, len):
///   out[k] = (q2k[k]*inv) * ((cur[k] - g*cur_shift1[k]) - (d*q2km3[k])*prev_shift2[k])
/// with g = (1+q)c/q, inv = 1/(1-q^{n+1}), cur_shift1[k] = b_{n,k-1},
/// prev_shift2[k] = b_{n-1,k-2}.
struct LaguerreRowArgs {
  double* out;
  const double* cur;
  const double* cur_shift1;
  const double* prev_shift2;
  const double* q2k;    // q^{2k}
  const double* q2km3;  // q^{2k-3}
  double g;
  double d;
  double inv;
  std::size_t len;
};

/// Horner evaluation of sum_j coeffs[j] u^j (real coefficients) at many
/// complex points u = (u_re[i], u_im[i]).
struct HornerArgs {
  const double* coeffs;
  std::size_t ncoeffs;
  const double* u_re;
  const double* u_im;
  double* out_re;
  double* out_im;
  std::size_t npoints;
};

struct KernelTable {
  std::string_view name;
  void (*symmetric_row)(const SymmetricRowArgs&);
  void (*laguerre_row)(const LaguerreRowArgs&);
  void (*horner_complex)(const HornerArgs&);
};

const KernelTable& scalar_kernels() noexcept;
/// nullptr when not compiled in or not supported by this CPU.
const KernelTable* avx2_kernels() noexcept;
const KernelTable* neon_kernels() noexcept;

/// The variant used by the library: the widest supported one, unless the
/// environment variable QPR_SIMD is set to "scalar".
const KernelTable& active_kernels() noexcept;

}  // namespace qpr::simd
