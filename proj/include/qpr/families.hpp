#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qpr/context.hpp"
#include "qpr/scaled_value.hpp"

namespace qpr {

enum class FamilyKind { kQInvHermite, kQLaguerre, kStieltjesWigert, kGenericSymmetric, kGenericLaguerreType };

/// A recurrence schedule n -> value. May depend on q; must be side-effect free.
using Schedule = std::function<double(std::int64_t n, double q)>;

/// A polynomial family described by its three-term recurrence.
///
/// Symmetric kinds:       2x p_n = p_{n+1} + q^{-nc} beta_n p_{n-1}.
/// Laguerre-type kinds:   x q^{2n+alpha+1} p_n = a_n p_{n+1} + b_n p_{n-1} + c_n p_n.
class FamilySpec {
 public:
  static FamilySpec q_inv_hermite();
  /// Throws InvalidArgument unless alpha > -1.
  static FamilySpec q_laguerre(double alpha);
  static FamilySpec stieltjes_wigert();
  /// Throws InvalidArgument unless c > 0.
  static FamilySpec generic_symmetric(double c, Schedule beta);
  static FamilySpec generic_laguerre_type(double alpha, Schedule a, Schedule b, Schedule c);

  FamilyKind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  bool is_symmetric() const noexcept {
    return kind_ == FamilyKind::kQInvHermite || kind_ == FamilyKind::kGenericSymmetric;
  }
  /// alpha of the Laguerre-type scaling (0 for Stieltjes-Wigert and symmetric kinds).
  double alpha() const noexcept { return alpha_; }
  /// c of the symmetric recurrence (1 for q^{-1}-Hermite).
  double c_exponent() const noexcept { return c_; }

  /// Symmetric kinds: q^{-nc} beta_n.
  double symmetric_b(std::int64_t n, double q) const;
  /// Symmetric kinds: beta_n.
  double beta(std::int64_t n, double q) const;

  struct LaguerreCoeffs {
    double a;
    double b;
    double c;
  };
  /// Laguerre-type kinds: the raw a_n, b_n, c_n.
  LaguerreCoeffs laguerre_coeffs(std::int64_t n, double q) const;

 private:
  FamilyKind kind_ = FamilyKind::kQInvHermite;
  std::string name_;
  double alpha_ = 0.0;
  double c_ = 1.0;
  Schedule beta_;
  Schedule a_;
  Schedule b_;
  Schedule cc_;
};

/// Largest n eval_raw accepts.
inline constexpr std::int64_t kMaxRawDegree = 200;

/// p_n(x) by the forward recurrence in scaled form. Built-in families start
/// from their closed-form p_1; generic ones from p_{-1} = 0, p_0 = 1.
/// Throws UnsupportedRange for n > kMaxRawDegree.
ScaledValue eval_raw(const FamilySpec& spec, std::int64_t n, Complex x, const QContext& ctx);

/// x_n(t) = (q^{-n/2} t - q^{n/2} / t) / 2. Throws ZeroArgument for t = 0.
Complex scale_arg_symmetric(std::int64_t n, Complex t, const QContext& ctx);

/// x_n(t) = q^{-2n-alpha} t.
Complex scale_arg_laguerre(std::int64_t n, Complex t, double alpha, const QContext& ctx);

/// Coefficients of the scaled recurrence.
struct ScaledCoeffs {
  double c;
  double d;
};

/// Laguerre-type: c(q,n) = c_n/(1+q), d(q,n) = -b_n/q. Throws
/// InconsistentFamily when a_n differs from -(1 - q^{n+1}) by more than
/// 1e-12 relative, UnsupportedFamily for symmetric kinds.
ScaledCoeffs map_to_scaled(const FamilySpec& spec, std::int64_t n, const QContext& ctx);

/// Symmetric kinds: c(q,n) = q^{n(1-c)} beta_n (1 - q^n for q^{-1}-Hermite).
double symmetric_scaled_c(const FamilySpec& spec, std::int64_t n, const QContext& ctx);

/// Jacobi matrix of the monic recurrence: diag[0..n) and the squared
/// off-diagonal offdiag_sq[k] between rows k-1 and k, k = 1..n-1 (index 0 unused).
struct JacobiMatrix {
  std::vector<double> diag;
  std::vector<double> offdiag_sq;
};

/// Throws UnsupportedFamily when an off-diagonal square is negative.
JacobiMatrix jacobi_matrix(const FamilySpec& spec, std::int64_t n, const QContext& ctx);

/// Largest zero of p_n as the top eigenvalue of the Jacobi matrix (n >= 1).
double largest_zero(const FamilySpec& spec, std::int64_t n, const QContext& ctx);

/// The same eigenvalue by Sturm-sequence bisection in double.
double largest_zero_bisection(const FamilySpec& spec, std::int64_t n, const QContext& ctx);

/// Sturm bisection in `bits`-bit GMP floats. q^{-1}-Hermite entries are
/// formed in extended precision; other families are converted from double.
mpf_class largest_zero_extended(const FamilySpec& spec, std::int64_t n, const QContext& ctx, unsigned bits = 256);

/// Spot check of the limit hypotheses (scaled coefficients tending to 1)
/// over n in [0, n_max].
struct HypothesisReport {
  bool ok = true;
  /// max(|c(q,n) - 1|, |d(q,n) - 1|) at n_max.
  double final_deviation = 0.0;
  std::vector<std::string> warnings;
};

HypothesisReport check_hypotheses(const FamilySpec& spec, std::int64_t n_max, const QContext& ctx);

}  // namespace qpr
