#pragma once

#include <cstdint>
#include <vector>

#include "qpr/context.hpp"
#include "qpr/families.hpp"
#include "qpr/qairy.hpp"
#include "qpr/rational.hpp"
#include "qpr/scaled.hpp"

namespace qpr {

enum class LimitKind { kSymmetric, kLaguerreType };

/// A_q(1/t^2) (symmetric) or A_q(1/t)/(q;q)_inf (Laguerre-type). An infinite
/// t gives the t -> infinity limit. Throws ZeroArgument for t = 0.
Complex limit_value(LimitKind kind, Complex t, const QContext& ctx);

inline LimitKind limit_kind(const FamilySpec& spec) {
  return spec.is_symmetric() ? LimitKind::kSymmetric : LimitKind::kLaguerreType;
}

struct ConvergenceRow {
  std::int64_t n;
  Complex value;
  Complex limit;
  double err;
  /// err / q^n.
  double err_normalized;
};

ConvergenceRow make_convergence_row(std::int64_t n, Complex value, Complex limit, double q);

/// Rows n = 0..n_max of the scaled sequence at t against its limit.
std::vector<ConvergenceRow> convergence_table(const FamilySpec& spec, Complex t, std::int64_t n_max, const QContext& ctx);

/// sum_{j=0}^{J} q^{j(j+1)/2} / ((q;q)_j t^{2j}) A_q(q^j/t^2) q^{jn}.
Complex hermite_expansion(std::int64_t n, Complex t, std::int64_t J, const QContext& ctx);

/// (1/(q;q)_inf) sum_{s=0}^{Smax} (-1)^s/(q;q)_s q^{s(s+1)/2} q^{ns} A_q(q^{-s}/t).
Complex sw_expansion(std::int64_t n, Complex t, std::int64_t s_max, const QContext& ctx);

/// kLiteral drops the t^{-s} factor from the inner sum; that variant agrees
/// with the polynomial only at t = 1.
enum class LaguerreExpansionForm { kCorrected, kLiteral };

/// (1/(q;q)_inf) sum_{m=0}^{Mmax} q^{m/2}/(q;q)_m q^{mn}
///   sum_{s=0}^{m} [m choose s]_q (-1)^{m-s} q^{s alpha + (m-2s)^2/2} [t^{-s}] A_q(q^{2s-m}/t).
Complex laguerre_expansion(std::int64_t n, Complex t, double alpha, std::int64_t m_max, const QContext& ctx,
                           LaguerreExpansionForm form = LaguerreExpansionForm::kCorrected);

/// The s = 1 (Stieltjes-Wigert) and m = 1 (q-Laguerre) terms without their
/// q^n factor: the predicted limit of (S_n(t) - limit) / q^n.
Complex sw_first_correction(Complex t, const QContext& ctx);
Complex laguerre_first_correction(Complex t, double alpha, const QContext& ctx,
                                  LaguerreExpansionForm form = LaguerreExpansionForm::kCorrected);
/// The j = 1 term of hermite_expansion without q^n.
Complex hermite_first_correction(Complex t, const QContext& ctx);

/// lambda_0 = lambda0, lambda_j = [-q^{2j-2} lambda_{j-1} + 2 q^{j^2-j} (1 + c1 q^{2j})] / (1 - q^j).
PowerSeriesCoeffs lambda_sequence(double c1, Complex lambda0, std::int64_t J, const QContext& ctx);

/// Both sides of the a_{n,1} partial-sum identity, multiplied by q^{2n}:
/// lhs = (q;q)_n b_{n,1}, rhs = (1 + 1/q) sum_{j<n} c(q,j) q^{2n-2j}.
/// The recursion gives lhs = -rhs, so both comparisons are reported.
struct An1Report {
  std::int64_t n;
  double lhs;
  double rhs;
  /// |lhs - rhs|
  double signed_err;
  /// ||lhs| - |rhs||
  double abs_err;
};

An1Report an1_identity_check(const CoeffTable& table, std::int64_t n, const QContext& ctx);
An1Report an1_identity_check(const FamilySpec& spec, std::int64_t n, const QContext& ctx);

/// Row-to-row form, times q^{2n}:
/// (q;q)_n b_{n,1} - q^{-2} (q;q)_{n+1} b_{n+1,1} - (1+q)/q c(q,n).
double an1_telescoping_residual(const CoeffTable& table, std::int64_t n, const QContext& ctx);

namespace exact {

std::vector<Rational> lambda_sequence(const Rational& c1, const Rational& lambda0, long J, const Rational& q);

}  // namespace exact

}  // namespace qpr
