#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qpr/context.hpp"
#include "qpr/qcore.hpp"
#include "qpr/rational.hpp"
#include "qpr/scaled_value.hpp"

namespace qpr {

/// Which variable a coefficient sequence is a power series in.
enum class SeriesVariable { kZ, kInverseZ, kInverseTSquared, kInverseT };

struct PowerSeriesCoeffs {
  std::vector<Complex> coeffs;
  SeriesVariable variable = SeriesVariable::kZ;
};

/// Coefficient of z^k in A_q(z): (-1)^k q^{k^2} / (q;q)_k, with the q^{k^2}
/// factor carried in scaled form. airy_coeff recombines it (and so underflows
/// to 0 only when the true value is below the double range).
ScaledValue airy_coeff_scaled(std::int64_t k, const QContext& ctx);
Complex airy_coeff(std::int64_t k, const QContext& ctx);

/// Index K such that the terms 0..K of A_q(z) leave a tail below tol for
/// every |z| <= abs_z. Throws TermCapExceeded.
std::int64_t airy_truncation(double abs_z, const QContext& ctx);

/// Ramanujan's function A_q(z) = sum_k (-1)^k q^{k^2} z^k / (q;q)_k.
Complex airy_eval(Complex z, const QContext& ctx);

using ComplexExt = std::complex<long double>;

/// A_q carried in long double end to end; airy_eval rounds this result.
/// Useful when |A_q(z)| is large enough that double spacing exceeds the
/// accuracy wanted.
ComplexExt airy_eval_ext(ComplexExt z, const QContext& ctx);

/// A_q at many points with one shared truncation (the largest |z|), using
/// the active Horner kernel.
std::vector<Complex> airy_eval_batch(std::span<const Complex> z, const QContext& ctx);

/// F_q(z; s) = e^{i pi s} sum_{n in Z} (-1)^n q^{(n+s)^2} z^{n+s} / (q;q)_{n+s},
/// principal branch for z^{n+s}. Terms where (q;q)_{n+s} is the point at
/// infinity contribute nothing. Throws ZeroArgument for z = 0 and
/// BranchAmbiguity for z < 0 with non-integer s.
Complex fq_eval(Complex z, Complex s, const QContext& ctx);

/// Normalized power-series solution f(z) = sum f_n z^{-n}, f_0 = 1, of
/// f(z) = f(zq^2) + (aq/z^2) f(zq^{-2}) + a (1+q)/(qz) f(z), a = +-1.
struct FeqSolution {
  int sign_a = 1;
  double q = 0.5;
  /// g_n = f_n q^{-n^2}; stays in double range.
  std::vector<double> normalized;
  /// f_n in scaled form; positive for every n when sign_a = -1.
  std::vector<ScaledValue> scaled;
  /// f_n recombined to double (underflows to 0 for large n).
  PowerSeriesCoeffs coeffs;
  /// Roots of 1 - (1+q)z - q z^2, present only for sign_a = -1.
  std::optional<double> alpha;
  std::optional<double> beta;

  std::int64_t order() const { return static_cast<std::int64_t>(normalized.size()) - 1; }
};

FeqSolution solve_feq(int sign_a, std::int64_t N, const QContext& ctx);

/// Leading Darboux approximation beta^{-n} / ((q^2;q^2)_inf (beta/alpha;q^2)_inf)
/// to g_n. Throws WrongBranch unless sol.sign_a == -1.
double darboux_tail(std::int64_t n, const FeqSolution& sol, const QContext& ctx);

/// f^b(x) = sum_n f_n x^{-n} for the a = -1 solution; x = +-infinity gives 1.
/// Accuracy is promised for |x| >= 1 only. Throws WrongBranch, ZeroArgument,
/// TermCapExceeded.
double fb_eval(double x, const FeqSolution& sol, const QContext& ctx);

namespace exact {

Rational airy_coeff(long k, const Rational& q);
/// f_0..f_N of the functional-equation solution in exact arithmetic.
std::vector<Rational> solve_feq(int sign_a, long N, const Rational& q);

}  // namespace exact

}  // namespace qpr
