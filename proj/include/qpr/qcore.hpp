#pragma once

#include <complex>
#include <cstdint>

#include "qpr/context.hpp"
#include "qpr/rational.hpp"
#include "qpr/scaled_value.hpp"

namespace qpr {

/// A complex value or the point at infinity. The bilateral F_q sum relies on
/// 1/(q;q)_m = 0 for negative integers m, so infinity is a tag rather than
/// an IEEE overflow.
class ExtendedComplex {
 public:
  static ExtendedComplex finite(Complex v) { return ExtendedComplex(v, false); }
  static ExtendedComplex infinity() { return ExtendedComplex({0.0, 0.0}, true); }

  bool is_infinite() const noexcept { return infinite_; }
  /// Throws DomainError on the point at infinity.
  Complex value() const;
  /// 1/v, mapping 0 <-> infinity.
  ExtendedComplex reciprocal() const;

 private:
  ExtendedComplex(Complex v, bool inf) : value_(v), infinite_(inf) {}
  Complex value_;
  bool infinite_;
};

/// log of a product together with an exact-zero flag (log is meaningless when zero).
struct LogProduct {
  bool zero = false;
  Complex log{0.0, 0.0};

  ScaledValue value() const { return zero ? ScaledValue() : ScaledValue::from_log(log); }
};

/// (a;q)_n = prod_{j<n} (1 - a q^j); n = 0 gives 1.
Complex qpoch_finite(Complex a, std::int64_t n, const QContext& ctx);

/// (a;q)_inf, stopping once |a| q^j / (1-q) < tol. Throws TermCapExceeded.
Complex qpoch_infinite(Complex a, const QContext& ctx);

/// Number of factors qpoch_infinite multiplies for this a.
std::int64_t qpoch_infinite_factors(Complex a, const QContext& ctx);

/// log (q^e; q)_inf. A factor is an exact zero when e + j == 0, so integer
/// exponents produce exact zeros instead of round-off residue.
LogProduct qpoch_qpower_log(Complex exponent, const QContext& ctx);

/// log (a;q)_inf with a zero flag when some factor vanishes to within 8 ulp.
LogProduct qpoch_infinite_log(Complex a, const QContext& ctx);

/// (a;q)_b = (a;q)_inf / (a q^b; q)_inf. Integer b reduces to finite
/// products; a vanishing denominator alone yields the point at infinity.
/// Throws IndeterminateRatio when numerator and denominator both vanish.
ExtendedComplex qpoch_general(Complex a, Complex b, const QContext& ctx);

/// sum_{n=0}^{N} z^n / (q;q)_n.
Complex euler_partial(Complex z, std::int64_t N, const QContext& ctx);

/// Smallest N whose tail bound |z|^{N+1} / ((q;q)_inf (1-|z|)) is below tol.
/// Requires |z| < 1.
std::int64_t euler_terms_for_tol(Complex z, const QContext& ctx);

namespace exact {

Rational qpoch_finite(const Rational& a, long n, const Rational& q);
Rational euler_partial(const Rational& z, long N, const Rational& q);

}  // namespace exact

}  // namespace qpr
