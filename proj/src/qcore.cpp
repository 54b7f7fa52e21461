#include "qpr/qcore.hpp"

#include <cmath>
#include <limits>

#include "qpr/detail/recursions.hpp"
#include "qpr/errors.hpp"

namespace qpr {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// log(1 + x) without losing digits when |x| is small.
Complex log1p_complex(Complex x) {
  const double re = 0.5 * std::log1p(2.0 * x.real() + std::norm(x));
  return {re, std::atan2(x.imag(), 1.0 + x.real())};
}

bool is_integer_valued(Complex b) {
  return b.imag() == 0.0 && std::isfinite(b.real()) && std::trunc(b.real()) == b.real() &&
         std::abs(b.real()) < 9.0e15;
}

bool vanishes(Complex w) { return std::abs(Complex(1.0, 0.0) - w) <= 8.0 * kEps * std::max(1.0, std::abs(w)); }

void check_cap(std::int64_t used, const QContext& ctx, const char* what) {
  if (used > ctx.max_terms()) {
    throw TermCapExceeded(std::string(what) + ": more than " + std::to_string(ctx.max_terms()) +
                          " factors needed for tol");
  }
}

}  // namespace

Complex ExtendedComplex::value() const {
  if (infinite_) throw DomainError("value requested from the point at infinity");
  return value_;
}

ExtendedComplex ExtendedComplex::reciprocal() const {
  if (infinite_) return finite({0.0, 0.0});
  if (value_ == Complex(0.0, 0.0)) return infinity();
  return finite(Complex(1.0, 0.0) / value_);
}

Complex qpoch_finite(Complex a, std::int64_t n, const QContext& ctx) {
  if (n < 0) throw InvalidArgument("qpoch_finite needs n >= 0");
  Complex out(1.0, 0.0);
  Complex aqj = a;
  for (std::int64_t j = 0; j < n; ++j) {
    out *= Complex(1.0, 0.0) - aqj;
    aqj *= ctx.q();
  }
  return out;
}

std::int64_t qpoch_infinite_factors(Complex a, const QContext& ctx) {
  const double q = ctx.q();
  const double bound0 = std::abs(a) / (1.0 - q);
  std::int64_t j = 0;
  double bound = bound0;
  while (bound >= ctx.tol()) {
    ++j;
    bound *= q;
    check_cap(j, ctx, "qpoch_infinite");
  }
  return j;
}

Complex qpoch_infinite(Complex a, const QContext& ctx) {
  const std::int64_t factors = qpoch_infinite_factors(a, ctx);
  return qpoch_finite(a, factors, ctx);
}

LogProduct qpoch_qpower_log(Complex exponent, const QContext& ctx) {
  const double q = ctx.q();
  LogProduct out;
  for (std::int64_t j = 0;; ++j) {
    const Complex e = exponent + static_cast<double>(j);
    if (e == Complex(0.0, 0.0)) {
      out.zero = true;
      return out;
    }
    const Complex w = std::exp(e * ctx.log_q());
    if (std::abs(w) / (1.0 - q) < ctx.tol()) return out;
    check_cap(j + 1, ctx, "qpoch_qpower_log");
    out.log += log1p_complex(-w);
  }
}

LogProduct qpoch_infinite_log(Complex a, const QContext& ctx) {
  const std::int64_t factors = qpoch_infinite_factors(a, ctx);
  LogProduct out;
  Complex w = a;
  for (std::int64_t j = 0; j < factors; ++j) {
    if (vanishes(w)) {
      out.zero = true;
      return out;
    }
    out.log += log1p_complex(-w);
    w *= ctx.q();
  }
  return out;
}

ExtendedComplex qpoch_general(Complex a, Complex b, const QContext& ctx) {
  if (is_integer_valued(b)) {
    const auto m = static_cast<std::int64_t>(b.real());
    if (m >= 0) return ExtendedComplex::finite(qpoch_finite(a, m, ctx));
    // (a;q)_{-m} = 1 / (a q^{-m}; q)_m
    Complex denom(1.0, 0.0);
    for (std::int64_t j = 0; j < -m; ++j) {
      const Complex w = a * std::pow(ctx.q(), static_cast<double>(j + m));
      if (vanishes(w)) return ExtendedComplex::infinity();
      denom *= Complex(1.0, 0.0) - w;
    }
    return ExtendedComplex::finite(Complex(1.0, 0.0) / denom);
  }
  const LogProduct num = qpoch_infinite_log(a, ctx);
  const LogProduct den = qpoch_infinite_log(a * std::exp(b * ctx.log_q()), ctx);
  if (num.zero && den.zero) throw IndeterminateRatio("(a;q)_b: numerator and denominator both vanish");
  if (den.zero) return ExtendedComplex::infinity();
  if (num.zero) return ExtendedComplex::finite({0.0, 0.0});
  return ExtendedComplex::finite(std::exp(num.log - den.log));
}

Complex euler_partial(Complex z, std::int64_t N, const QContext& ctx) {
  if (N < 0) throw InvalidArgument("euler_partial needs N >= 0");
  Complex sum(1.0, 0.0);
  Complex term(1.0, 0.0);
  double qn = 1.0;
  for (std::int64_t n = 1; n <= N; ++n) {
    qn *= ctx.q();
    term *= z / (1.0 - qn);
    sum += term;
  }
  return sum;
}

std::int64_t euler_terms_for_tol(Complex z, const QContext& ctx) {
  const double r = std::abs(z);
  if (!(r < 1.0)) throw DomainError("Euler series needs |z| < 1");
  if (r == 0.0) return 0;
  const double qq = std::abs(qpoch_infinite(ctx.q(), ctx));
  // |z|^{N+1} < tol (q;q)_inf (1 - |z|)
  const double target = std::log(ctx.tol() * qq * (1.0 - r));
  const double need = std::ceil(target / std::log(r)) - 1.0;
  const auto N = static_cast<std::int64_t>(std::max(0.0, need));
  check_cap(N, ctx, "euler_terms_for_tol");
  return N;
}

namespace exact {

Rational qpoch_finite(const Rational& a, long n, const Rational& q) {
  if (n < 0) throw InvalidArgument("qpoch_finite needs n >= 0");
  return detail::qpoch_finite(a, q, n);
}

Rational euler_partial(const Rational& z, long N, const Rational& q) {
  Rational sum(1), term(1), qn(1);
  for (long n = 1; n <= N; ++n) {
    qn *= q;
    term *= z / (Rational(1) - qn);
    sum += term;
  }
  return sum;
}

}  // namespace exact

}  // namespace qpr
