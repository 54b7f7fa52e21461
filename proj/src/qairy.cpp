#include "qpr/qairy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qpr/detail/recursions.hpp"
#include "qpr/errors.hpp"
#include "qpr/simd/kernels.hpp"

namespace qpr {

namespace {

void check_cap(std::int64_t used, const QContext& ctx, const char* what) {
  if (used > ctx.max_terms()) {
    throw TermCapExceeded(std::string(what) + ": more than " + std::to_string(ctx.max_terms()) +
                          " terms needed for tol");
  }
}

bool is_integer_valued(Complex s) { return s.imag() == 0.0 && std::trunc(s.real()) == s.real(); }

}  // namespace

ScaledValue airy_coeff_scaled(std::int64_t k, const QContext& ctx) {
  if (k < 0) throw InvalidArgument("airy_coeff needs k >= 0");
  const double qq = qpoch_finite(ctx.q(), k, ctx).real();
  ScaledValue c = ScaledValue(ctx.q()).pow(k * k) / ScaledValue(qq);
  return k % 2 == 0 ? c : -c;
}

Complex airy_coeff(std::int64_t k, const QContext& ctx) { return airy_coeff_scaled(k, ctx).to_complex(); }

std::int64_t airy_truncation(double abs_z, const QContext& ctx) {
  if (abs_z == 0.0) return 0;
  if (!std::isfinite(abs_z)) throw DomainError("A_q needs a finite argument");
  const double log_qinf = std::log(std::abs(qpoch_infinite(ctx.q(), ctx)));
  const double log_z = std::log(abs_z);
  // bound_k = q^{k^2} |z|^k / (q;q)_inf; ratio bound_{k+1}/bound_k = q^{2k+1}|z|.
  auto log_bound = [&](double k) { return k * k * ctx.log_q() + k * log_z - log_qinf; };
  const double log_tail_target = std::log(ctx.tol() / 2.0);
  for (std::int64_t k = 0;; ++k) {
    check_cap(k, ctx, "airy_eval");
    const double kk = static_cast<double>(k);
    const bool contracting = (2.0 * kk + 1.0) * ctx.log_q() + log_z <= -std::numbers::ln2;
    if (contracting && log_bound(kk + 1.0) < log_tail_target) return k;
  }
}

ComplexExt airy_eval_ext(ComplexExt z, const QContext& ctx) {
  // For |z| of order 1 and q near 1 the alternating terms exceed the sum by
  // several decades, so the extra mantissa bits matter even for airy_eval.
  const std::int64_t K = airy_truncation(static_cast<double>(std::abs(z)), ctx);
  const long double q = ctx.q();
  ComplexExt sum(1.0L, 0.0L);
  ComplexExt term(1.0L, 0.0L);
  long double qk = 1.0L;
  long double q2km1 = 1.0L / q;
  for (std::int64_t k = 1; k <= K; ++k) {
    qk *= q;
    q2km1 *= q * q;
    term *= -z * (q2km1 / (1.0L - qk));
    sum += term;
  }
  return sum;
}

Complex airy_eval(Complex z, const QContext& ctx) {
  const ComplexExt v = airy_eval_ext(ComplexExt(z.real(), z.imag()), ctx);
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

std::vector<Complex> airy_eval_batch(std::span<const Complex> z, const QContext& ctx) {
  double zmax = 0.0;
  for (const Complex& v : z) zmax = std::max(zmax, std::abs(v));
  const std::int64_t K = airy_truncation(zmax, ctx);
  std::vector<double> coeffs(static_cast<std::size_t>(K + 1));
  for (std::int64_t k = 0; k <= K; ++k) coeffs[static_cast<std::size_t>(k)] = airy_coeff(k, ctx).real();

  std::vector<double> re(z.size()), im(z.size()), out_re(z.size()), out_im(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    re[i] = z[i].real();
    im[i] = z[i].imag();
  }
  simd::active_kernels().horner_complex(
      {coeffs.data(), coeffs.size(), re.data(), im.data(), out_re.data(), out_im.data(), z.size()});
  std::vector<Complex> out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) out[i] = {out_re[i], out_im[i]};
  return out;
}

Complex fq_eval(Complex z, Complex s, const QContext& ctx) {
  if (z == Complex(0.0, 0.0)) throw ZeroArgument("F_q(z; s) needs z != 0");
  if (z.imag() == 0.0 && z.real() < 0.0 && !is_integer_valued(s)) {
    throw BranchAmbiguity("F_q(z; s): z on the negative real axis with non-integer s");
  }
  const Complex log_z = std::log(z);
  const LogProduct qq = qpoch_qpower_log(1.0, ctx);  // (q;q)_inf

  auto term = [&](std::int64_t n) -> Complex {
    const Complex m = static_cast<double>(n) + s;
    const LogProduct tail = qpoch_qpower_log(m + 1.0, ctx);
    if (tail.zero) return {0.0, 0.0};
    const Complex log_mag = m * m * ctx.log_q() + m * log_z + tail.log - qq.log;
    const Complex v = std::exp(log_mag);
    return n % 2 == 0 ? v : -v;
  };

  // Walk one direction until three consecutive terms are below tol while
  // shrinking.
  auto sweep = [&](std::int64_t start, std::int64_t step) {
    Complex acc(0.0, 0.0);
    int quiet = 0;
    double last = std::numeric_limits<double>::infinity();
    for (std::int64_t n = start, used = 0;; n += step, ++used) {
      check_cap(used, ctx, "fq_eval");
      const Complex t = term(n);
      acc += t;
      const double mag = std::abs(t);
      quiet = (mag < ctx.tol() && mag <= last) ? quiet + 1 : 0;
      last = mag;
      if (quiet >= 3) return acc;
    }
  };

  const Complex total = sweep(0, 1) + sweep(-1, -1);
  return std::exp(Complex(0.0, std::numbers::pi) * s) * total;
}

FeqSolution solve_feq(int sign_a, std::int64_t N, const QContext& ctx) {
  if (sign_a != 1 && sign_a != -1) throw InvalidArgument("sign_a must be +1 or -1");
  if (N < 1) throw InvalidArgument("solve_feq needs N >= 1");
  const double q = ctx.q();
  FeqSolution sol;
  sol.sign_a = sign_a;
  sol.q = q;
  sol.normalized = detail::feq_normalized<double>(sign_a, q, N);
  sol.coeffs.variable = SeriesVariable::kInverseZ;
  const ScaledValue sq(q);
  for (std::int64_t n = 0; n <= N; ++n) {
    const ScaledValue f = ScaledValue(sol.normalized[static_cast<std::size_t>(n)]) * sq.pow(n * n);
    sol.scaled.push_back(f);
    sol.coeffs.coeffs.push_back(f.to_complex());
  }
  if (sign_a == -1) {
    const double root = std::sqrt(1.0 + 6.0 * q + q * q);
    sol.beta = 2.0 / ((1.0 + q) + root);
    sol.alpha = -((1.0 + q) + root) / (2.0 * q);
  }
  return sol;
}

double darboux_tail(std::int64_t n, const FeqSolution& sol, const QContext& ctx) {
  if (sol.sign_a != -1 || !sol.alpha || !sol.beta) throw WrongBranch("darboux_tail needs the a = -1 solution");
  const QContext ctx2(ctx.q() * ctx.q(), ctx.tol(), ctx.max_terms());
  const double beta = *sol.beta;
  const double denom = qpoch_infinite(ctx2.q(), ctx2).real() * qpoch_infinite(beta / *sol.alpha, ctx2).real();
  return std::pow(beta, -static_cast<double>(n)) / denom;
}

double fb_eval(double x, const FeqSolution& sol, const QContext& ctx) {
  if (sol.sign_a != -1 || !sol.alpha || !sol.beta) throw WrongBranch("f^b needs the a = -1 solution");
  if (x == 0.0) throw ZeroArgument("f^b(x) needs x != 0");
  if (std::isinf(x)) return 1.0;
  const ScaledValue inv_x(1.0 / x);
  const std::int64_t N = sol.order();
  ScaledValue sum;
  ScaledValue prev;
  for (std::int64_t n = 0; n <= N; ++n) {
    const ScaledValue t = sol.scaled[static_cast<std::size_t>(n)] * inv_x.pow(n);
    sum += t;
    if (n >= 1) {
      const double log_t = t.log_mag();
      const double log_ratio = log_t - prev.log_mag();
      // Terms shrink super-geometrically once past the peak.
      if (log_ratio <= -std::numbers::ln2 && log_t + std::numbers::ln2 < std::log(ctx.tol())) {
        return sum.to_real();
      }
    }
    prev = t;
  }
  // Ran out of stored coefficients: bound the rest with g_m <= 2 D beta^{-m}.
  const double beta = *sol.beta;
  const double D = darboux_tail(0, sol, ctx);
  const double m = static_cast<double>(N + 1);
  const double log_first = std::log(2.0 * D) - m * std::log(beta) + m * m * ctx.log_q() - m * std::log(std::abs(x));
  const double log_rho = (2.0 * m + 1.0) * ctx.log_q() - std::log(beta) - std::log(std::abs(x));
  if (log_rho < 0.0) {
    const double log_tail = log_first - std::log1p(-std::exp(log_rho));
    if (log_tail < std::log(ctx.tol())) return sum.to_real();
  }
  throw TermCapExceeded("f^b: " + std::to_string(N + 1) + " coefficients do not reach tol at x = " + std::to_string(x));
}

namespace exact {

Rational airy_coeff(long k, const Rational& q) {
  if (k < 0) throw InvalidArgument("airy_coeff needs k >= 0");
  return detail::airy_coefficients(q, k).back();
}

std::vector<Rational> solve_feq(int sign_a, long N, const Rational& q) {
  if (sign_a != 1 && sign_a != -1) throw InvalidArgument("sign_a must be +1 or -1");
  std::vector<Rational> g = detail::feq_normalized(sign_a, q, N);
  for (long n = 0; n <= N; ++n) g[static_cast<std::size_t>(n)] *= detail::int_pow(q, n * n);
  return g;
}

}  // namespace exact

}  // namespace qpr
