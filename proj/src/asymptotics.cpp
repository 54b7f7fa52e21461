#include "qpr/asymptotics.hpp"

#include <cmath>
#include <string>

#include "qpr/detail/recursions.hpp"
#include "qpr/errors.hpp"
#include "qpr/qcore.hpp"

namespace qpr {

namespace {

void require_nonzero(Complex t, const char* what) {
  if (t == Complex(0.0, 0.0)) throw ZeroArgument(std::string(what) + " needs t != 0");
}

bool is_infinite(Complex t) { return std::isinf(t.real()) || std::isinf(t.imag()); }

double q_pow(const QContext& ctx, double e) { return std::exp(e * ctx.log_q()); }

double qq_finite(std::int64_t n, const QContext& ctx) { return qpoch_finite(ctx.q(), n, ctx).real(); }

double qq_infinite(const QContext& ctx) { return qpoch_infinite(ctx.q(), ctx).real(); }

}  // namespace

Complex limit_value(LimitKind kind, Complex t, const QContext& ctx) {
  require_nonzero(t, "limit_value");
  const Complex u = is_infinite(t) ? Complex(0.0, 0.0) : 1.0 / t;
  if (kind == LimitKind::kSymmetric) return airy_eval(u * u, ctx);
  return airy_eval(u, ctx) / qq_infinite(ctx);
}

ConvergenceRow make_convergence_row(std::int64_t n, Complex value, Complex limit, double q) {
  const double err = std::abs(value - limit);
  return {n, value, limit, err, err / std::pow(q, static_cast<double>(n))};
}

std::vector<ConvergenceRow> convergence_table(const FamilySpec& spec, Complex t, std::int64_t n_max, const QContext& ctx) {
  require_nonzero(t, "convergence_table");
  if (n_max < 0) throw InvalidArgument("convergence_table needs n_max >= 0");
  const CoeffTable table = coeff_table(spec, n_max, ctx);
  const Complex limit = limit_value(limit_kind(spec), t, ctx);
  std::vector<ConvergenceRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max + 1));
  for (std::int64_t n = 0; n <= n_max; ++n) rows.push_back(make_convergence_row(n, eval_upoly(table, n, t), limit, ctx.q()));
  return rows;
}

Complex hermite_expansion(std::int64_t n, Complex t, std::int64_t J, const QContext& ctx) {
  require_nonzero(t, "hermite_expansion");
  if (J < 0) throw InvalidArgument("hermite_expansion needs J >= 0");
  const Complex u = 1.0 / (t * t);
  Complex sum(0.0, 0.0);
  Complex u_j(1.0, 0.0);
  for (std::int64_t j = 0; j <= J; ++j) {
    const double dj = static_cast<double>(j);
    const double w = q_pow(ctx, dj * (dj + 1.0) / 2.0 + dj * static_cast<double>(n)) / qq_finite(j, ctx);
    sum += w * u_j * airy_eval(q_pow(ctx, dj) * u, ctx);
    u_j *= u;
  }
  return sum;
}

Complex sw_expansion(std::int64_t n, Complex t, std::int64_t s_max, const QContext& ctx) {
  require_nonzero(t, "sw_expansion");
  if (s_max < 0) throw InvalidArgument("sw_expansion needs Smax >= 0");
  Complex sum(0.0, 0.0);
  for (std::int64_t s = 0; s <= s_max; ++s) {
    const double ds = static_cast<double>(s);
    const double w = q_pow(ctx, ds * (ds + 1.0) / 2.0 + ds * static_cast<double>(n)) / qq_finite(s, ctx);
    const Complex term = w * airy_eval(q_pow(ctx, -ds) / t, ctx);
    sum += s % 2 == 0 ? term : -term;
  }
  return sum / qq_infinite(ctx);
}

namespace {

// Inner sum of the q-Laguerre expansion for one m.
Complex laguerre_inner(std::int64_t m, Complex t, double alpha, const QContext& ctx, LaguerreExpansionForm form) {
  const double qm = qq_finite(m, ctx);
  Complex inner(0.0, 0.0);
  for (std::int64_t s = 0; s <= m; ++s) {
    const double ds = static_cast<double>(s);
    const double d = static_cast<double>(m - 2 * s);
    const double binom = qm / (qq_finite(s, ctx) * qq_finite(m - s, ctx));
    Complex term = binom * q_pow(ctx, ds * alpha + d * d / 2.0) * airy_eval(q_pow(ctx, -d) / t, ctx);
    if (form == LaguerreExpansionForm::kCorrected) term *= std::pow(t, -ds);
    inner += (m - s) % 2 == 0 ? term : -term;
  }
  return inner;
}

}  // namespace

Complex laguerre_expansion(std::int64_t n, Complex t, double alpha, std::int64_t m_max, const QContext& ctx,
                           LaguerreExpansionForm form) {
  require_nonzero(t, "laguerre_expansion");
  if (m_max < 0) throw InvalidArgument("laguerre_expansion needs Mmax >= 0");
  Complex sum(0.0, 0.0);
  for (std::int64_t m = 0; m <= m_max; ++m) {
    const double dm = static_cast<double>(m);
    const double w = q_pow(ctx, dm / 2.0 + dm * static_cast<double>(n)) / qq_finite(m, ctx);
    sum += w * laguerre_inner(m, t, alpha, ctx, form);
  }
  return sum / qq_infinite(ctx);
}

Complex sw_first_correction(Complex t, const QContext& ctx) {
  require_nonzero(t, "sw_first_correction");
  const double q = ctx.q();
  return -q / ((1.0 - q) * qq_infinite(ctx)) * airy_eval(1.0 / (q * t), ctx);
}

Complex laguerre_first_correction(Complex t, double alpha, const QContext& ctx, LaguerreExpansionForm form) {
  require_nonzero(t, "laguerre_first_correction");
  const double q = ctx.q();
  return std::sqrt(q) / ((1.0 - q) * qq_infinite(ctx)) * laguerre_inner(1, t, alpha, ctx, form);
}

Complex hermite_first_correction(Complex t, const QContext& ctx) {
  require_nonzero(t, "hermite_first_correction");
  const double q = ctx.q();
  const Complex u = 1.0 / (t * t);
  return q / (1.0 - q) * u * airy_eval(q * u, ctx);
}

PowerSeriesCoeffs lambda_sequence(double c1, Complex lambda0, std::int64_t J, const QContext& ctx) {
  if (J < 1) throw InvalidArgument("lambda_sequence needs J >= 1");
  PowerSeriesCoeffs out;
  out.variable = SeriesVariable::kInverseTSquared;
  out.coeffs.push_back(lambda0);
  for (std::int64_t j = 1; j <= J; ++j) {
    const double dj = static_cast<double>(j);
    const double shrink = q_pow(ctx, 2.0 * dj - 2.0);
    const double source = 2.0 * q_pow(ctx, dj * dj - dj) * (1.0 + c1 * q_pow(ctx, 2.0 * dj));
    out.coeffs.push_back((-shrink * out.coeffs.back() + source) / (1.0 - q_pow(ctx, dj)));
  }
  return out;
}

An1Report an1_identity_check(const CoeffTable& table, std::int64_t n, const QContext& ctx) {
  const FamilySpec& spec = table.family();
  if (spec.is_symmetric()) throw UnsupportedFamily("an1_identity_check needs a Laguerre-type family");
  if (n < 0 || n > table.order()) throw InvalidArgument("an1_identity_check: row " + std::to_string(n) + " not in table");
  const double q = ctx.q();
  const double lhs = qq_finite(n, ctx) * table.at(n, 1);
  double rhs = 0.0;
  for (std::int64_t j = 0; j < n; ++j) {
    rhs += map_to_scaled(spec, j, ctx).c * q_pow(ctx, 2.0 * static_cast<double>(n - j));
  }
  rhs *= 1.0 + 1.0 / q;
  return {n, lhs, rhs, std::abs(lhs - rhs), std::abs(std::abs(lhs) - std::abs(rhs))};
}

An1Report an1_identity_check(const FamilySpec& spec, std::int64_t n, const QContext& ctx) {
  return an1_identity_check(coeff_table(spec, n, ctx), n, ctx);
}

double an1_telescoping_residual(const CoeffTable& table, std::int64_t n, const QContext& ctx) {
  if (n < 0 || n + 1 > table.order()) throw InvalidArgument("an1_telescoping_residual needs rows n and n+1");
  const double q = ctx.q();
  const double c = map_to_scaled(table.family(), n, ctx).c;
  return qq_finite(n, ctx) * table.at(n, 1) - qq_finite(n + 1, ctx) * table.at(n + 1, 1) / (q * q) - (1.0 + q) / q * c;
}

namespace exact {

std::vector<Rational> lambda_sequence(const Rational& c1, const Rational& lambda0, long J, const Rational& q) {
  if (J < 1) throw InvalidArgument("lambda_sequence needs J >= 1");
  return detail::lambda_coefficients(q, c1, lambda0, J);
}

}  // namespace exact

}  // namespace qpr
