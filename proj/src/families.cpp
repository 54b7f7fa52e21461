#include "qpr/families.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qpr/detail/sturm.hpp"
#include "qpr/errors.hpp"

namespace qpr {

namespace {

double q_pow(double q, double e) { return std::exp(e * std::log(q)); }

void require_symmetric(const FamilySpec& spec, const char* what) {
  if (!spec.is_symmetric()) throw UnsupportedFamily(std::string(what) + " needs a symmetric family, got " + spec.name());
}

void require_laguerre(const FamilySpec& spec, const char* what) {
  if (spec.is_symmetric()) throw UnsupportedFamily(std::string(what) + " needs a Laguerre-type family, got " + spec.name());
}

}  // namespace

FamilySpec FamilySpec::q_inv_hermite() {
  FamilySpec s;
  s.kind_ = FamilyKind::kQInvHermite;
  s.name_ = "qinv-hermite";
  s.c_ = 1.0;
  return s;
}

FamilySpec FamilySpec::q_laguerre(double alpha) {
  if (!(alpha > -1.0) || !std::isfinite(alpha)) throw InvalidArgument("q-Laguerre needs alpha > -1");
  FamilySpec s;
  s.kind_ = FamilyKind::kQLaguerre;
  s.name_ = "q-laguerre";
  s.alpha_ = alpha;
  return s;
}

FamilySpec FamilySpec::stieltjes_wigert() {
  FamilySpec s;
  s.kind_ = FamilyKind::kStieltjesWigert;
  s.name_ = "stieltjes-wigert";
  return s;
}

FamilySpec FamilySpec::generic_symmetric(double c, Schedule beta) {
  if (!(c > 0.0) || !std::isfinite(c)) throw InvalidArgument("generic symmetric family needs c > 0");
  if (!beta) throw InvalidArgument("generic symmetric family needs a beta schedule");
  FamilySpec s;
  s.kind_ = FamilyKind::kGenericSymmetric;
  s.name_ = "generic-symmetric";
  s.c_ = c;
  s.beta_ = std::move(beta);
  return s;
}

FamilySpec FamilySpec::generic_laguerre_type(double alpha, Schedule a, Schedule b, Schedule c) {
  if (!std::isfinite(alpha)) throw InvalidArgument("generic Laguerre-type family needs a finite alpha");
  if (!a || !b || !c) throw InvalidArgument("generic Laguerre-type family needs a, b and c schedules");
  FamilySpec s;
  s.kind_ = FamilyKind::kGenericLaguerreType;
  s.name_ = "generic-laguerre";
  s.alpha_ = alpha;
  s.a_ = std::move(a);
  s.b_ = std::move(b);
  s.cc_ = std::move(c);
  return s;
}

double FamilySpec::beta(std::int64_t n, double q) const {
  require_symmetric(*this, "beta");
  if (kind_ == FamilyKind::kQInvHermite) return 1.0 - q_pow(q, static_cast<double>(n));
  return beta_(n, q);
}

double FamilySpec::symmetric_b(std::int64_t n, double q) const {
  return q_pow(q, -static_cast<double>(n) * c_) * beta(n, q);
}

FamilySpec::LaguerreCoeffs FamilySpec::laguerre_coeffs(std::int64_t n, double q) const {
  require_laguerre(*this, "laguerre_coeffs");
  const double dn = static_cast<double>(n);
  const double qn1 = q_pow(q, dn + 1.0);
  switch (kind_) {
    case FamilyKind::kStieltjesWigert:
      return {-(1.0 - qn1), -q, 1.0 + q - qn1};
    case FamilyKind::kQLaguerre:
      return {-(1.0 - qn1), -q * (1.0 - q_pow(q, dn + alpha_)), 1.0 - qn1 + q - q_pow(q, dn + alpha_ + 1.0)};
    default:
      return {a_(n, q), b_(n, q), cc_(n, q)};
  }
}

ScaledValue eval_raw(const FamilySpec& spec, std::int64_t n, Complex x, const QContext& ctx) {
  if (n < 0) throw InvalidArgument("eval_raw needs n >= 0");
  if (n > kMaxRawDegree) {
    throw UnsupportedRange("eval_raw supports n <= " + std::to_string(kMaxRawDegree) + ", got " + std::to_string(n));
  }
  const double q = ctx.q();
  if (n == 0) return ScaledValue(1.0);

  ScaledValue prev(1.0);
  ScaledValue cur;
  if (spec.is_symmetric()) {
    cur = ScaledValue(2.0 * x);
    const ScaledValue two_x(2.0 * x);
    for (std::int64_t k = 1; k < n; ++k) {
      // q^{-kc} beta_k without forming q^{-kc} in double.
      const ScaledValue bk = ScaledValue::from_log(Complex(-static_cast<double>(k) * spec.c_exponent() * ctx.log_q(), 0.0)) *
                             ScaledValue(spec.beta(k, q));
      ScaledValue next = two_x * cur - bk * prev;
      prev = cur;
      cur = next;
    }
    return cur;
  }

  const double alpha = spec.alpha();
  switch (spec.kind()) {
    case FamilyKind::kQLaguerre: {
      const double qa1 = q_pow(q, alpha + 1.0);
      cur = ScaledValue((1.0 - qa1 - x * qa1) / (1.0 - q));
      break;
    }
    case FamilyKind::kStieltjesWigert:
      cur = ScaledValue((1.0 - q * x) / (1.0 - q));
      break;
    default: {
      const auto c0 = spec.laguerre_coeffs(0, q);
      if (c0.a == 0.0) throw InvalidArgument("generic Laguerre-type family has a_0 = 0");
      cur = ScaledValue((x * q_pow(q, alpha + 1.0) - c0.c) / c0.a);
      break;
    }
  }
  const ScaledValue sx(x);
  for (std::int64_t k = 1; k < n; ++k) {
    const auto ck = spec.laguerre_coeffs(k, q);
    if (ck.a == 0.0) throw InvalidArgument("Laguerre-type family has a_n = 0 at n = " + std::to_string(k));
    const ScaledValue xq = sx * ScaledValue::from_log(Complex((2.0 * static_cast<double>(k) + alpha + 1.0) * ctx.log_q(), 0.0));
    ScaledValue next = (xq * cur - ScaledValue(ck.b) * prev - ScaledValue(ck.c) * cur) / ScaledValue(ck.a);
    prev = cur;
    cur = next;
  }
  return cur;
}

Complex scale_arg_symmetric(std::int64_t n, Complex t, const QContext& ctx) {
  if (t == Complex(0.0, 0.0)) throw ZeroArgument("scale_arg_symmetric needs t != 0");
  const double h = std::exp(0.5 * static_cast<double>(n) * ctx.log_q());  // q^{n/2}
  return 0.5 * (t / h - h / t);
}

Complex scale_arg_laguerre(std::int64_t n, Complex t, double alpha, const QContext& ctx) {
  return std::exp(-(2.0 * static_cast<double>(n) + alpha) * ctx.log_q()) * t;
}

ScaledCoeffs map_to_scaled(const FamilySpec& spec, std::int64_t n, const QContext& ctx) {
  require_laguerre(spec, "map_to_scaled");
  const double q = ctx.q();
  const auto raw = spec.laguerre_coeffs(n, q);
  const double expected_a = -(1.0 - q_pow(q, static_cast<double>(n) + 1.0));
  if (!(std::abs(raw.a - expected_a) <= 1e-12 * std::abs(expected_a))) {
    throw InconsistentFamily("a_" + std::to_string(n) + " = " + std::to_string(raw.a) + " but the scaling needs -(1 - q^{n+1}) = " +
                             std::to_string(expected_a));
  }
  return {raw.c / (1.0 + q), -raw.b / q};
}

double symmetric_scaled_c(const FamilySpec& spec, std::int64_t n, const QContext& ctx) {
  require_symmetric(spec, "symmetric_scaled_c");
  const double q = ctx.q();
  if (spec.kind() == FamilyKind::kQInvHermite) return 1.0 - q_pow(q, static_cast<double>(n));
  return q_pow(q, static_cast<double>(n) * (1.0 - spec.c_exponent())) * spec.beta(n, q);
}

JacobiMatrix jacobi_matrix(const FamilySpec& spec, std::int64_t n, const QContext& ctx) {
  if (n < 1) throw InvalidArgument("jacobi_matrix needs n >= 1");
  const double q = ctx.q();
  JacobiMatrix J;
  J.diag.assign(static_cast<std::size_t>(n), 0.0);
  J.offdiag_sq.assign(static_cast<std::size_t>(n), 0.0);
  if (spec.is_symmetric()) {
    for (std::int64_t k = 1; k < n; ++k) J.offdiag_sq[static_cast<std::size_t>(k)] = spec.symmetric_b(k, q) / 4.0;
  } else {
    const double alpha = spec.alpha();
    for (std::int64_t k = 0; k < n; ++k) {
      const auto ck = spec.laguerre_coeffs(k, q);
      J.diag[static_cast<std::size_t>(k)] = ck.c * q_pow(q, -(2.0 * static_cast<double>(k) + alpha + 1.0));
      if (k >= 1) {
        const auto prev = spec.laguerre_coeffs(k - 1, q);
        J.offdiag_sq[static_cast<std::size_t>(k)] = ck.b * prev.a * q_pow(q, -(4.0 * static_cast<double>(k) + 2.0 * alpha));
      }
    }
  }
  for (std::int64_t k = 1; k < n; ++k) {
    const double e2 = J.offdiag_sq[static_cast<std::size_t>(k)];
    if (!(e2 >= 0.0)) {
      throw UnsupportedFamily(spec.name() + ": negative off-diagonal square at k = " + std::to_string(k));
    }
  }
  return J;
}

double largest_zero(const FamilySpec& spec, std::int64_t n, const QContext& ctx) {
  const JacobiMatrix J = jacobi_matrix(spec, n, ctx);
  if (n == 1) return J.diag[0];
  Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(J.diag.data(), n);
  Eigen::VectorXd sub(n - 1);
  for (std::int64_t k = 1; k < n; ++k) sub[k - 1] = std::sqrt(J.offdiag_sq[static_cast<std::size_t>(k)]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("tridiagonal eigensolver did not converge");
  return solver.eigenvalues()[n - 1];
}

double largest_zero_bisection(const FamilySpec& spec, std::int64_t n, const QContext& ctx) {
  const JacobiMatrix J = jacobi_matrix(spec, n, ctx);
  return detail::largest_eigenvalue(J.diag, J.offdiag_sq, 256, std::numeric_limits<double>::min());
}

mpf_class largest_zero_extended(const FamilySpec& spec, std::int64_t n, const QContext& ctx, unsigned bits) {
  if (n < 1) throw InvalidArgument("largest_zero_extended needs n >= 1");
  // gmpxx temporaries take the default precision, so raise it for the call.
  struct PrecisionGuard {
    mp_bitcnt_t saved = mpf_get_default_prec();
    explicit PrecisionGuard(unsigned b) { mpf_set_default_prec(b); }
    ~PrecisionGuard() { mpf_set_default_prec(saved); }
  } guard(bits);

  std::vector<mpf_class> d(static_cast<std::size_t>(n), mpf_class(0));
  std::vector<mpf_class> e2(static_cast<std::size_t>(n), mpf_class(0));
  if (spec.kind() == FamilyKind::kQInvHermite) {
    const mpf_class q(ctx.q());
    mpf_class qk(1);
    for (std::int64_t k = 1; k < n; ++k) {
      qk *= q;
      e2[static_cast<std::size_t>(k)] = (1 - qk) / qk / 4;
    }
  } else {
    const JacobiMatrix J = jacobi_matrix(spec, n, ctx);
    for (std::int64_t k = 0; k < n; ++k) {
      d[static_cast<std::size_t>(k)] = J.diag[static_cast<std::size_t>(k)];
      e2[static_cast<std::size_t>(k)] = J.offdiag_sq[static_cast<std::size_t>(k)];
    }
  }
  mpf_class tiny(1);
  mpf_div_2exp(tiny.get_mpf_t(), tiny.get_mpf_t(), 4 * bits);
  return detail::largest_eigenvalue(d, e2, static_cast<int>(bits) + 160, tiny);
}

HypothesisReport check_hypotheses(const FamilySpec& spec, std::int64_t n_max, const QContext& ctx) {
  if (n_max < 0) throw InvalidArgument("check_hypotheses needs n_max >= 0");
  HypothesisReport report;
  std::vector<double> dev;
  for (std::int64_t n = 0; n <= n_max; ++n) {
    double v;
    if (spec.is_symmetric()) {
      v = std::abs(symmetric_scaled_c(spec, n, ctx) - 1.0);
    } else {
      const ScaledCoeffs c = map_to_scaled(spec, n, ctx);
      v = std::max(std::abs(c.c - 1.0), std::abs(c.d - 1.0));
    }
    if (!std::isfinite(v)) {
      report.ok = false;
      report.warnings.push_back(spec.name() + ": non-finite scaled coefficient at n = " + std::to_string(n));
      v = std::numeric_limits<double>::infinity();
    }
    dev.push_back(v);
  }
  report.final_deviation = dev.back();
  for (std::size_t i = dev.size() / 2 + 1; i < dev.size(); ++i) {
    if (dev[i] > dev[i - 1] * (1.0 + 1e-12) + 1e-15) {
      report.ok = false;
      report.warnings.push_back(spec.name() + ": scaled coefficients move away from 1 at n = " + std::to_string(i));
      break;
    }
  }
  if (report.final_deviation > 1e-3) {
    report.ok = false;
    report.warnings.push_back(spec.name() + ": scaled coefficients still " + std::to_string(report.final_deviation) +
                              " away from 1 at n = " + std::to_string(n_max));
  }
  return report;
}

}  // namespace qpr
