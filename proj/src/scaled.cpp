#include "qpr/scaled.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qpr/detail/recursions.hpp"
#include "qpr/errors.hpp"
#include "qpr/qairy.hpp"
#include "qpr/qcore.hpp"
#include "qpr/simd/kernels.hpp"

namespace qpr {

namespace {

std::size_t row_start(std::int64_t n) { return static_cast<std::size_t>(n * (n + 1) / 2); }

Complex u_of(URole role, Complex t) {
  if (t == Complex(0.0, 0.0)) throw ZeroArgument("scaled polynomial needs t != 0");
  const Complex u = 1.0 / t;
  return role == URole::kInverseTSquared ? u * u : u;
}

// Powers q^{k + shift} for k = 0..len-1.
std::vector<double> q_powers(double q, std::size_t len, int step, int shift) {
  std::vector<double> out(len);
  const double qs = std::pow(q, step);
  double v = std::pow(q, shift);
  for (std::size_t k = 0; k < len; ++k) {
    out[k] = v;
    v *= qs;
  }
  return out;
}

}  // namespace

CoeffTable::CoeffTable(FamilySpec family, URole role, double q, std::int64_t N)
    : family_(std::move(family)), role_(role), q_(q), N_(N), data_(row_start(N + 1), 0.0) {
  if (N < 0) throw InvalidArgument("coefficient table needs N >= 0");
}

std::span<const double> CoeffTable::row(std::int64_t n) const {
  if (n < 0 || n > N_) throw InvalidArgument("row " + std::to_string(n) + " outside table of order " + std::to_string(N_));
  return {data_.data() + row_start(n), static_cast<std::size_t>(n + 1)};
}

std::span<double> CoeffTable::mutable_row(std::int64_t n) {
  return {data_.data() + row_start(n), static_cast<std::size_t>(n + 1)};
}

double CoeffTable::at(std::int64_t n, std::int64_t k) const {
  const auto r = row(n);
  return k >= 0 && k <= n ? r[static_cast<std::size_t>(k)] : 0.0;
}

CoeffTable symmetric_coeff_table(const FamilySpec& spec, std::int64_t N, const QContext& ctx) {
  if (!spec.is_symmetric()) throw UnsupportedFamily("symmetric table needs a symmetric family, got " + spec.name());
  const double q = ctx.q();
  CoeffTable table(spec, URole::kInverseTSquared, q, N);
  table.mutable_row(0)[0] = 1.0;
  const std::size_t width = static_cast<std::size_t>(N + 1);
  const std::vector<double> qk = q_powers(q, width, 1, 0);
  const std::vector<double> q2km1 = q_powers(q, width, 2, -1);
  std::vector<double> cur(width + 1, 0.0), cur_shift(width + 1, 0.0), prev_shift(width + 1, 0.0);
  const auto& kernels = simd::active_kernels();
  double qn = 1.0;
  for (std::int64_t n = 0; n < N; ++n) {
    const std::size_t len = static_cast<std::size_t>(n + 2);
    const auto r = table.row(n);
    std::fill(cur.begin(), cur.end(), 0.0);
    std::fill(cur_shift.begin(), cur_shift.end(), 0.0);
    std::fill(prev_shift.begin(), prev_shift.end(), 0.0);
    std::copy(r.begin(), r.end(), cur.begin());
    std::copy(r.begin(), r.end(), cur_shift.begin() + 1);
    if (n >= 1) {
      const auto p = table.row(n - 1);
      std::copy(p.begin(), p.end(), prev_shift.begin() + 1);
    }
    kernels.symmetric_row({table.mutable_row(n + 1).data(), cur.data(), cur_shift.data(), prev_shift.data(), qk.data(),
                           q2km1.data(), qn, symmetric_scaled_c(spec, n, ctx), len});
    qn *= q;
  }
  return table;
}

CoeffTable laguerre_coeff_table(const FamilySpec& spec, std::int64_t N, const QContext& ctx) {
  if (spec.is_symmetric()) throw UnsupportedFamily("Laguerre-type table needs a Laguerre-type family, got " + spec.name());
  const double q = ctx.q();
  CoeffTable table(spec, URole::kInverseT, q, N);
  table.mutable_row(0)[0] = 1.0;
  const std::size_t width = static_cast<std::size_t>(N + 1);
  const std::vector<double> q2k = q_powers(q, width, 2, 0);
  const std::vector<double> q2km3 = q_powers(q, width, 2, -3);
  std::vector<double> cur(width + 1, 0.0), cur_shift1(width + 1, 0.0), prev_shift2(width + 1, 0.0);
  const auto& kernels = simd::active_kernels();
  double qn1 = q;
  for (std::int64_t n = 0; n < N; ++n) {
    const std::size_t len = static_cast<std::size_t>(n + 2);
    const ScaledCoeffs cd = map_to_scaled(spec, n, ctx);
    const auto r = table.row(n);
    std::fill(cur.begin(), cur.end(), 0.0);
    std::fill(cur_shift1.begin(), cur_shift1.end(), 0.0);
    std::fill(prev_shift2.begin(), prev_shift2.end(), 0.0);
    std::copy(r.begin(), r.end(), cur.begin());
    std::copy(r.begin(), r.end(), cur_shift1.begin() + 1);
    if (n >= 1) {
      const auto p = table.row(n - 1);
      std::copy(p.begin(), p.end(), prev_shift2.begin() + 2);
    }
    kernels.laguerre_row({table.mutable_row(n + 1).data(), cur.data(), cur_shift1.data(), prev_shift2.data(), q2k.data(),
                          q2km3.data(), (1.0 + q) * cd.c / q, cd.d, 1.0 / (1.0 - qn1), len});
    qn1 *= q;
  }
  return table;
}

CoeffTable coeff_table(const FamilySpec& spec, std::int64_t N, const QContext& ctx) {
  return spec.is_symmetric() ? symmetric_coeff_table(spec, N, ctx) : laguerre_coeff_table(spec, N, ctx);
}

Complex eval_upoly(const CoeffTable& table, std::int64_t n, Complex t) {
  const Complex u = u_of(table.u_role(), t);
  const auto r = table.row(n);
  double re = u.real(), im = u.imag(), out_re = 0.0, out_im = 0.0;
  simd::active_kernels().horner_complex({r.data(), r.size(), &re, &im, &out_re, &out_im, 1});
  return {out_re, out_im};
}

std::vector<Complex> eval_upoly_batch(const CoeffTable& table, std::int64_t n, std::span<const Complex> t) {
  const auto r = table.row(n);
  std::vector<double> re(t.size()), im(t.size()), out_re(t.size()), out_im(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Complex u = u_of(table.u_role(), t[i]);
    re[i] = u.real();
    im[i] = u.imag();
  }
  simd::active_kernels().horner_complex({r.data(), r.size(), re.data(), im.data(), out_re.data(), out_im.data(), t.size()});
  std::vector<Complex> out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = {out_re[i], out_im[i]};
  return out;
}

Complex scaled_direct(const FamilySpec& spec, std::int64_t n, Complex t, const QContext& ctx) {
  if (t == Complex(0.0, 0.0)) throw ZeroArgument("scaled value needs t != 0");
  const double dn = static_cast<double>(n);
  if (spec.is_symmetric()) {
    const ScaledValue p = eval_raw(spec, n, scale_arg_symmetric(n, t, ctx), ctx);
    const ScaledValue pre = ScaledValue::from_log(Complex(0.5 * dn * dn * ctx.log_q(), 0.0)) * ScaledValue(1.0 / t).pow(n);
    return (pre * p).to_complex();
  }
  const ScaledValue p = eval_raw(spec, n, scale_arg_laguerre(n, t, spec.alpha(), ctx), ctx);
  const ScaledValue pre = ScaledValue::from_log(Complex(dn * dn * ctx.log_q(), 0.0)) * ScaledValue(-1.0 / t).pow(n);
  return (pre * p).to_complex();
}

CrossCheck cross_check_direct(const FamilySpec& spec, std::int64_t n, Complex t, const QContext& ctx) {
  if (n < 0 || n > kMaxDirectDegree) {
    throw UnsupportedRange("cross_check_direct supports 0 <= n <= " + std::to_string(kMaxDirectDegree));
  }
  const CoeffTable table = coeff_table(spec, n, ctx);
  CrossCheck out;
  out.coeff_value = eval_upoly(table, n, t);
  out.direct_value = scaled_direct(spec, n, t, ctx);
  const double scale = std::max(std::abs(out.coeff_value), std::abs(out.direct_value));
  out.rel_err = scale == 0.0 ? 0.0 : std::abs(out.coeff_value - out.direct_value) / scale;
  return out;
}

double default_bound_constant(const FamilySpec& spec, std::int64_t n, const QContext& ctx) {
  double K = 0.0;
  for (std::int64_t j = 0; j <= n; ++j) {
    if (spec.is_symmetric()) {
      K = std::max(K, std::abs(symmetric_scaled_c(spec, j, ctx)));
    } else {
      const ScaledCoeffs cd = map_to_scaled(spec, j, ctx);
      K = std::max({K, std::abs(cd.c), std::sqrt(std::abs(cd.d))});
    }
  }
  return K;
}

namespace {

// Everything in a bound report that does not depend on the row value.
class BoundRhs {
 public:
  BoundRhs(const FamilySpec& spec, double K, const QContext& ctx)
      : spec_(spec), K_(K), ctx_(ctx) {
    if (!spec.is_symmetric()) sol_ = solve_feq(-1, 200, ctx);
  }

  double rhs(std::int64_t n, double abs_t) const {
    const double q = ctx_.q();
    if (spec_.is_symmetric()) {
      double prod = 1.0;
      for (std::int64_t k = 0; k <= n; ++k) prod *= 1.0 + std::pow(q, static_cast<double>(k));
      return prod * airy_eval(Complex(-K_ / (abs_t * abs_t), 0.0), ctx_).real();
    }
    const double x = K_ == 0.0 ? HUGE_VAL : abs_t / K_;
    return fb_eval(x, *sol_, ctx_) / qpoch_finite(q, n, ctx_).real();
  }

 private:
  const FamilySpec& spec_;
  double K_;
  const QContext& ctx_;
  std::optional<FeqSolution> sol_;
};

void require_outside_unit_disk(Complex t) {
  if (!(std::abs(t) >= 1.0)) throw DomainError("bound_check needs |t| >= 1");
}

}  // namespace

BoundReport bound_check(const FamilySpec& spec, std::int64_t n, Complex t, std::optional<double> K, const QContext& ctx) {
  require_outside_unit_disk(t);
  if (n < 0) throw InvalidArgument("bound_check needs n >= 0");
  const double k_used = K ? *K : default_bound_constant(spec, n, ctx);
  if (!(k_used >= 0.0)) throw InvalidArgument("bound constant K must be >= 0");
  const CoeffTable table = coeff_table(spec, n, ctx);
  const BoundRhs bound(spec, k_used, ctx);
  const double lhs = std::abs(eval_upoly(table, n, t));
  const double rhs = bound.rhs(n, std::abs(t));
  return {n, t, lhs, rhs, rhs - lhs, k_used};
}

std::vector<BoundReport> bound_grid(const FamilySpec& spec, std::int64_t n_max, std::span<const Complex> t,
                                    std::optional<double> K, const QContext& ctx) {
  for (const Complex& v : t) require_outside_unit_disk(v);
  if (n_max < 0) throw InvalidArgument("bound_grid needs n_max >= 0");
  const double k_used = K ? *K : default_bound_constant(spec, n_max, ctx);
  if (!(k_used >= 0.0)) throw InvalidArgument("bound constant K must be >= 0");
  const CoeffTable table = coeff_table(spec, n_max, ctx);
  const BoundRhs bound(spec, k_used, ctx);
  std::vector<BoundReport> out;
  out.reserve(static_cast<std::size_t>(n_max + 1) * t.size());
  for (std::int64_t n = 0; n <= n_max; ++n) {
    const std::vector<Complex> values = eval_upoly_batch(table, n, t);
    for (std::size_t i = 0; i < t.size(); ++i) {
      const double lhs = std::abs(values[i]);
      const double rhs = bound.rhs(n, std::abs(t[i]));
      out.push_back({n, t[i], lhs, rhs, rhs - lhs, k_used});
    }
  }
  return out;
}

double normal_bound_rhs(std::int64_t k, double rho, double M, double K, const QContext& ctx) {
  if (k < 0 || !(rho > 0.0) || !(M > 0.0) || !(K >= 0.0)) {
    throw InvalidArgument("normal_bound_rhs needs k >= 0, rho > 0, M > 0, K >= 0");
  }
  double out = M;
  double qj = 1.0;  // q^{j-1}
  for (std::int64_t j = 1; j <= k; ++j) {
    out *= 1.0 + (1.0 + K) / (rho * rho * qj);
    qj *= ctx.q();
  }
  return out;
}

namespace exact {

std::vector<std::vector<Rational>> coeff_rows(const FamilySpec& spec, long N, const Rational& q) {
  switch (spec.kind()) {
    case FamilyKind::kQInvHermite:
      return detail::symmetric_rows(q, N, [&](long n) { return Rational(1 - rational_pow(q, n)); });
    case FamilyKind::kStieltjesWigert:
      return detail::laguerre_rows(
          q, N, [&](long n) { return Rational((1 + q - rational_pow(q, n + 1)) / (1 + q)); },
          [](long) { return Rational(1); });
    case FamilyKind::kQLaguerre: {
      const double a = spec.alpha();
      if (a < 0.0 || a != std::trunc(a)) throw UnsupportedFamily("exact q-Laguerre table needs an integer alpha >= 0");
      const long ia = static_cast<long>(a);
      return detail::laguerre_rows(
          q, N,
          [&](long n) {
            return Rational((1 - rational_pow(q, n + 1) + q - rational_pow(q, n + ia + 1)) / (1 + q));
          },
          [&](long n) { return Rational(1 - rational_pow(q, n + ia)); });
    }
    default:
      throw UnsupportedFamily("no exact table for " + spec.name());
  }
}

}  // namespace exact

}  // namespace qpr
