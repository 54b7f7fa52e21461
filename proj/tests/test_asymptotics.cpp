#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "qpr/asymptotics.hpp"
#include "qpr/errors.hpp"
#include "qpr/qcore.hpp"

using qpr::Complex;
using qpr::FamilySpec;
using qpr::QContext;
using qpr::Rational;

TEST_CASE("limit values") {
  const QContext ctx(0.5);
  const double qinf = qpr::qpoch_infinite(0.5, ctx).real();
  CHECK(qpr::limit_value(qpr::LimitKind::kSymmetric, HUGE_VAL, ctx) == Complex(1.0, 0.0));
  CHECK(qpr::limit_value(qpr::LimitKind::kLaguerreType, HUGE_VAL, ctx).real() == doctest::Approx(1.0 / qinf).epsilon(1e-15));
  const qpr::CoeffTable sw = qpr::laguerre_coeff_table(FamilySpec::stieltjes_wigert(), 80, ctx);
  CHECK(sw.at(80, 0) == doctest::Approx(1.0 / qinf).epsilon(1e-14));
  CHECK(qpr::limit_value(qpr::LimitKind::kSymmetric, 2.0, ctx) == qpr::airy_eval(0.25, ctx));
  CHECK(qpr::limit_value(qpr::LimitKind::kLaguerreType, 2.0, ctx).real() == doctest::Approx(1.8730886948764033).epsilon(1e-14));
  CHECK_THROWS_AS(qpr::limit_value(qpr::LimitKind::kSymmetric, 0.0, ctx), qpr::ZeroArgument);
}

TEST_CASE("convergence tables") {
  const QContext ctx(0.5);
  const auto rows = qpr::convergence_table(FamilySpec::q_inv_hermite(), 2.0, 40, ctx);
  REQUIRE(rows.size() == 41);
  CHECK(rows[0].value == Complex(1.0, 0.0));
  const double predicted = std::abs(qpr::hermite_first_correction(2.0, ctx));
  CHECK(predicted == doctest::Approx(0.21939813825742933).epsilon(1e-13));
  CHECK(std::abs(rows[40].err_normalized / predicted - 1.0) < 0.01);
  for (const auto& r : rows) CHECK(r.err >= 0.0);

  const auto sw = qpr::convergence_table(FamilySpec::stieltjes_wigert(), 2.0, 40, ctx);
  for (std::int64_t n = 1; n < 40; ++n) CHECK(sw[n + 1].err < sw[n].err);
  CHECK(sw[31].err / sw[30].err == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("exact symmetric expansion") {
  const QContext ctx(0.5);
  CHECK(qpr::hermite_expansion(7, Complex(1.5, 0.5), 0, ctx) == qpr::airy_eval(1.0 / (Complex(1.5, 0.5) * Complex(1.5, 0.5)), ctx));
  CHECK(qpr::hermite_expansion(2, 2.0, 20, ctx).real() == doctest::Approx(0.81640625).epsilon(1e-12));

  const qpr::CoeffTable t = qpr::symmetric_coeff_table(FamilySpec::q_inv_hermite(), 30, ctx);
  const Complex v30 = qpr::eval_upoly(t, 30, 2.0);
  // first omitted term j = 4: q^{10} q^{4n} / ((q;q)_4 t^8) A_q(q^4/t^2)
  const double omitted = std::pow(0.5, 10 + 120) / (qpr::qpoch_finite(0.5, 4, ctx).real() * 256.0) *
                         std::abs(qpr::airy_eval(std::pow(0.5, 4) / 4.0, ctx));
  CHECK(std::abs(qpr::hermite_expansion(30, 2.0, 3, ctx) - v30) <= 2.0 * omitted + 1e-15);

  for (std::int64_t n = 0; n <= 30; ++n) {
    for (double r : {1.0, 2.0, 4.0}) {
      for (Complex tv : {Complex(r, 0.0), std::polar(r, 1.0), std::polar(r, 2.5)}) {
        CHECK(std::abs(qpr::hermite_expansion(n, tv, 30, ctx) - qpr::eval_upoly(t, n, tv)) < 1e-10);
      }
    }
  }
  CHECK_THROWS_AS(qpr::hermite_expansion(3, 0.0, 5, ctx), qpr::ZeroArgument);
}

TEST_CASE("Stieltjes-Wigert expansion") {
  const QContext ctx(0.5);
  CHECK(qpr::sw_expansion(9, 2.0, 0, ctx) == qpr::limit_value(qpr::LimitKind::kLaguerreType, 2.0, ctx));
  const qpr::CoeffTable t = qpr::laguerre_coeff_table(FamilySpec::stieltjes_wigert(), 40, ctx);
  CHECK(std::abs(qpr::sw_expansion(20, 2.0, 8, ctx) - qpr::eval_upoly(t, 20, 2.0)) < 1e-8);
  for (std::int64_t n : {25, 30, 40}) {
    const Complex diff = qpr::sw_expansion(n, 2.0, 12, ctx) - qpr::sw_expansion(n, 2.0, 0, ctx);
    const double bound = 2.0 * std::pow(0.5, n) * std::abs(qpr::airy_eval(2.0 / 2.0, ctx)) / (0.5 * qpr::qpoch_infinite(0.5, ctx).real());
    CHECK(std::abs(diff) < bound);
  }
  CHECK_THROWS_AS(qpr::sw_expansion(3, 0.0, 5, ctx), qpr::ZeroArgument);
}

TEST_CASE("q-Laguerre expansion") {
  const QContext ctx(0.5);
  CHECK(qpr::laguerre_expansion(9, 2.0, 0.5, 0, ctx) == qpr::limit_value(qpr::LimitKind::kLaguerreType, 2.0, ctx));
  const FamilySpec l = FamilySpec::q_laguerre(0.5);
  const Complex direct = qpr::scaled_direct(l, 20, 2.0, ctx);
  CHECK(std::abs(qpr::laguerre_expansion(20, 2.0, 0.5, 6, ctx) - direct) < 1e-8);

  SUBCASE("literal form agrees only at t = 1") {
    const auto lit = qpr::LaguerreExpansionForm::kLiteral;
    CHECK(std::abs(qpr::laguerre_expansion(20, 1.0, 0.5, 12, ctx, lit) - qpr::scaled_direct(l, 20, 1.0, ctx)) < 1e-12);
    CHECK(std::abs(qpr::laguerre_expansion(20, 2.0, 0.5, 12, ctx, lit) - direct) > 1e-8);
  }
  SUBCASE("alpha = 0 shares the Stieltjes-Wigert limit") {
    double prev = HUGE_VAL;
    for (std::int64_t n : {5, 10, 20, 40}) {
      const double d = std::abs(qpr::laguerre_expansion(n, 2.0, 0.0, 6, ctx) - qpr::sw_expansion(n, 2.0, 6, ctx));
      CHECK(d < prev);
      prev = d;
    }
    CHECK(prev < 1e-10);
  }
}

TEST_CASE("first-correction rates") {
  const QContext ctx(0.5);
  const Complex t(2.0, 0.0);
  const double qinf = qpr::qpoch_infinite(0.5, ctx).real();
  const Complex limit = qpr::airy_eval(0.5, ctx) / qinf;
  for (const FamilySpec& spec : {FamilySpec::stieltjes_wigert(), FamilySpec::q_laguerre(0.5)}) {
    INFO(spec.name());
    const double pref = spec.kind() == qpr::FamilyKind::kStieltjesWigert
                            ? std::abs(qpr::sw_first_correction(t, ctx))
                            : std::abs(qpr::laguerre_first_correction(t, 0.5, ctx));
    const qpr::CoeffTable table = qpr::laguerre_coeff_table(spec, 40, ctx);
    std::vector<double> ratio;
    for (std::int64_t n = 10; n <= 40; ++n) {
      const double err = std::abs(qpr::eval_upoly(table, n, t) - limit);
      ratio.push_back(err / (std::pow(0.5, n) * pref));
    }
    for (double r : ratio) CHECK(r < 5.0);
    // Monotone approach to 1 while the error is well above the double floor;
    // past n ~ 24 a ~1e-15 absolute floor divided by q^n dominates.
    for (std::size_t i = 0; i < 12; ++i) CHECK(std::abs(ratio[i + 1] - 1.0) < std::abs(ratio[i] - 1.0));
    for (std::size_t i = 0; i < ratio.size(); ++i) {
      const double qn = std::pow(0.5, static_cast<double>(i + 10));
      CHECK(std::abs(ratio[i] - 1.0) * qn * pref <= 2.0 * qn * qn + 1e-14);
    }
  }
  CHECK(std::abs(qpr::sw_first_correction(t, ctx)) == doctest::Approx(0.556684266655378).epsilon(1e-12));
}

TEST_CASE("lambda sequence") {
  const QContext ctx(0.5);
  const double q = 0.5;
  const auto lam = qpr::lambda_sequence(0.3, Complex(1.2, 0.0), 15, ctx);
  CHECK(lam.coeffs.size() == 16);
  CHECK(lam.coeffs[1].real() == doctest::Approx((2.0 * (1.0 + 0.3 * q * q) - 1.2) / (1.0 - q)).epsilon(1e-15));
  CHECK(qpr::lambda_sequence(0.0, 2.0, 3, ctx).coeffs[1] == Complex(0.0, 0.0));
  CHECK_THROWS_AS(qpr::lambda_sequence(0.0, 2.0, 0, ctx), qpr::InvalidArgument);

  const Rational rq(1, 2), c1(3, 10), l0(6, 5);
  const std::vector<Rational> ex = qpr::exact::lambda_sequence(c1, l0, 15, rq);
  for (long j = 0; j <= 15; ++j) CHECK(std::abs(lam.coeffs[j].real() - qpr::to_double(ex[j])) < 1e-12);

  // the defining relation, written with alternating signs, holds exactly
  for (long j = 1; j <= 15; ++j) {
    const Rational sj = j % 2 == 0 ? 1 : -1;
    const Rational lhs = sj * ex[j] * qpr::rational_pow(rq, j - j * j);
    const Rational rhs = 1 / (1 - qpr::rational_pow(rq, j)) * (-sj) * qpr::rational_pow(rq, j - 1 - (j - 1) * (j - 1)) * ex[j - 1] +
                         2 * sj * (1 + c1 * qpr::rational_pow(rq, 2 * j)) / (1 - qpr::rational_pow(rq, j));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("first-column partial-sum identity") {
  const QContext ctx(0.5);
  const qpr::An1Report zero = qpr::an1_identity_check(FamilySpec::stieltjes_wigert(), 0, ctx);
  CHECK(zero.lhs == 0.0);
  CHECK(zero.rhs == 0.0);
  const qpr::An1Report one = qpr::an1_identity_check(FamilySpec::stieltjes_wigert(), 1, ctx);
  // unscaled: lhs = 4 (1/2)(-1) = -2, rhs = 3 (2/3) = 2; both carry a factor q^2 here
  CHECK(one.lhs == doctest::Approx(-2.0 * 0.25).epsilon(1e-15));
  CHECK(one.rhs == doctest::Approx(2.0 * 0.25).epsilon(1e-15));
  CHECK(one.signed_err == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(one.abs_err < 1e-15);

  for (const FamilySpec& spec : {FamilySpec::stieltjes_wigert(), FamilySpec::q_laguerre(0.5)}) {
    const qpr::CoeffTable t = qpr::laguerre_coeff_table(spec, 41, ctx);
    for (std::int64_t n = 0; n <= 40; ++n) {
      const qpr::An1Report r = qpr::an1_identity_check(t, n, ctx);
      CHECK(r.abs_err < 1e-10);
      CHECK(std::abs(r.lhs + r.rhs) < 1e-10);
      CHECK(std::abs(qpr::an1_telescoping_residual(t, n, ctx)) < 1e-12);
    }
  }
  CHECK_THROWS_AS(qpr::an1_identity_check(FamilySpec::q_inv_hermite(), 3, ctx), qpr::UnsupportedFamily);
}
