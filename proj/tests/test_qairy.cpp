#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "qpr/detail/recursions.hpp"
#include "qpr/errors.hpp"
#include "qpr/qairy.hpp"

using qpr::Complex;
using qpr::QContext;
using qpr::Rational;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("A_q coefficients") {
  const QContext ctx(0.5);
  CHECK(qpr::airy_coeff(0, ctx) == Complex(1.0, 0.0));
  CHECK(qpr::airy_coeff(1, ctx).real() == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(qpr::airy_coeff(2, ctx).real() == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(qpr::exact::airy_coeff(2, Rational(1, 2)) == Rational(1, 6));
  CHECK_THROWS_AS(qpr::airy_coeff(-1, ctx), qpr::InvalidArgument);

  // The q^{k^2} factor alone would underflow near k = 27; the coefficient must not.
  for (long k = 20; k <= 30; ++k) {
    const double exact = qpr::to_double(qpr::exact::airy_coeff(k, Rational(1, 2)));
    CHECK(exact != 0.0);
    CHECK(qpr::airy_coeff(k, ctx).real() == doctest::Approx(exact).epsilon(1e-13));
  }
  const qpr::ScaledValue deep = qpr::airy_coeff_scaled(60, ctx);
  CHECK(deep.log_mag() == doctest::Approx(3600.0 * std::log(0.5) - std::log(qpr::qpoch_finite(0.5, 60, ctx).real())).epsilon(1e-14));
}

TEST_CASE("A_q evaluation") {
  const QContext ctx(0.5);
  CHECK(qpr::airy_eval(0.0, ctx) == Complex(1.0, 0.0));

  const Complex v = qpr::airy_eval(1.0, ctx);
  CHECK(rel(v, Complex(static_cast<double>(oracle::airy(1.0L, 0.5L, 20).real()), 0.0)) < 1e-15);
  CHECK(std::abs(v - (qpr::airy_eval(0.5, ctx) - 0.5 * qpr::airy_eval(0.25, ctx))) < 1e-12);
  CHECK(v.real() == doctest::Approx(0.16076378893208873).epsilon(1e-14));

  const Complex w = qpr::airy_eval(-2.0, ctx);
  CHECK(w.imag() == 0.0);
  CHECK(w.real() > 1.0);
  CHECK(w.real() == doctest::Approx(3.7150825684597658).epsilon(1e-14));
  CHECK(qpr::airy_eval(0.25, ctx).real() == doctest::Approx(0.76032385437903612).epsilon(1e-14));
  CHECK(qpr::airy_eval(-1.0, ctx).real() == doctest::Approx(2.1726687508496637).epsilon(1e-14));

  CHECK_THROWS_AS(qpr::airy_eval(100.0, QContext(0.5, 1e-16, 3)), qpr::TermCapExceeded);
}

TEST_CASE("A_q partial sums stay within the tail bound") {
  for (double q : {0.3, 0.5, 0.9}) {
    const QContext ctx(q);
    const double qinf = qpr::qpoch_infinite(q, ctx).real();
    for (Complex z : {Complex(0.5, 0.5), Complex(-2.0, 0.0), Complex(1.0, -1.5)}) {
      const Complex full = qpr::airy_eval(z, ctx);
      Complex partial(0.0, 0.0);
      for (std::int64_t k = 0; k <= 6; ++k) {
        partial += qpr::airy_coeff(k, ctx) * std::pow(z, static_cast<double>(k));
      }
      // tail beyond k = 6 bounded by twice the first omitted majorant, plus round-off
      const double k7 = 7.0;
      const double bound = 2.0 * std::pow(q, k7 * k7) * std::pow(std::abs(z), k7) / qinf;
      CHECK(std::abs(full - partial) <= bound + 1e-12);
    }
  }
}

TEST_CASE("batched A_q matches pointwise") {
  const QContext ctx(0.5);
  oracle::Sampler s(7);
  std::vector<Complex> z;
  for (int i = 0; i < 37; ++i) z.push_back(s.in_disk(3.0));
  const std::vector<Complex> batch = qpr::airy_eval_batch(z, ctx);
  for (std::size_t i = 0; i < z.size(); ++i) CHECK(rel(batch[i], qpr::airy_eval(z[i], ctx)) < 1e-13);
}

TEST_CASE("bilateral family F_q") {
  const QContext ctx(0.5);
  const double tol = ctx.tol();
  const Complex base = qpr::fq_eval(0.5, 0.0, ctx);
  CHECK(std::abs(base - qpr::airy_eval(0.5, ctx)) < 10 * tol);
  CHECK(std::abs(qpr::fq_eval(0.5, 1.0, ctx) - base) < 10 * tol);
  CHECK(base.real() == doctest::Approx(0.54092571612160678).epsilon(1e-15));

  const Complex w = qpr::fq_eval(0.5, 0.25, ctx);
  CHECK(std::abs(w - qpr::fq_eval(0.25, 0.25, ctx) + 0.25 * qpr::fq_eval(0.125, 0.25, ctx)) < 100 * tol);
  CHECK(std::abs(w - Complex(0.30457050563937816, 0.30457050563937816)) < 1e-14);
  CHECK(std::abs(qpr::fq_eval(0.3, 0.25, ctx) - Complex(0.14851402012214132, 0.14851402012214132)) < 1e-14);
  CHECK(std::abs(qpr::fq_eval(0.6, 0.25, ctx) - Complex(0.32333418115309996, 0.32333418115309996)) < 1e-14);
  CHECK(std::abs(qpr::fq_eval(0.5, 0.5, ctx) - Complex(0.0, 0.068215295157671998)) < 1e-14);
  CHECK(std::abs(qpr::fq_eval(0.3, 0.5, ctx) - Complex(0.0, -0.41781164701372704)) < 1e-14);
  CHECK(std::abs(qpr::fq_eval(0.6, 0.5, ctx) - Complex(0.0, 0.18794765579439223)) < 1e-14);

  CHECK_THROWS_AS(qpr::fq_eval(0.0, 0.25, ctx), qpr::ZeroArgument);
  CHECK_THROWS_AS(qpr::fq_eval(-1.0, 0.5, ctx), qpr::BranchAmbiguity);
  CHECK(std::abs(qpr::fq_eval(-1.0, 0.0, ctx) - qpr::airy_eval(-1.0, ctx)) < 1e-14);
}

TEST_CASE("functional-equation solver, a = +1") {
  const QContext ctx(0.5);
  const qpr::FeqSolution sol = qpr::solve_feq(1, 12, ctx);
  CHECK(sol.coeffs.coeffs[0] == Complex(1.0, 0.0));
  CHECK(sol.coeffs.variable == qpr::SeriesVariable::kInverseZ);
  CHECK_FALSE(sol.alpha.has_value());
  for (std::int64_t k = 0; k <= 12; ++k) {
    CHECK(sol.coeffs.coeffs[static_cast<std::size_t>(k)].real() == doctest::Approx(qpr::airy_coeff(k, ctx).real()).epsilon(1e-14));
  }

  const Rational q(1, 2);
  const std::vector<Rational> f = qpr::exact::solve_feq(1, 40, q);
  for (long k = 0; k <= 40; ++k) CHECK(f[static_cast<std::size_t>(k)] == qpr::exact::airy_coeff(k, q));

  SUBCASE("coefficient recursion holds with exponent 2n-3") {
    // a (1 - q^{-2n}) f_n = q^{2n-3} f_{n-2} + (1+q) q^{-1} f_{n-1}
    for (int a : {1, -1}) {
      const std::vector<Rational> g = qpr::exact::solve_feq(a, 40, q);
      for (long n = 2; n <= 40; ++n) {
        const Rational lhs = a * (1 - qpr::rational_pow(q, -2 * n)) * g[n];
        const Rational rhs = qpr::rational_pow(q, 2 * n - 3) * g[n - 2] + (1 + q) / q * g[n - 1];
        CHECK(lhs == rhs);
      }
      // exponent 2n-1 does not fit
      const Rational lhs2 = a * (1 - qpr::rational_pow(q, -4)) * g[2];
      CHECK(lhs2 != qpr::rational_pow(q, 3) * g[0] + (1 + q) / q * g[1]);
    }
  }
  CHECK_THROWS_AS(qpr::solve_feq(0, 5, ctx), qpr::InvalidArgument);
  CHECK_THROWS_AS(qpr::solve_feq(1, 0, ctx), qpr::InvalidArgument);
}

TEST_CASE("functional-equation solver, a = -1") {
  const QContext ctx(0.5);
  const qpr::FeqSolution sol = qpr::solve_feq(-1, 200, ctx);
  for (const qpr::ScaledValue& f : sol.scaled) CHECK(f.sign() == 1);
  CHECK(sol.coeffs.coeffs[1].real() == doctest::Approx(1.0).epsilon(1e-15));
  REQUIRE(sol.alpha.has_value());
  CHECK(*sol.beta == doctest::Approx(-1.5 + std::sqrt(4.25)).epsilon(1e-15));
  CHECK(*sol.alpha == doctest::Approx(-1.5 - std::sqrt(4.25)).epsilon(1e-15));
  CHECK(*sol.beta / *sol.alpha == doctest::Approx(-0.15767078078675459).epsilon(1e-14));

  for (double q : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const qpr::FeqSolution s = qpr::solve_feq(-1, 5, QContext(q));
    CHECK(*s.alpha < 0.0);
    CHECK(0.0 < *s.beta);
    CHECK(*s.beta < std::abs(*s.alpha));
    // roots of 1 - (1+q) z - q z^2
    for (double r : {*s.alpha, *s.beta}) CHECK(std::abs(1.0 - (1.0 + q) * r - q * r * r) < 1e-13 * (1.0 + r * r));
  }
}

TEST_CASE("Darboux estimate") {
  const QContext ctx(0.5);
  const qpr::FeqSolution sol = qpr::solve_feq(-1, 120, ctx);
  const double d0 = qpr::darboux_tail(0, sol, ctx);
  CHECK(d0 == doctest::Approx(1.1912783732736655).epsilon(1e-14));
  CHECK(qpr::darboux_tail(1, sol, ctx) == doctest::Approx(d0 / *sol.beta).epsilon(1e-15));
  CHECK(std::abs(sol.normalized[100] / qpr::darboux_tail(100, sol, ctx) - 1.0) < 1e-6);
  CHECK_THROWS_AS(qpr::darboux_tail(3, qpr::solve_feq(1, 10, ctx), ctx), qpr::WrongBranch);
}

TEST_CASE("companion function f^b") {
  const QContext ctx(0.5);
  const qpr::FeqSolution sol = qpr::solve_feq(-1, 200, ctx);
  CHECK(qpr::fb_eval(HUGE_VAL, sol, ctx) == 1.0);
  const double at2 = qpr::fb_eval(2.0, sol, ctx);
  CHECK(at2 > 1.5);
  CHECK(at2 == doctest::Approx(1.5599816739928590).epsilon(1e-14));
  const double at1 = qpr::fb_eval(1.0, sol, ctx);
  CHECK(at1 > 1.0);
  CHECK(at1 == doctest::Approx(2.2466118640330389).epsilon(1e-14));
  CHECK_THROWS_AS(qpr::fb_eval(0.0, sol, ctx), qpr::ZeroArgument);
  CHECK_THROWS_AS(qpr::fb_eval(1.0, qpr::solve_feq(1, 10, ctx), ctx), qpr::WrongBranch);
  // A short solution relies on the Darboux tail bound, and fails when it cannot reach tol.
  CHECK(qpr::fb_eval(2.0, qpr::solve_feq(-1, 8, ctx), ctx) == doctest::Approx(at2).epsilon(1e-15));
  CHECK_THROWS_AS(qpr::fb_eval(1.0, qpr::solve_feq(-1, 2, ctx), ctx), qpr::TermCapExceeded);
}
