#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "qpr/detail/recursions.hpp"
#include "qpr/errors.hpp"
#include "qpr/qairy.hpp"
#include "qpr/qcore.hpp"
#include "qpr/scaled.hpp"

using qpr::Complex;
using qpr::FamilySpec;
using qpr::QContext;
using qpr::Rational;

namespace {

std::vector<FamilySpec> builtin_families() {
  return {FamilySpec::q_inv_hermite(), FamilySpec::q_laguerre(0.5), FamilySpec::stieltjes_wigert(),
          FamilySpec::generic_symmetric(1.0, [](std::int64_t n, double q) { return 1.0 - 0.5 * std::pow(q, n); })};
}

std::vector<Complex> polar_points(std::initializer_list<double> radii, int angles) {
  std::vector<Complex> out;
  for (double r : radii) {
    for (int a = 0; a < angles; ++a) out.push_back(std::polar(r, 2.0 * std::numbers::pi * a / angles + 0.1));
  }
  return out;
}

}  // namespace

TEST_CASE("symmetric table rows") {
  const QContext ctx(0.5);
  const double q = 0.5;
  const qpr::CoeffTable t = qpr::symmetric_coeff_table(FamilySpec::q_inv_hermite(), 40, ctx);
  CHECK(t.u_role() == qpr::URole::kInverseTSquared);
  CHECK(t.row(1).size() == 2);
  CHECK(t.at(1, 0) == 1.0);
  CHECK(t.at(1, 1) == -q);
  CHECK(t.at(2, 0) == 1.0);
  CHECK(t.at(2, 1) == doctest::Approx(-(q + q * q)).epsilon(1e-15));
  CHECK(t.at(2, 2) == doctest::Approx(std::pow(q, 4)).epsilon(1e-15));
  for (std::int64_t n = 0; n <= 40; ++n) {
    CHECK(t.at(n, 0) == 1.0);
    CHECK(t.row(n).size() == static_cast<std::size_t>(n + 1));
  }
  CHECK_THROWS_AS(t.row(41), qpr::InvalidArgument);
  CHECK_THROWS_AS(qpr::symmetric_coeff_table(FamilySpec::stieltjes_wigert(), 3, ctx), qpr::UnsupportedFamily);
}

TEST_CASE("Laguerre-type table rows") {
  const QContext ctx(0.5);
  const double q = 0.5;
  const qpr::CoeffTable t = qpr::laguerre_coeff_table(FamilySpec::stieltjes_wigert(), 40, ctx);
  CHECK(t.u_role() == qpr::URole::kInverseT);
  CHECK(t.at(1, 0) == doctest::Approx(1.0 / (1.0 - q)).epsilon(1e-15));
  CHECK(t.at(1, 1) == doctest::Approx(-1.0).epsilon(1e-15));
  for (std::int64_t n = 0; n <= 40; ++n) {
    CHECK(t.at(n, 0) == doctest::Approx(1.0 / qpr::qpoch_finite(q, n, ctx).real()).epsilon(1e-14));
  }
  for (double alpha : {0.0, 0.5, 2.0}) {
    const qpr::CoeffTable l = qpr::laguerre_coeff_table(FamilySpec::q_laguerre(alpha), 20, ctx);
    for (std::int64_t n = 0; n <= 20; ++n) {
      CHECK(l.at(n, 0) == doctest::Approx(1.0 / qpr::qpoch_finite(q, n, ctx).real()).epsilon(1e-14));
    }
    // closed-form L_1 scaled: S_1(t) = 1/(1-q) - q (1 - q^{alpha+1}) / ((1-q) t)
    const double qa1 = std::pow(q, alpha + 1.0);
    CHECK(l.at(1, 0) == doctest::Approx(1.0 / (1.0 - q)).epsilon(1e-15));
    CHECK(l.at(1, 1) == doctest::Approx(-q * (1.0 - qa1) / (1.0 - q)).epsilon(1e-14));
  }
  const FamilySpec bad = FamilySpec::generic_laguerre_type(
      0.0, [](std::int64_t, double) { return -1.0; }, [](std::int64_t, double q) { return -q; },
      [](std::int64_t, double q) { return 1.0 + q; });
  CHECK_THROWS_AS(qpr::laguerre_coeff_table(bad, 4, ctx), qpr::InconsistentFamily);
}

TEST_CASE("table evaluation") {
  const QContext ctx(0.5);
  const qpr::CoeffTable t = qpr::symmetric_coeff_table(FamilySpec::q_inv_hermite(), 10, ctx);
  CHECK(qpr::eval_upoly(t, 0, Complex(0.3, 2.0)) == Complex(1.0, 0.0));
  CHECK(qpr::eval_upoly(t, 1, 2.0) == Complex(0.875, 0.0));
  CHECK(qpr::eval_upoly(t, 2, 2.0).real() == doctest::Approx(0.81640625).epsilon(1e-15));
  CHECK(qpr::eval_upoly(t, 7, 1e200) == Complex(t.at(7, 0), 0.0));
  CHECK_THROWS_AS(qpr::eval_upoly(t, 3, 0.0), qpr::ZeroArgument);
  const std::vector<Complex> pts = polar_points({1.0, 2.0}, 5);
  const std::vector<Complex> batch = qpr::eval_upoly_batch(t, 9, pts);
  for (std::size_t i = 0; i < pts.size(); ++i) CHECK(batch[i] == qpr::eval_upoly(t, 9, pts[i]));
}

TEST_CASE("table against direct scaled recurrence") {
  const QContext ctx(0.5);
  const qpr::CrossCheck h = qpr::cross_check_direct(FamilySpec::q_inv_hermite(), 2, 2.0, ctx);
  CHECK(h.coeff_value.real() == doctest::Approx(0.81640625).epsilon(1e-15));
  CHECK(h.direct_value.real() == doctest::Approx(0.81640625).epsilon(1e-14));
  const qpr::CrossCheck sw = qpr::cross_check_direct(FamilySpec::stieltjes_wigert(), 1, 3.0, ctx);
  CHECK(sw.coeff_value.real() == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
  CHECK(sw.direct_value.real() == doctest::Approx(5.0 / 3.0).epsilon(1e-14));
  CHECK_THROWS_AS(qpr::cross_check_direct(FamilySpec::q_inv_hermite(), 61, 2.0, ctx), qpr::UnsupportedRange);

  for (const FamilySpec& spec : builtin_families()) {
    INFO(spec.name());
    for (std::int64_t n = 0; n <= 40; n += 4) {
      for (const Complex& tv : polar_points({1.0, 2.0, 4.0}, 4)) CHECK(qpr::cross_check_direct(spec, n, tv, ctx).rel_err < 1e-10);
    }
  }
}

TEST_CASE("columns converge to the A_q coefficients") {
  const QContext ctx(0.5);
  const qpr::CoeffTable t = qpr::symmetric_coeff_table(FamilySpec::q_inv_hermite(), 60, ctx);
  for (std::int64_t k = 0; k <= 6; ++k) {
    CHECK(std::abs(t.at(60, k) - t.at(59, k)) < 1e-10);
    CHECK(std::abs(t.at(60, k) - qpr::airy_coeff(k, ctx).real()) < 1e-10);
  }
  const double qinf = qpr::qpoch_infinite(0.5, ctx).real();
  for (const FamilySpec& spec : {FamilySpec::stieltjes_wigert(), FamilySpec::q_laguerre(0.5)}) {
    const qpr::CoeffTable l = qpr::laguerre_coeff_table(spec, 60, ctx);
    for (std::int64_t k = 0; k <= 6; ++k) CHECK(std::abs(qinf * l.at(60, k) - qpr::airy_coeff(k, ctx).real()) < 1e-10);
  }
}

TEST_CASE("coefficients stay bounded") {
  const QContext ctx(0.5);
  auto max_abs = [](const qpr::CoeffTable& t) {
    double m = 0.0;
    for (std::int64_t n = 0; n <= t.order(); ++n) {
      for (double v : t.row(n)) m = std::max(m, std::abs(v));
    }
    return m;
  };
  const double m40 = max_abs(qpr::symmetric_coeff_table(FamilySpec::q_inv_hermite(), 40, ctx));
  const double m160 = max_abs(qpr::symmetric_coeff_table(FamilySpec::q_inv_hermite(), 160, ctx));
  CHECK(m160 <= m40 * (1.0 + 1e-9));
}

TEST_CASE("exact rows reproduce floating rows") {
  const QContext ctx(0.5);
  const Rational q(1, 2);
  for (const FamilySpec& spec : {FamilySpec::q_inv_hermite(), FamilySpec::stieltjes_wigert(), FamilySpec::q_laguerre(2.0)}) {
    INFO(spec.name());
    const auto exact = qpr::exact::coeff_rows(spec, 25, q);
    const qpr::CoeffTable t = qpr::coeff_table(spec, 25, ctx);
    for (std::int64_t n = 0; n <= 25; ++n) {
      for (std::int64_t k = 0; k <= n; ++k) {
        const double e = qpr::to_double(exact[n][k]);
        CHECK(std::abs(t.at(n, k) - e) <= 1e-12 * std::max(1.0, std::abs(e)));
      }
    }
  }
  CHECK(qpr::exact::coeff_rows(FamilySpec::q_inv_hermite(), 2, q)[2][2] == Rational(1, 16));
  CHECK_THROWS_AS(qpr::exact::coeff_rows(FamilySpec::q_laguerre(0.5), 3, q), qpr::UnsupportedFamily);
}

TEST_CASE("bound checks") {
  const QContext ctx(0.5);
  const qpr::BoundReport r = qpr::bound_check(FamilySpec::q_inv_hermite(), 0, 1.0, 1.0, ctx);
  CHECK(r.lhs == 1.0);
  CHECK(r.rhs == doctest::Approx(2.0 * qpr::airy_eval(-1.0, ctx).real()).epsilon(1e-15));
  CHECK(r.rhs > 2.0);
  CHECK(r.margin > 0.0);
  CHECK_THROWS_AS(qpr::bound_check(FamilySpec::q_inv_hermite(), 3, 0.5, 1.0, ctx), qpr::DomainError);
  CHECK(qpr::default_bound_constant(FamilySpec::q_inv_hermite(), 10, ctx) == doctest::Approx(1.0 - std::pow(0.5, 10)));
  CHECK(qpr::default_bound_constant(FamilySpec::stieltjes_wigert(), 10, ctx) == doctest::Approx(1.0).epsilon(1e-15));
  const qpr::BoundReport d = qpr::bound_check(FamilySpec::stieltjes_wigert(), 5, Complex(0.0, 2.0), std::nullopt, ctx);
  CHECK(d.K == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(d.margin >= 0.0);

  std::vector<Complex> grid;
  for (double r0 = 1.0; r0 <= 4.0 + 1e-12; r0 += 0.5) {
    for (int a = 0; a < 16; ++a) grid.push_back(std::polar(r0, 2.0 * std::numbers::pi * a / 16));
  }
  for (double q : {0.3, 0.5}) {
    const QContext c(q);
    for (const FamilySpec& spec : {FamilySpec::q_inv_hermite(), FamilySpec::stieltjes_wigert()}) {
      const auto reports = qpr::bound_grid(spec, 60, grid, 1.0, c);
      CHECK(reports.size() == 61 * grid.size());
      double worst = HUGE_VAL;
      for (const auto& b : reports) worst = std::min(worst, b.margin / b.rhs);
      INFO(spec.name() << " q=" << q << " worst relative margin " << worst);
      CHECK(worst >= 0.0);
    }
  }
}

TEST_CASE("normal-family bound") {
  const QContext ctx(0.5);
  CHECK(qpr::normal_bound_rhs(0, 1.0, 2.5, 1.0, ctx) == 2.5);
  CHECK(qpr::normal_bound_rhs(1, 1.0, 1.0, 1.0, ctx) == 3.0);
  CHECK(qpr::normal_bound_rhs(2, 1.0, 1.0, 1.0, ctx) == 15.0);
  CHECK_THROWS_AS(qpr::normal_bound_rhs(2, 0.0, 1.0, 1.0, ctx), qpr::InvalidArgument);
}
