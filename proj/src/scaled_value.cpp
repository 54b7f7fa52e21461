#include "qpr/scaled_value.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qpr {

namespace {

int binary_exponent(Complex m) {
  const double big = std::max(std::abs(m.real()), std::abs(m.imag()));
  return std::ilogb(big);
}

Complex ldexp_complex(Complex m, std::int64_t e) {
  // Beyond this shift every double is 0 or inf anyway.
  const int clamped = static_cast<int>(std::clamp<std::int64_t>(e, -4000, 4000));
  return {std::ldexp(m.real(), clamped), std::ldexp(m.imag(), clamped)};
}

}  // namespace

ScaledValue::ScaledValue(Complex v) : mantissa_(v) { renormalize(true); }

ScaledValue ScaledValue::from_parts(Complex mantissa, std::int64_t exponent2) {
  ScaledValue out;
  out.mantissa_ = mantissa;
  out.exponent2_ = exponent2;
  out.renormalize(false);
  return out;
}

ScaledValue ScaledValue::from_log(Complex log_value) {
  if (std::isinf(log_value.real()) && log_value.real() < 0) return ScaledValue();
  const double e2 = std::floor(log_value.real() / std::numbers::ln2);
  const double rest = log_value.real() - e2 * std::numbers::ln2;
  return from_parts(std::polar(std::exp(rest), log_value.imag()), static_cast<std::int64_t>(e2));
}

int ScaledValue::sign() const noexcept {
  if (mantissa_.real() > 0) return 1;
  if (mantissa_.real() < 0) return -1;
  return 0;
}

double ScaledValue::log_mag() const noexcept {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  return std::log(std::abs(mantissa_)) + static_cast<double>(exponent2_) * std::numbers::ln2;
}

Complex ScaledValue::to_complex() const noexcept { return ldexp_complex(mantissa_, exponent2_); }

void ScaledValue::renormalize(bool force) noexcept {
  if (is_zero() || !std::isfinite(mantissa_.real()) || !std::isfinite(mantissa_.imag())) {
    if (is_zero()) exponent2_ = 0;
    return;
  }
  const int e = binary_exponent(mantissa_);
  if (force || e > kRenormBits || e < -kRenormBits) {
    mantissa_ = ldexp_complex(mantissa_, -e);
    exponent2_ += e;
  }
}

ScaledValue ScaledValue::pow(std::int64_t e) const {
  if (e < 0) return ScaledValue(1.0) / pow(-e);
  ScaledValue result(1.0);
  ScaledValue base = *this;
  base.renormalize(true);
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

ScaledValue operator*(const ScaledValue& a, const ScaledValue& b) {
  if (a.is_zero() || b.is_zero()) return ScaledValue();
  ScaledValue x = a;
  ScaledValue y = b;
  x.renormalize(true);
  y.renormalize(true);
  const Complex m(x.mantissa_.real() * y.mantissa_.real() - x.mantissa_.imag() * y.mantissa_.imag(),
                  x.mantissa_.real() * y.mantissa_.imag() + x.mantissa_.imag() * y.mantissa_.real());
  return ScaledValue::from_parts(m, x.exponent2_ + y.exponent2_);
}

ScaledValue operator/(const ScaledValue& a, const ScaledValue& b) {
  if (a.is_zero()) return ScaledValue();
  ScaledValue x = a;
  ScaledValue y = b;
  x.renormalize(true);
  y.renormalize(true);
  return ScaledValue::from_parts(x.mantissa_ / y.mantissa_, x.exponent2_ - y.exponent2_);
}

ScaledValue operator+(const ScaledValue& a, const ScaledValue& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  ScaledValue x = a;
  ScaledValue y = b;
  x.renormalize(true);
  y.renormalize(true);
  const std::int64_t e = std::max(x.exponent2_, y.exponent2_);
  const Complex m = ldexp_complex(x.mantissa_, x.exponent2_ - e) +
                    ldexp_complex(y.mantissa_, y.exponent2_ - e);
  ScaledValue out = ScaledValue::from_parts(m, e);
  if (out.is_zero()) out.exponent2_ = 0;
  return out;
}

}  // namespace qpr
