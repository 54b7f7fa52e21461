#pragma once

#include <complex>
#include <cstdint>

namespace qpr {

using Complex = std::complex<double>;

/// A complex number held as mantissa * 2^exponent with an exact integer
/// exponent. Raw polynomial values grow like q^{-n^2/2} and q^{k^2}
/// coefficients underflow long before they stop mattering, so anything with
/// a quadratic exponent travels in this form and is recombined at the end.
///
/// The mantissa is renormalized lazily, whenever its binary exponent leaves
/// [-kRenormBits, kRenormBits]. Zero is canonical: mantissa 0, exponent 0.
class ScaledValue {
 public:
  static constexpr int kRenormBits = 300;

  ScaledValue() = default;
  explicit ScaledValue(Complex v);
  explicit ScaledValue(double v) : ScaledValue(Complex(v, 0.0)) {}

  static ScaledValue from_parts(Complex mantissa, std::int64_t exponent2);
  /// exp(log_value), without forming the exponential in double range.
  static ScaledValue from_log(Complex log_value);

  Complex mantissa() const noexcept { return mantissa_; }
  std::int64_t exponent2() const noexcept { return exponent2_; }

  bool is_zero() const noexcept { return mantissa_ == Complex(0.0, 0.0); }
  /// Sign of the real part: -1, 0 or +1. Meaningful for real values.
  int sign() const noexcept;
  /// Natural log of |value|; -infinity for zero.
  double log_mag() const noexcept;
  double phase() const noexcept { return std::arg(mantissa_); }

  /// The value in ordinary floating point; may overflow to inf or underflow to 0.
  Complex to_complex() const noexcept;
  double to_real() const noexcept { return to_complex().real(); }

  ScaledValue pow(std::int64_t e) const;

  ScaledValue operator-() const noexcept { return from_parts(-mantissa_, exponent2_); }
  friend ScaledValue operator*(const ScaledValue& a, const ScaledValue& b);
  friend ScaledValue operator/(const ScaledValue& a, const ScaledValue& b);
  friend ScaledValue operator+(const ScaledValue& a, const ScaledValue& b);
  friend ScaledValue operator-(const ScaledValue& a, const ScaledValue& b) { return a + (-b); }

  ScaledValue& operator*=(const ScaledValue& o) { return *this = *this * o; }
  ScaledValue& operator+=(const ScaledValue& o) { return *this = *this + o; }

 private:
  void renormalize(bool force) noexcept;

  Complex mantissa_{0.0, 0.0};
  std::int64_t exponent2_ = 0;
};

}  // namespace qpr
