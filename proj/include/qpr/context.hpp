#pragma once

#include <cstdint>

namespace qpr {

/// The base q together with the truncation policy shared by every series
/// evaluation. Immutable once built.
class QContext {
 public:
  static constexpr double kDefaultTol = 1e-16;
  static constexpr std::int64_t kDefaultMaxTerms = 4000;

  /// Throws InvalidArgument unless 0 < q < 1, tol > 0 and max_terms >= 1.
  explicit QContext(double q, double tol = kDefaultTol,
                    std::int64_t max_terms = kDefaultMaxTerms);

  double q() const noexcept { return q_; }
  double tol() const noexcept { return tol_; }
  std::int64_t max_terms() const noexcept { return max_terms_; }
  double log_q() const noexcept { return log_q_; }

  QContext with_tol(double tol) const { return QContext(q_, tol, max_terms_); }
  QContext with_max_terms(std::int64_t n) const { return QContext(q_, tol_, n); }

 private:
  double q_;
  double tol_;
  std::int64_t max_terms_;
  double log_q_;
};

}  // namespace qpr
