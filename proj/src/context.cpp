#include "qpr/context.hpp"

#include <cmath>
#include <string>

#include "qpr/errors.hpp"

namespace qpr {

QContext::QContext(double q, double tol, std::int64_t max_terms)
    : q_(q), tol_(tol), max_terms_(max_terms), log_q_(0.0) {
  if (!(q > 0.0 && q < 1.0)) {
    throw InvalidArgument("q must lie strictly inside (0, 1), got " + std::to_string(q));
  }
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw InvalidArgument("tol must be a positive finite number");
  }
  if (max_terms < 1) {
    throw InvalidArgument("max_terms must be at least 1");
  }
  log_q_ = std::log(q);
}

}  // namespace qpr
