#pragma once

// Sturm-sequence bisection for the largest eigenvalue of a real symmetric
// tridiagonal matrix. Generic over the float type so the same code runs in
// double and in GMP extended precision.

#include <cstddef>
#include <vector>

namespace qpr::detail {

/// Number of eigenvalues strictly below x. e2[k] is the squared coupling of
/// rows k-1 and k (e2[0] unused).
template <class F>
std::size_t count_below(const std::vector<F>& d, const std::vector<F>& e2, const F& x, const F& tiny) {
  std::size_t count = 0;
  F p = d[0] - x;
  for (std::size_t k = 0;; ++k) {
    if (p == 0) p = -tiny;
    if (p < 0) ++count;
    if (k + 1 == d.size()) break;
    p = d[k + 1] - x - e2[k + 1] / p;
  }
  return count;
}

template <class F>
F abs_value(const F& v) {
  return v < 0 ? F(-v) : v;
}

template <class F>
F sqrt_bound(const F& v) {
  // Any value >= sqrt(v) serves a Gershgorin bracket.
  return v < 1 ? F(1) : v;
}

template <class F>
F largest_eigenvalue(const std::vector<F>& d, const std::vector<F>& e2, int iterations, const F& tiny) {
  const std::size_t n = d.size();
  F lo = d[0];
  F hi = d[0];
  for (std::size_t k = 0; k < n; ++k) {
    F radius(0);
    if (k >= 1) radius += sqrt_bound(abs_value(e2[k]));
    if (k + 1 < n) radius += sqrt_bound(abs_value(e2[k + 1]));
    const F top = d[k] + radius;
    const F bottom = d[k] - radius;
    if (top > hi) hi = top;
    if (bottom < lo) lo = bottom;
  }
  for (int i = 0; i < iterations; ++i) {
    F mid = (lo + hi) / 2;
    if (count_below(d, e2, mid, tiny) == n) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return (lo + hi) / 2;
}

}  // namespace qpr::detail
