#pragma once

// Field-generic forms of the coefficient recursions. Instantiated with
// Rational for the exact twins; the floating production paths live in the
// .cpp files (log-domain or SIMD), so these double as independent oracles.

#include <cstddef>
#include <vector>

namespace qpr::detail {

template <class F>
F int_pow(const F& q, long e) {
  F base = e < 0 ? F(1) / q : q;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  F out(1);
  while (k > 0) {
    if (k & 1UL) out *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return out;
}

template <class F>
F qpoch_finite(const F& a, const F& q, long n) {
  F out(1);
  F qj(1);
  for (long j = 0; j < n; ++j) {
    out *= F(1) - a * qj;
    qj *= q;
  }
  return out;
}

/// Coefficients (-1)^k q^{k^2} / (q;q)_k for k = 0..K.
template <class F>
std::vector<F> airy_coefficients(const F& q, long K) {
  std::vector<F> out;
  out.reserve(static_cast<std::size_t>(K + 1));
  F qq(1);  // (q;q)_k
  for (long k = 0; k <= K; ++k) {
    if (k > 0) qq *= F(1) - int_pow(q, k);
    F c = int_pow(q, k * k) / qq;
    out.push_back(k % 2 == 0 ? c : F(-c));
  }
  return out;
}

/// g_n with f_n = g_n q^{n^2}: g_0 = 1, g_n (q^{2n} - 1) = a q g_{n-2} + a (1+q) g_{n-1}.
template <class F>
std::vector<F> feq_normalized(int sign_a, const F& q, long N) {
  const F a(sign_a);
  std::vector<F> g(static_cast<std::size_t>(N + 1), F(0));
  g[0] = F(1);
  for (long n = 1; n <= N; ++n) {
    F rhs = a * (F(1) + q) * g[static_cast<std::size_t>(n - 1)];
    if (n >= 2) rhs += a * q * g[static_cast<std::size_t>(n - 2)];
    g[static_cast<std::size_t>(n)] = rhs / (int_pow(q, 2 * n) - F(1));
  }
  return g;
}

/// Rows of the symmetric table:
/// a_{n+1,k} = q^k a_{n,k} - q^{n+k} a_{n,k-1} - q^{2k-1} c(n) a_{n-1,k-1}.
template <class F, class CFn>
std::vector<std::vector<F>> symmetric_rows(const F& q, long N, CFn c) {
  std::vector<std::vector<F>> rows;
  rows.push_back({F(1)});
  auto at = [](const std::vector<F>& r, long k) { return k >= 0 && k < static_cast<long>(r.size()) ? r[static_cast<std::size_t>(k)] : F(0); };
  for (long n = 0; n < N; ++n) {
    const auto& cur = rows[static_cast<std::size_t>(n)];
    const std::vector<F> empty;
    const auto& prev = n >= 1 ? rows[static_cast<std::size_t>(n - 1)] : empty;
    const F cn = c(n);
    std::vector<F> next(static_cast<std::size_t>(n + 2), F(0));
    for (long k = 0; k <= n + 1; ++k) {
      F v = int_pow(q, k) * at(cur, k);
      if (k >= 1) {
        v -= int_pow(q, n + k) * at(cur, k - 1);
        v -= int_pow(q, 2 * k - 1) * cn * at(prev, k - 1);
      }
      next[static_cast<std::size_t>(k)] = v;
    }
    rows.push_back(std::move(next));
  }
  return rows;
}

/// Rows of the Laguerre-type table:
/// b_{n+1,k} = q^{2k}/(1-q^{n+1}) [b_{n,k} - (1+q) c(n) q^{-1} b_{n,k-1} - d(n) q^{2k-3} b_{n-1,k-2}].
template <class F, class CFn, class DFn>
std::vector<std::vector<F>> laguerre_rows(const F& q, long N, CFn c, DFn d) {
  std::vector<std::vector<F>> rows;
  rows.push_back({F(1)});
  auto at = [](const std::vector<F>& r, long k) { return k >= 0 && k < static_cast<long>(r.size()) ? r[static_cast<std::size_t>(k)] : F(0); };
  for (long n = 0; n < N; ++n) {
    const auto& cur = rows[static_cast<std::size_t>(n)];
    const std::vector<F> empty;
    const auto& prev = n >= 1 ? rows[static_cast<std::size_t>(n - 1)] : empty;
    const F cn = c(n);
    const F dn = d(n);
    const F denom = F(1) - int_pow(q, n + 1);
    std::vector<F> next(static_cast<std::size_t>(n + 2), F(0));
    for (long k = 0; k <= n + 1; ++k) {
      F v = at(cur, k);
      if (k >= 1) v -= (F(1) + q) * cn / q * at(cur, k - 1);
      if (k >= 2) v -= dn * int_pow(q, 2 * k - 3) * at(prev, k - 2);
      next[static_cast<std::size_t>(k)] = int_pow(q, 2 * k) / denom * v;
    }
    rows.push_back(std::move(next));
  }
  return rows;
}

/// lambda_j = [-q^{2j-2} lambda_{j-1} + 2 q^{j^2-j} (1 + c1 q^{2j})] / (1 - q^j).
template <class F>
std::vector<F> lambda_coefficients(const F& q, const F& c1, const F& lambda0, long J) {
  std::vector<F> out{lambda0};
  for (long j = 1; j <= J; ++j) {
    const F prev = out.back();
    F v = -int_pow(q, 2 * j - 2) * prev + F(2) * int_pow(q, j * j - j) * (F(1) + c1 * int_pow(q, 2 * j));
    out.push_back(v / (F(1) - int_pow(q, j)));
  }
  return out;
}

}  // namespace qpr::detail
