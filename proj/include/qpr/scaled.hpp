#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qpr/context.hpp"
#include "qpr/families.hpp"
#include "qpr/rational.hpp"
#include "qpr/scaled_value.hpp"

namespace qpr {

/// Which reciprocal power of t a table is a polynomial in.
enum class URole { kInverseTSquared, kInverseT };

/// Coefficients of the scaled polynomials s_n (in u = 1/t^2) or S_n (in u = 1/t)
/// for n = 0..N. Row n holds n+1 real entries, stored as one flat triangle.
class CoeffTable {
 public:
  CoeffTable(FamilySpec family, URole role, double q, std::int64_t N);

  const FamilySpec& family() const noexcept { return family_; }
  URole u_role() const noexcept { return role_; }
  double q() const noexcept { return q_; }
  std::int64_t order() const noexcept { return N_; }

  std::span<const double> row(std::int64_t n) const;
  double at(std::int64_t n, std::int64_t k) const;

 private:
  friend CoeffTable symmetric_coeff_table(const FamilySpec&, std::int64_t, const QContext&);
  friend CoeffTable laguerre_coeff_table(const FamilySpec&, std::int64_t, const QContext&);
  std::span<double> mutable_row(std::int64_t n);

  FamilySpec family_;
  URole role_;
  double q_;
  std::int64_t N_;
  std::vector<double> data_;
};

/// Rows of s_n via a_{n+1,k} = q^k a_{n,k} - q^{n+k} a_{n,k-1} - q^{2k-1} c(q,n) a_{n-1,k-1}.
CoeffTable symmetric_coeff_table(const FamilySpec& spec, std::int64_t N, const QContext& ctx);

/// Rows of S_n via b_{n+1,k} = q^{2k}/(1-q^{n+1}) [b_{n,k} - (1+q) c(q,n) q^{-1} b_{n,k-1}
/// - d(q,n) q^{2k-3} b_{n-1,k-2}]. Throws InconsistentFamily.
CoeffTable laguerre_coeff_table(const FamilySpec& spec, std::int64_t N, const QContext& ctx);

/// Whichever of the two tables fits the family.
CoeffTable coeff_table(const FamilySpec& spec, std::int64_t N, const QContext& ctx);

/// Row n of the table at t (Horner in u). Throws ZeroArgument for t = 0.
Complex eval_upoly(const CoeffTable& table, std::int64_t n, Complex t);
std::vector<Complex> eval_upoly_batch(const CoeffTable& table, std::int64_t n, std::span<const Complex> t);

/// q^{n^2/2} t^{-n} p_n(x_n(t)) or q^{n^2} (-t)^{-n} p_n(x_n(t)) from eval_raw.
Complex scaled_direct(const FamilySpec& spec, std::int64_t n, Complex t, const QContext& ctx);

struct CrossCheck {
  Complex coeff_value;
  Complex direct_value;
  double rel_err;
};

/// Largest n cross_check_direct accepts.
inline constexpr std::int64_t kMaxDirectDegree = 60;

/// The scaled value from the coefficient table and from the raw recurrence.
/// Throws UnsupportedRange for n > kMaxDirectDegree.
CrossCheck cross_check_direct(const FamilySpec& spec, std::int64_t n, Complex t, const QContext& ctx);

struct BoundReport {
  std::int64_t n;
  Complex t;
  double lhs;
  double rhs;
  double margin;
  double K;
};

/// sup over j <= n of |c(q,j)| (symmetric) or max(|c(q,j)|, sqrt|d(q,j)|).
double default_bound_constant(const FamilySpec& spec, std::int64_t n, const QContext& ctx);

/// Symmetric: |s_n(t)| <= prod_{k=0}^{n} (1+q^k) A_q(-K/|t|^2).
/// Laguerre-type: |S_n(t)| <= f^b(|t|/K) / prod_{k=1}^{n} (1-q^k).
/// K defaults to default_bound_constant. Throws DomainError for |t| < 1.
BoundReport bound_check(const FamilySpec& spec, std::int64_t n, Complex t, std::optional<double> K, const QContext& ctx);

/// bound_check for n = 0..n_max and every t, sharing one table; ordered by n, then t.
std::vector<BoundReport> bound_grid(const FamilySpec& spec, std::int64_t n_max, std::span<const Complex> t,
                                    std::optional<double> K, const QContext& ctx);

/// M prod_{j=1}^{k} (1 + (1+K)/(rho^2 q^{j-1})).
double normal_bound_rhs(std::int64_t k, double rho, double M, double K, const QContext& ctx);

namespace exact {

/// Exact table rows for q^{-1}-Hermite, Stieltjes-Wigert and q-Laguerre with
/// integer alpha >= 0. Throws UnsupportedFamily otherwise.
std::vector<std::vector<Rational>> coeff_rows(const FamilySpec& spec, long N, const Rational& q);

}  // namespace exact

}  // namespace qpr
