#pragma once

#include <gmpxx.h>

#include <string>

namespace qpr {

/// Exact rationals for the exact-arithmetic twins of the recursions.
using Rational = mpq_class;

/// q^e for integer e (negative allowed when q != 0).
Rational rational_pow(const Rational& q, long e);

/// Parses "p/r", an integer, or a finite decimal such as "0.25".
Rational parse_rational(const std::string& text);

inline double to_double(const Rational& r) { return r.get_d(); }

}  // namespace qpr
