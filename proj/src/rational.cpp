#include "qpr/rational.hpp"

#include "qpr/detail/recursions.hpp"
#include "qpr/errors.hpp"

namespace qpr {

Rational rational_pow(const Rational& q, long e) {
  if (e < 0 && q == 0) throw InvalidArgument("negative power of zero");
  return detail::int_pow(q, e);
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw InvalidArgument("empty rational literal");
  const auto dot = text.find('.');
  if (dot == std::string::npos) {
    Rational r;
    if (r.set_str(text, 10) != 0) throw InvalidArgument("bad rational literal: " + text);
    if (r.get_den() == 0) throw InvalidArgument("zero denominator: " + text);
    r.canonicalize();
    return r;
  }
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  const long scale = static_cast<long>(text.size() - dot - 1);
  if (digits.empty() || digits == "-" || digits == "+") throw InvalidArgument("bad decimal literal: " + text);
  if (digits[0] == '+') digits.erase(0, 1);
  mpz_class num;
  if (num.set_str(digits, 10) != 0) throw InvalidArgument("bad decimal literal: " + text);
  Rational r(num);
  r /= rational_pow(Rational(10), scale);
  return r;
}

}  // namespace qpr
