#include "subsum/rational.hpp"

namespace subsum {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Int(s));
    }
    Int p(s.substr(0, slash));
    Int q(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rational(p, q);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
}

std::string to_string(const Rational& r) {
  Int d = den(r);
  if (d == 1) return num(r).str();
  return num(r).str() + "/" + d.str();
}

bool is_pow2(const Int& n) {
  if (n < 1) return false;
  return (n & (n - 1)) == 0;
}

bool is_dyadic(const Rational& x, const Rational& scale) {
  if (scale <= 0) throw std::invalid_argument("is_dyadic: scale must be positive");
  Rational q = x / scale;
  return is_pow2(den(q));
}

}  // namespace subsum
