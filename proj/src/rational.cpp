#include "featalloc/rational.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace featalloc {

std::optional<Rational> rationalize(double x, std::int64_t max_denom, double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  const bool neg = x < 0;
  double a = std::fabs(x);

  // Stern-Brocot style convergents p/q of the continued fraction of a.
  std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = a;
  for (int iter = 0; iter < 64; ++iter) {
    double fl = std::floor(frac);
    if (fl > 9e17) return std::nullopt;
    std::int64_t ai = static_cast<std::int64_t>(fl);
    std::int64_t p2 = ai * p1 + p0;
    std::int64_t q2 = ai * q1 + q0;
    if (q2 > max_denom || p2 < 0 || q2 < 0) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double rem = frac - fl;
    if (rem < 1e-18) break;
    frac = 1.0 / rem;
  }
  if (q1 == 0) return std::nullopt;
  double approx = static_cast<double>(p1) / static_cast<double>(q1);
  if (std::fabs(approx - a) > tol * std::max(1.0, a)) return std::nullopt;
  Rational r(p1, q1);
  return neg ? -r : r;
}

Rational parse_rational(const std::string& text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("not a rational literal: " + text);
  };
  std::string s = text;
  if (s.empty()) fail();

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) fail();
    return Rational(num, den);
  }

  bool neg = false;
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') {
    neg = s[i] == '-';
    ++i;
  }
  std::string digits;
  int exp10 = 0;
  bool seen_dot = false, seen_digit = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '.') {
      if (seen_dot) fail();
      seen_dot = true;
    } else if (c == 'e' || c == 'E') {
      exp10 += std::atoi(s.c_str() + i + 1);
      break;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      seen_digit = true;
      if (seen_dot) --exp10;
    } else {
      fail();
    }
  }
  if (!seen_digit) fail();
  Rational r(BigInt(digits), 1);
  for (int e = exp10; e < 0; ++e) r /= 10;
  for (int e = 0; e < exp10; ++e) r *= 10;
  return neg ? -r : r;
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

}  // namespace featalloc
