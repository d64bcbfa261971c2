#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace featalloc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt b = 1;
  for (unsigned i = 0; i < k; ++i) {
    b *= (n - i);
    b /= (i + 1);
  }
  return b;
}

// Best rational approximation to x with denominator <= max_denom
// (continued-fraction convergents). Returns nullopt when no candidate
// reproduces x to within tol in relative terms.
std::optional<Rational> rationalize(double x, std::int64_t max_denom = 1000000,
                                    double tol = 1e-12);

// Parses "3/8", "0.25", "-1.5e-2" style literals exactly.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);

}  // namespace featalloc
