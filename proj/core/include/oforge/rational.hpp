#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "oforge/error.hpp"

namespace oforge {

// All arithmetic in the engine is exact. There is no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "3", "-3", "3/4", "-3/4".
inline Rational parse_rational(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) fail_parse("rational with zero denominator: " + s);
    return Rational(num, den);
  } catch (const std::exception&) {
    fail_parse("malformed rational: " + s);
  }
}

inline Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int b = 1;
  for (int i = 0; i < k; ++i) {
    b *= (n - i);
    b /= (i + 1);
  }
  return b;
}

}  // namespace oforge
