#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace nearconf {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

/// "3", "-5/7" -> exact rational. Throws std::invalid_argument on junk.
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
}

inline std::string rational_to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace nearconf
