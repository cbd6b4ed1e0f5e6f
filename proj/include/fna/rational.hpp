#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "fna/errors.hpp"

namespace fna {

/// Exact arbitrary-precision rational scalar. Always stored reduced with a
/// positive denominator; the zero value is canonical.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw ZeroDenominatorError();
  // division reduces and keeps the sign in the numerator
  return Rational(num) / Rational(den);
}

inline std::string numerator_string(const Rational& r) { return numerator(r).str(); }
inline std::string denominator_string(const Rational& r) { return denominator(r).str(); }

/// "3", "-3" or "3/4".
inline std::string rational_to_string(const Rational& r) {
  std::string s = numerator_string(r);
  if (denominator(r) != 1) s += "/" + denominator_string(r);
  return s;
}

/// Inverse of the JSON num/den encoding (decimal strings).
inline Rational rational_from_strings(const std::string& num, const std::string& den) {
  try {
    Integer n(num), d(den);
    return make_rational(n, d);
  } catch (const ZeroDenominatorError&) {
    throw;
  } catch (const std::exception&) {
    throw SchemaError("bad integer string: \"" + num + "\" / \"" + den + "\"");
  }
}

}  // namespace fna
