#ifndef TDSHUFFLE_RATIONAL_HPP
#define TDSHUFFLE_RATIONAL_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tdshuffle {

using Integer = boost::multiprecision::cpp_int;

// Exact rational numbers, always in lowest terms with positive denominator.
// Backed by boost::multiprecision::cpp_rational, which maintains both
// invariants on every operation.
using Rational = boost::multiprecision::cpp_rational;

// The two-argument number constructor does NOT mean numerator/denominator,
// so all p/q construction goes through this helper.
inline Rational make_rational(const Integer& num, const Integer& den) {
  return Rational(num) / Rational(den);
}

inline bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

// Canonical text form: "p" when the denominator is 1, else "p/q".
inline std::string rational_str(const Rational& r) { return r.str(); }

}  // namespace tdshuffle

#endif
