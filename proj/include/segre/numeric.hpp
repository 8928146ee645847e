#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace segre {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational &q) {
  return boost::multiprecision::numerator(q);
}
inline Integer denominator(const Rational &q) {
  return boost::multiprecision::denominator(q);
}

/// p / q for any nonzero q; the sign moves to the numerator.
inline Rational ratio(const Integer &p, const Integer &q) { return Rational(p) / Rational(q); }

/// Canonical rendering: "p" for integers, "p/q" in lowest terms otherwise.
inline std::string to_string(const Integer &z) { return z.str(); }
inline std::string to_string(const Rational &q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

/// Binomial coefficient C(n, k), zero outside 0 <= k <= n.
inline Integer binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline Integer ipow(const Integer &base, unsigned e) {
  return boost::multiprecision::pow(base, e);
}

} // namespace segre
