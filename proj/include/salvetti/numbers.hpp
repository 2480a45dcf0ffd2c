#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace salvetti {

// Exact arithmetic carriers used throughout the library.  No floating point
// anywhere: group elements, polynomials and homology all live over these.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }
inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    BigInt b = 1;
    for (long i = 0; i < k; ++i) { b *= (n - i); b /= (i + 1); }
    return b;
}

}  // namespace salvetti
