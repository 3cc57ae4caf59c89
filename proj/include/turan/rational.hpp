#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>

namespace turan {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

inline BigInt ipow(BigInt base, unsigned exp) {
    BigInt r = 1;
    while (exp) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

inline BigInt factorial(long n) {
    BigInt r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

// Range-safe conversion: numerator/denominator may individually overflow
// double (appendix sums reach thousands of digits).
inline double to_double(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if (num == 0) return 0.0;
    int sign = 1;
    if (num < 0) {
        num = -num;
        sign = -1;
    }
    long nb = static_cast<long>(boost::multiprecision::msb(num));
    long db = static_cast<long>(boost::multiprecision::msb(den));
    long shift = db - nb + 80;
    if (shift > 0)
        num <<= shift;
    else
        den <<= -shift;
    double q = (num / den).convert_to<double>();
    return sign * std::ldexp(q, static_cast<int>(-shift));
}

}  // namespace turan
