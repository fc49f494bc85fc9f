#ifndef PUNCTUAL_RATIONAL_HPP
#define PUNCTUAL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace punctual {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
// cpp_rational keeps values reduced with a positive denominator, which is
// exactly the invariant the rest of the library relies on.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

// C(n, k) for possibly large n; 0 when k < 0 or k > n. n must be >= 0.
inline Integer binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;  // exact at every step: r is C(n-k+i, i)
    }
    return r;
}

// binomial() result as a long; all counts in this library fit comfortably.
inline long binomial_l(long n, long k) {
    Integer b = binomial(n, k);
    return static_cast<long>(b);
}

inline std::string to_string(const Rational& q) { return q.str(); }
inline std::string to_string(const Integer& z) { return z.str(); }

}  // namespace punctual

#endif
