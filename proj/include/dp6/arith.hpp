#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace dp6 {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Internal consistency check that stays active in release builds: the
// recursion's ledger identities and exact divisions are correctness
// guarantees, not debugging aids.
inline void check(bool cond, const char* what) {
    if (!cond) throw std::logic_error(std::string("internal check failed: ") + what);
}

inline Int factorial(long n) {
    check(n >= 0, "factorial of negative number");
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    check(n >= 0, "binomial with negative n");
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return r;
}

// Exact quotient; the divisibility is asserted, not assumed.
inline Int exact_div(const Int& num, const Int& den, const char* what) {
    check(den != 0, "division by zero");
    Int q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    check(r == 0, what);
    return q;
}

inline Int int_pow(const Int& base, long exp) {
    check(exp >= 0, "negative exponent");
    Int r = 1;
    for (long i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace dp6
