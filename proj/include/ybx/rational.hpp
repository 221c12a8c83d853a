#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>

#include "ybx/errors.hpp"

namespace ybx {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational in canonical form: gcd(|num|, den) = 1,
// den > 0, zero stored as 0/1. cpp_rational maintains this on every op.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

// r^e for any integer e (0^e only for e >= 0).
inline Rational rat_pow(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    if (r == 0) {
        if (e < 0) throw division_by_zero();
        return Rational(0);
    }
    bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-(e + 1)) + 1ul
                             : static_cast<unsigned long>(e);
    BigInt n = rat_num(r), d = rat_den(r);
    BigInt np = boost::multiprecision::pow(n, static_cast<unsigned>(k));
    BigInt dp = boost::multiprecision::pow(d, static_cast<unsigned>(k));
    Rational out(np, dp);
    if (invert) out = Rational(1) / out;
    return out;
}

// gcd of absolute values taken as rationals: gcd of numerators over lcm of
// denominators. Nonnegative; gcd(0, x) = |x|.
inline Rational rat_content_gcd(const Rational& a, const Rational& b) {
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;
    if (a == 0) return b < 0 ? Rational(-b) : b;
    if (b == 0) return a < 0 ? Rational(-a) : a;
    BigInt n = gcd(rat_num(a), rat_num(b));
    BigInt d = lcm(rat_den(a), rat_den(b));
    if (n < 0) n = -n;
    return Rational(n, d);
}

inline std::string rat_to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

} // namespace ybx
