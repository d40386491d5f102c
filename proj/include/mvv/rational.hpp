#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mvv {

// Arbitrary-precision integer and reduced rational. GMP keeps mpq_class
// canonical (gcd 1, positive denominator) through arithmetic; raw access
// via get_num()/get_den() must call canonicalize() afterwards, which the
// helpers below do.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r;
    r.get_num() = num;
    r.get_den() = den;
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

Integer factorial(long n);
// (n)!! with the convention (-1)!! = (0)!! = 1; negative n < -1 rejected.
Integer double_factorial(long n);
Integer binomial(long n, long k);
Integer int_pow(const Integer& base, unsigned long e);
Rational pow_rational(const Rational& base, long e);

// "num/den", or just "num" for integers.
std::string to_string(const Rational& r);
// Accepts "a/b" or "a"; throws std::invalid_argument on malformed input.
Rational rational_from_string(std::string_view s);

}  // namespace mvv
