#pragma once

#include <optional>
#include <string>

#include "mvv/pi_monomial.hpp"
#include "mvv/rational.hpp"
#include "mvv/zeta.hpp"

namespace mvv {

// Exact rational enclosure of a real value; all numeric output is produced
// by shrinking an interval until both endpoints render identically, so every
// printed digit is certified.
struct RatInterval {
    Rational lo, hi;

    RatInterval() : lo(0), hi(0) {}
    explicit RatInterval(const Rational& x) : lo(x), hi(x) {}
    RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}

    RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    RatInterval operator*(const RatInterval& o) const;
    RatInterval operator/(const RatInterval& o) const;
    RatInterval pow(int e) const;  // e >= 0
    Rational width() const { return hi - lo; }
};

// pi enclosed within 10^-prec (Machin's formula, exact tail bounds; memoized).
RatInterval pi_interval(long prec);

// zeta(s), s >= 2, enclosed within 10^-prec (Euler-Maclaurin with the
// first-omitted-term tail bound; even s short-circuits through zeta_even).
RatInterval zeta_interval(int s, long prec);

RatInterval eval_interval(const PiMonomial& m, long prec);
// Throws std::domain_error if the expression is divergent.
RatInterval eval_interval(const ZetaExpr& e, long prec);

// `digits` significant decimal digits, round-half-even, plain positional
// notation (falls back to exponent notation for extreme magnitudes).
std::string render_significant(const Rational& x, int digits);

std::string decimal_string(const Rational& x, int digits);
std::string decimal_string(const PiMonomial& m, int digits);

// zeta(s) to `digits` significant digits. s == 1 raises std::domain_error.
std::string zeta_numeric(int s, int digits);

struct ZetaEvalResult {
    bool divergent = false;
    std::string decimal;  // empty when divergent
};
// Replaces even-argument zeta factors exactly and odd ones numerically;
// DIVERGENT iff some term contains zeta(1).
ZetaEvalResult evaluate_zeta_expr(const ZetaExpr& e, int digits);

}  // namespace mvv
