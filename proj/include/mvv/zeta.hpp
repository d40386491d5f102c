#pragma once

#include <map>
#include <string>
#include <vector>

#include "mvv/pi_monomial.hpp"
#include "mvv/rational.hpp"

namespace mvv {

// Bernoulli number B_m for even m >= 0 (classical convolution recursion,
// memoized; thread-safe). Odd m is rejected: only even indices are exposed.
Rational bernoulli(int m);

// zeta(s) for positive even s as an exact rational times pi^s:
//   zeta(2m) = (-1)^{m+1} B_{2m} (2 pi)^{2m} / (2 (2m)!)
PiMonomial zeta_even(int s);

// A finite Q-linear combination of products prod_i zeta(a_i) with integer
// arguments a_i >= 1. Keys are sorted argument multisets; the empty key is
// the constant term. A term containing zeta(1) marks the whole expression
// divergent (evaluation returns +infinity).
class ZetaExpr {
   public:
    using Key = std::vector<int>;  // sorted, entries >= 1

    ZetaExpr() = default;
    static ZetaExpr constant(Rational c);
    static ZetaExpr monomial(Key args, Rational coeff);

    bool is_zero() const { return terms_.empty(); }
    bool divergent() const;
    const std::map<Key, Rational>& terms() const { return terms_; }
    // nullptr unless the expression is a single term
    const std::pair<const Key, Rational>* single_term() const;

    void add_term(Key args, const Rational& coeff);

    ZetaExpr operator+(const ZetaExpr& o) const;
    ZetaExpr operator-(const ZetaExpr& o) const;
    ZetaExpr operator*(const ZetaExpr& o) const;
    ZetaExpr operator*(const Rational& r) const;

    // Division is defined only when the divisor is a single term whose
    // argument multiset divides every term of the numerator; anything else
    // throws std::domain_error. (All ratios arising from the expectation
    // machinery are kept as ZetaRatio instead.)
    ZetaExpr operator/(const ZetaExpr& o) const;

    // Exact value as rational * pi^k; requires every argument even.
    // Throws std::domain_error on odd arguments or on divergent input.
    PiMonomial exact_pi_value() const;
    bool all_even_args() const;

    friend bool operator==(const ZetaExpr& a, const ZetaExpr& b) {
        return a.terms_ == b.terms_;
    }

    // e.g. "2/3 zeta(3)^2 + 1"
    std::string str() const;

   private:
    std::map<Key, Rational> terms_;
};

}  // namespace mvv
