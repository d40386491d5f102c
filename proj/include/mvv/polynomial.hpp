#pragma once

#include <map>
#include <string>
#include <vector>

#include "mvv/rational.hpp"

namespace mvv {

// Sparse multivariate polynomial with exact rational coefficients over a
// fixed list of variables (one per cylinder/edge). Exponent vectors always
// have length nvars(); absent variables carry exponent 0, which matters to
// the zeta-operators (an exponent-0 variable contributes zeta(1)).
class CylPolynomial {
   public:
    using Exponents = std::vector<int>;

    CylPolynomial() = default;
    explicit CylPolynomial(int nvars) : nvars_(nvars) {}

    static CylPolynomial constant(int nvars, Rational c);
    static CylPolynomial monomial(Exponents e, Rational c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    void add_term(Exponents e, const Rational& c);

    CylPolynomial operator+(const CylPolynomial& o) const;
    CylPolynomial operator*(const CylPolynomial& o) const;
    CylPolynomial operator*(const Rational& c) const;

    // d/db_var, then substitute b_var = 0
    CylPolynomial derivative_at_zero(int var) const;
    // multiplies every term by b_var^power (power may be negative); throws
    // std::domain_error if some exponent would drop below zero
    CylPolynomial shift_var(int var, int power) const;

    // -1 when not homogeneous
    long homogeneous_degree() const;
    bool all_exponents_odd() const;

    // e.g. "2/15 b1^5" with 1-based variable names
    std::string str(const std::string& var = "b") const;

   private:
    int nvars_ = 0;
    std::map<Exponents, Rational> terms_;
};

}  // namespace mvv
