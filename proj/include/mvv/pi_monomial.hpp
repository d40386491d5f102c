#pragma once

#include <stdexcept>
#include <string>

#include "mvv/rational.hpp"

namespace mvv {

// An exact rational multiple of an integer power of pi. The canonical zero
// has pi_exp == 0, so equality testing is plain member comparison.
struct PiMonomial {
    Rational coeff;
    int pi_exp = 0;

    PiMonomial() : coeff(0) {}
    PiMonomial(Rational c, int e) : coeff(std::move(c)), pi_exp(e) {
        if (coeff == 0) pi_exp = 0;
    }

    bool is_zero() const { return coeff == 0; }

    friend bool operator==(const PiMonomial& a, const PiMonomial& b) {
        return a.coeff == b.coeff && a.pi_exp == b.pi_exp;
    }

    PiMonomial operator*(const PiMonomial& o) const {
        return PiMonomial(coeff * o.coeff, pi_exp + o.pi_exp);
    }
    PiMonomial operator*(const Rational& r) const {
        return PiMonomial(coeff * r, pi_exp);
    }
    PiMonomial operator/(const PiMonomial& o) const {
        if (o.coeff == 0) throw std::domain_error("division by zero PiMonomial");
        return PiMonomial(coeff / o.coeff, pi_exp - o.pi_exp);
    }
    PiMonomial operator/(const Rational& r) const {
        if (r == 0) throw std::domain_error("division by zero");
        return PiMonomial(coeff / r, pi_exp);
    }

    // Addition is defined for equal pi powers (or when one side is zero).
    PiMonomial operator+(const PiMonomial& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        if (pi_exp != o.pi_exp)
            throw std::domain_error("adding PiMonomials with different pi powers");
        return PiMonomial(coeff + o.coeff, pi_exp);
    }
    PiMonomial& operator+=(const PiMonomial& o) { return *this = *this + o; }

    // e.g. "16/945 * pi^6"
    std::string str() const;
};

std::string to_string(const PiMonomial& m);

}  // namespace mvv
