#include "mvv/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace mvv {

CylPolynomial CylPolynomial::constant(int nvars, Rational c) {
    CylPolynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

CylPolynomial CylPolynomial::monomial(Exponents e, Rational c) {
    CylPolynomial p(static_cast<int>(e.size()));
    p.add_term(std::move(e), c);
    return p;
}

void CylPolynomial::add_term(Exponents e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw std::invalid_argument("exponent vector length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(std::move(e), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

CylPolynomial CylPolynomial::operator+(const CylPolynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
    CylPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

CylPolynomial CylPolynomial::operator*(const CylPolynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
    CylPolynomial r(nvars_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e = e1;
            for (int i = 0; i < nvars_; ++i) e[i] += e2[i];
            r.add_term(std::move(e), c1 * c2);
        }
    }
    return r;
}

CylPolynomial CylPolynomial::operator*(const Rational& c) const {
    CylPolynomial r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.add_term(e, v * c);
    return r;
}

CylPolynomial CylPolynomial::derivative_at_zero(int var) const {
    CylPolynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] != 1) continue;  // exponent > 1 dies at b_var = 0
        Exponents t = e;
        t[var] = 0;
        r.add_term(std::move(t), c);
    }
    return r;
}

CylPolynomial CylPolynomial::shift_var(int var, int power) const {
    CylPolynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents t = e;
        t[var] += power;
        if (t[var] < 0)
            throw std::domain_error("shift_var: exponent would become negative");
        r.add_term(std::move(t), c);
    }
    return r;
}

long CylPolynomial::homogeneous_degree() const {
    long deg = -1;
    for (const auto& [e, c] : terms_) {
        long d = 0;
        for (int x : e) d += x;
        if (deg == -1)
            deg = d;
        else if (deg != d)
            return -1;
    }
    return deg;
}

bool CylPolynomial::all_exponents_odd() const {
    for (const auto& [e, c] : terms_)
        for (int x : e)
            if (x % 2 == 0) return false;
    return true;
}

std::string CylPolynomial::str(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << to_string(c);
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            os << " " << var << i + 1;
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

}  // namespace mvv
