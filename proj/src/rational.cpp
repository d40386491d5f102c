#include "mvv/rational.hpp"

#include <vector>

namespace mvv {

Integer factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of negative integer");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer double_factorial(long n) {
    if (n <= 0) {
        if (n == 0 || n == -1) return Integer(1);
        throw std::domain_error("double factorial of integer below -1");
    }
    Integer r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer binomial(long n, long k) {
    if (k < 0 || k > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

Integer int_pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rational pow_rational(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw std::domain_error("negative power of zero");
        return Rational(0);
    }
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational r = make_rational(int_pow(Integer(base.get_num()), a),
                               int_pow(Integer(base.get_den()), a));
    if (e < 0) r = Rational(1) / r;
    return r;
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_from_string(std::string_view s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            Integer n(std::string(s), 10);
            return Rational(n);
        }
        Integer num(std::string(s.substr(0, slash)), 10);
        Integer den(std::string(s.substr(slash + 1)), 10);
        return make_rational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational: " + std::string(s));
    }
}

}  // namespace mvv
