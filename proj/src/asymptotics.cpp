#include "mvv/asymptotics.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "mvv/zeta.hpp"

namespace mvv {

TwoCorrelatorRow a_gk_row(int g) {
    if (g < 1) throw std::invalid_argument("a_gk_row requires g >= 1");
    TwoCorrelatorRow row;
    row.g = g;
    row.a.assign(3 * g, Rational(0));
    row.a[0] = Rational(1);
    const int half = (3 * g - 1) / 2;
    const Integer dfden = double_factorial(6L * g - 1);
    for (int k = 0; k < half; ++k) {
        Rational pref = make_rational(double_factorial(6L * g - 3 - 2 * k), dfden);
        Rational diff;
        if (k % 3 == 2) {  // k = 3j-1
            const int j = (k + 1) / 3;
            // (6j-1)!!/j! (g-1)!/(g-j)! (g-2j)
            Rational q = make_rational(double_factorial(6L * j - 1), factorial(j));
            q *= Rational(factorial(g - 1)) / Rational(factorial(g - j));
            diff = pref * q * Rational(g - 2L * j);
        } else if (k % 3 == 0) {  // k = 3j
            const int j = k / 3;
            Rational q = make_rational(double_factorial(6L * j + 1), factorial(j));
            q *= Rational(factorial(g - 1)) / Rational(factorial(g - 1 - j));
            diff = pref * q * Rational(-2);
        } else {  // k = 3j+1
            const int j = (k - 1) / 3;
            Rational q = make_rational(double_factorial(6L * j + 3), factorial(j));
            q *= Rational(factorial(g - 1)) / Rational(factorial(g - 1 - j));
            diff = pref * q * Rational(2);
        }
        row.a[k + 1] = row.a[k] + diff;
    }
    for (int k = half + 1; k < 3 * g; ++k) row.a[k] = row.a[3 * g - 1 - k];
    return row;
}

Rational r_gj(int g, int j) {
    if (j < 0 || j > g) throw std::invalid_argument("r_gj requires 0 <= j <= g");
    return make_rational(binomial(3L * g, 3L * j) * binomial(g, j),
                         binomial(6L * g, 6L * j));
}

namespace {
std::mutex row_mu;
std::map<int, TwoCorrelatorRow> row_cache;

const TwoCorrelatorRow& cached_row(int g) {
    std::lock_guard lock(row_mu);
    auto it = row_cache.find(g);
    if (it == row_cache.end()) it = row_cache.emplace(g, a_gk_row(g)).first;
    return it->second;
}
}  // namespace

Rational vol_gamma1_zeta_coeff(int g) {
    if (g < 2) throw std::invalid_argument("vol_gamma1 requires g >= 2");
    const int gg = g - 1;
    const TwoCorrelatorRow& row = cached_row(gg);
    Rational sum(0);
    for (int k = 0; k < 3 * gg; ++k)
        sum += Rational(binomial(6L * gg, 2L * k + 1)) * row.a[k];
    Rational coef = Rational(factorial(4L * gg)) /
                    Rational(factorial(gg) * factorial(3L * gg));
    coef /= Rational(int_pow(Integer(3), gg) * int_pow(Integer(2), 2L * gg));
    return coef * Rational(2) * sum;
}

PiMonomial vol_gamma1(int g) {
    return zeta_even(6 * g - 6) * vol_gamma1_zeta_coeff(g);
}

Rational vol_delta_zeta_coeff(int g1, int g2) {
    if (g1 < 1 || g2 < 1)
        throw std::invalid_argument("vol_delta requires g1, g2 >= 1");
    const int g = g1 + g2;
    Rational c = make_rational(4, g1 == g2 ? 2 : 1);
    c *= Rational(binomial(4L * g - 4, g));
    c /= Rational(int_pow(Integer(12), g));
    c *= Rational(binomial(g, g1));
    c *= Rational(binomial(3L * g - 4, 3L * g1 - 2));
    return c;
}

PiMonomial vol_delta(int g1, int g2) {
    return zeta_even(6 * (g1 + g2) - 6) * vol_delta_zeta_coeff(g1, g2);
}

Integer s_g(int g) {
    if (g < 2) throw std::invalid_argument("s_g requires g >= 2");
    Integer sum(0);
    for (int g1 = 1; g1 < g; ++g1)
        sum += binomial(g, g1) * binomial(3L * g - 4, 3L * g1 - 2);
    return sum;
}

Integer s_g_recurrence(int g) {
    if (g < 2) throw std::invalid_argument("s_g requires g >= 2");
    Rational s2 = Rational(s_g(2)), s3 = Rational(s_g(3));
    if (g == 2) return Integer(s2.get_num());
    if (g == 3) return Integer(s3.get_num());
    for (long k = 2; k + 2 <= g; ++k) {
        // S(k+2) in terms of S(k+1), S(k)
        Rational c1 = make_rational(
            Integer(2) * Integer(324 * k * k * k * k + 432 * k * k * k +
                                 123 * k * k - 49 * k - 8),
            Integer((6 * k - 1) * (3 * k + 4) * (3 * k - 1) * (k + 1)));
        Rational c2 = make_rational(
            Integer(36) * Integer((6 * k + 5) * (4 * k - 1) * (4 * k - 3)),
            Integer((6 * k - 1) * (3 * k + 4) * (3 * k - 1)));
        Rational next = c1 * s3 + c2 * s2;
        s2 = s3;
        s3 = next;
    }
    if (s3.get_den() != 1)
        throw std::logic_error("Zeilberger recurrence produced a non-integer");
    return Integer(s3.get_num());
}

std::string a_gk_csv(int gmax) {
    std::ostringstream os;
    os << "g,k,a_num,a_den\n";
    for (int g = 1; g <= gmax; ++g) {
        TwoCorrelatorRow row = a_gk_row(g);
        for (int k = 0; k < 3 * g; ++k)
            os << g << "," << k << "," << row.a[k].get_num().get_str() << ","
               << row.a[k].get_den().get_str() << "\n";
    }
    return os.str();
}

}  // namespace mvv
