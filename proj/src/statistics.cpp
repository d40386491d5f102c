#include "mvv/statistics.hpp"

#include <stdexcept>

#include "mvv/decimal.hpp"
#include "mvv/volumes.hpp"

namespace mvv {

CylinderDistribution cylinder_distribution(int g, int n) {
    const VolumeResult& vol = masur_veech_volume(g, n);
    CylinderDistribution dist;
    dist.g = g;
    dist.n = n;
    for (const auto& [k, v] : vol.by_cylinder_count)
        dist.p.emplace_back(k, v.coeff / vol.total.coeff);
    return dist;
}

std::string ExpectationResult::decimal(int digits) const {
    if (divergent) return "DIVERGENT";
    if (fixed_heights) return decimal_string(rational_value, digits);
    auto iv = [&](long prec) {
        return eval_interval(numerator, prec) / eval_interval(denominator, prec);
    };
    for (long prec = digits + 10;; prec *= 2) {
        RatInterval i = iv(prec);
        std::string a = render_significant(i.lo, digits);
        std::string b = render_significant(i.hi, digits);
        if (a == b) return a;
        if (prec > 64L * (digits + 16))
            throw std::runtime_error("expectation rendering did not stabilize");
    }
}

ExpectationResult expectation(const ExpectationQuery& q) {
    const StableGraph& G = q.graph;
    CylPolynomial P = p_gamma(G);
    if (static_cast<int>(q.moment_delta.size()) != P.nvars())
        throw std::invalid_argument("moment length does not match edge count");
    CylPolynomial shifted = P;
    for (int i = 0; i < P.nvars(); ++i)
        if (q.moment_delta[i] != 0) shifted = shifted.shift_var(i, q.moment_delta[i]);

    ExpectationResult res;
    if (q.heights) {
        res.fixed_heights = true;
        Rational den = y_op(P, *q.heights);
        if (den == 0) throw std::domain_error("expectation over empty ensemble");
        res.rational_value = y_op(shifted, *q.heights) / den;
    } else {
        res.numerator = z_op(shifted);
        res.denominator = z_op(P);
        res.divergent = res.numerator.divergent();
    }
    return res;
}

HeightOneResult height_one_probability(int g, int n, int digits) {
    if (g < 0 || n < 0 || 2 * g + n <= 2 || (g == 0 && n == 3))
        throw std::invalid_argument("no one-cylinder square-tiled surfaces here");
    const int d = 6 * g - 6 + 2 * n;
    PiMonomial z = zeta_even(d);
    HeightOneResult r;
    r.exact = PiMonomial(Rational(1) / z.coeff, -d);
    r.decimal = decimal_string(r.exact, digits);
    return r;
}

namespace {
// sum_{h=1}^{B} h^{-s}
Rational partial_zeta(int s, long B) {
    Rational sum(0);
    for (long h = 1; h <= B; ++h)
        sum += make_rational(Integer(1), int_pow(Integer(h), s));
    return sum;
}
}  // namespace

HeightProbability bounded_height_probability(const StableGraph& G, long bound) {
    if (bound < 1) throw std::invalid_argument("height bound must be >= 1");
    CylPolynomial P = p_gamma(G);
    // the height sum factorizes per variable within each monomial
    Rational num(0);
    for (const auto& [e, c] : P.terms()) {
        Rational t = c;
        for (int m : e) t *= Rational(factorial(m)) * partial_zeta(m + 1, bound);
        num += t;
    }
    HeightProbability r;
    r.numerator = num;
    r.denominator = z_op(P);
    return r;
}

std::optional<PiMonomial> HeightProbability::exact() const {
    if (!denominator.all_even_args()) return std::nullopt;
    PiMonomial den = denominator.exact_pi_value();
    return PiMonomial(numerator / den.coeff, -den.pi_exp);
}

std::string HeightProbability::decimal(int digits) const {
    auto make = [&](long prec) {
        return RatInterval(numerator) / eval_interval(denominator, prec);
    };
    for (long prec = digits + 10;; prec *= 2) {
        RatInterval i = make(prec);
        std::string a = render_significant(i.lo, digits);
        std::string b = render_significant(i.hi, digits);
        if (a == b) return a;
        if (prec > 64L * (digits + 16))
            throw std::runtime_error("probability rendering did not stabilize");
    }
}

}  // namespace mvv
