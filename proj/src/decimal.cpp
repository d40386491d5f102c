#include "mvv/decimal.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace mvv {

RatInterval RatInterval::operator*(const RatInterval& o) const {
    Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return {std::min(std::min(a, b), std::min(c, d)),
            std::max(std::max(a, b), std::max(c, d))};
}

RatInterval RatInterval::operator/(const RatInterval& o) const {
    if (sgn(o.lo) <= 0 && sgn(o.hi) >= 0)
        throw std::domain_error("interval division by interval containing zero");
    RatInterval inv(Rational(1) / o.hi, Rational(1) / o.lo);
    return *this * inv;
}

RatInterval RatInterval::pow(int e) const {
    if (e < 0) throw std::domain_error("negative interval power");
    RatInterval r((Rational(1)));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

namespace {

Rational pow10(long e) {
    if (e >= 0) return Rational(int_pow(Integer(10), static_cast<unsigned long>(e)));
    return make_rational(Integer(1), int_pow(Integer(10), static_cast<unsigned long>(-e)));
}

// atan(1/x) with tail bound: alternating series, |tail| <= next term
RatInterval atan_inv(long x, long prec) {
    Rational eps = pow10(-prec);
    Rational sum(0);
    Rational xx(static_cast<long>(x) * x);
    Rational term = make_rational(1, x);
    long k = 0;
    while (true) {
        Rational t = term / Rational(2 * k + 1);
        if (t < eps) {
            // alternating: partial sum error bounded by t
            if (k % 2 == 0) return {sum, sum + t};
            return {sum - t, sum};
        }
        sum += (k % 2 == 0) ? t : -t;
        term /= xx;
        ++k;
    }
}

std::mutex cache_mu;
std::map<long, RatInterval> pi_cache;
std::map<std::pair<int, long>, RatInterval> zeta_cache;

}  // namespace

RatInterval pi_interval(long prec) {
    {
        std::lock_guard lock(cache_mu);
        auto it = pi_cache.lower_bound(prec);
        if (it != pi_cache.end()) return it->second;
    }
    RatInterval a = atan_inv(5, prec + 3), b = atan_inv(239, prec + 3);
    RatInterval pi = a * RatInterval(Rational(16)) - b * RatInterval(Rational(4));
    std::lock_guard lock(cache_mu);
    pi_cache.emplace(prec, pi);
    return pi;
}

RatInterval zeta_interval(int s, long prec) {
    if (s < 2) throw std::domain_error("zeta_interval: s must be >= 2");
    {
        std::lock_guard lock(cache_mu);
        auto it = zeta_cache.lower_bound({s, prec});
        if (it != zeta_cache.end() && it->first.first == s) return it->second;
    }
    RatInterval result;
    if (s % 2 == 0) {
        PiMonomial z = zeta_even(s);
        result = pi_interval(prec + 3).pow(s) * RatInterval(z.coeff);
    } else {
        // Euler-Maclaurin: zeta(s) = sum_{n<N} n^-s + N^{1-s}/(s-1) + N^-s/2
        //   + sum_{j=1..m} B_{2j}/(2j)! (s)_{2j-1} N^{-s-2j+1} + R,
        // |R| <= first omitted term (f = x^-s has completely monotone
        // derivatives, so the remainder alternates with the correction terms).
        Rational eps = pow10(-prec);
        long N = std::max<long>(8, prec);
        Rational sum(0);
        for (long n = 1; n < N; ++n)
            sum += make_rational(Integer(1), int_pow(Integer(n), s));
        Rational Ns = Rational(int_pow(Integer(N), s));  // N^s
        sum += Rational(1) / (Rational(s - 1) * Rational(int_pow(Integer(N), s - 1)));
        sum += Rational(1) / (Rational(2) * Ns);
        Rational pw = Rational(1) / (Ns * Rational(N));  // N^{-s-2j+1} at j=1
        Rational rising(s);  // (s)_{2j-1} = s(s+1)...(s+2j-2) at j=1
        Rational bound;
        for (int j = 1;; ++j) {
            sum += bernoulli(2 * j) / Rational(factorial(2 * j)) * rising * pw;
            rising *= Rational(s + 2 * j - 1) * Rational(s + 2 * j);
            pw /= Rational(static_cast<long>(N) * N);
            bound = abs(bernoulli(2 * (j + 1)) / Rational(factorial(2 * (j + 1))) * rising * pw);
            if (bound < eps) break;
            if (j > 400) throw std::runtime_error("zeta_interval: no convergence");
        }
        result = {sum - bound, sum + bound};
    }
    std::lock_guard lock(cache_mu);
    zeta_cache.emplace(std::make_pair(s, prec), result);
    return result;
}

RatInterval eval_interval(const PiMonomial& m, long prec) {
    if (m.is_zero()) return RatInterval(Rational(0));
    RatInterval pi = pi_interval(prec + 6);
    RatInterval p = m.pi_exp >= 0 ? pi.pow(m.pi_exp)
                                  : RatInterval(Rational(1)) / pi.pow(-m.pi_exp);
    return p * RatInterval(m.coeff);
}

RatInterval eval_interval(const ZetaExpr& e, long prec) {
    if (e.divergent()) throw std::domain_error("divergent ZetaExpr");
    RatInterval total((Rational(0)));
    for (const auto& [args, coeff] : e.terms()) {
        RatInterval term((coeff));
        for (int a : args) term = term * zeta_interval(a, prec + 6);
        total = total + term;
    }
    return total;
}

namespace {

// round-half-even n/d to nearest integer, d > 0
Integer round_half_even(const Integer& n, const Integer& d) {
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    Integer twice = 2 * r;
    int cmp = mpz_cmp(twice.get_mpz_t(), d.get_mpz_t());
    if (cmp > 0 || (cmp == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;
    return q;
}

// decimal exponent E with 10^E <= |x| < 10^{E+1}; x != 0
long dec_exponent(const Rational& x) {
    Integer n = abs(Integer(x.get_num()));
    Integer d = Integer(x.get_den());
    long e = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 10));
    // sizeinbase may overestimate by one; fix up by comparison
    auto cmp_pow = [&](long k) {
        // compare |x| with 10^k
        if (k >= 0) return mpz_cmp((n).get_mpz_t(), Integer(d * int_pow(Integer(10), k)).get_mpz_t());
        return mpz_cmp(Integer(n * int_pow(Integer(10), -k)).get_mpz_t(), d.get_mpz_t());
    };
    while (cmp_pow(e) < 0) --e;
    while (cmp_pow(e + 1) >= 0) ++e;
    return e;
}

std::string format_mantissa(Integer mant, long E, int digits, bool neg) {
    std::string ds = mant.get_str();
    // rounding may push the mantissa to digits+1 characters (all-nines case)
    if (static_cast<int>(ds.size()) > digits) {
        ds.pop_back();
        ++E;
    }
    std::string out;
    if (E >= 0 && E < 12) {
        if (E + 1 >= static_cast<long>(ds.size()))
            out = ds + std::string(E + 1 - ds.size(), '0');
        else
            out = ds.substr(0, E + 1) + "." + ds.substr(E + 1);
    } else if (E < 0 && E > -7) {
        out = "0." + std::string(-E - 1, '0') + ds;
    } else {
        out = ds.substr(0, 1);
        if (ds.size() > 1) out += "." + ds.substr(1);
        out += "e" + std::to_string(E);
    }
    return neg ? "-" + out : out;
}

}  // namespace

std::string render_significant(const Rational& x, int digits) {
    if (digits < 1) throw std::invalid_argument("digits must be positive");
    if (x == 0) return "0";
    bool neg = sgn(x) < 0;
    Rational ax = abs(x);
    long E = dec_exponent(ax);
    // mantissa = round(ax * 10^{digits-1-E})
    long shift = digits - 1 - E;
    Integer n = Integer(ax.get_num()), d = Integer(ax.get_den());
    if (shift >= 0)
        n *= int_pow(Integer(10), shift);
    else
        d *= int_pow(Integer(10), -shift);
    Integer mant = round_half_even(n, d);
    return format_mantissa(mant, E, digits, neg);
}

namespace {
// Shrink the enclosure until both ends agree on the rendered string.
template <typename F>
std::string certified_render(F make_interval, int digits) {
    for (long prec = digits + 10;; prec *= 2) {
        RatInterval iv = make_interval(prec);
        if (iv.lo == iv.hi) return render_significant(iv.lo, digits);
        std::string a = render_significant(iv.lo, digits);
        std::string b = render_significant(iv.hi, digits);
        if (a == b) return a;
        if (prec > 16L * (digits + 16))
            throw std::runtime_error("decimal rendering did not stabilize");
    }
}
}  // namespace

std::string decimal_string(const Rational& x, int digits) {
    return render_significant(x, digits);
}

std::string decimal_string(const PiMonomial& m, int digits) {
    if (m.is_zero()) return "0";
    return certified_render([&](long p) { return eval_interval(m, p); }, digits);
}

std::string zeta_numeric(int s, int digits) {
    if (s == 1) throw std::domain_error("zeta(1) diverges");
    if (s < 1) throw std::invalid_argument("zeta_numeric: s must be >= 2");
    return certified_render([&](long p) { return zeta_interval(s, p); }, digits);
}

ZetaEvalResult evaluate_zeta_expr(const ZetaExpr& e, int digits) {
    if (e.divergent()) return {true, ""};
    if (e.is_zero()) return {false, "0"};
    return {false,
            certified_render([&](long p) { return eval_interval(e, p); }, digits)};
}

}  // namespace mvv
