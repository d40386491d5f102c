#include "mvv/siegel_veech.hpp"

#include <stdexcept>

#include "mvv/volumes.hpp"

namespace mvv {

CylPolynomial d_gamma(const GraphShape& shape, const CylPolynomial& P) {
    auto edges = edge_list(shape);
    if (static_cast<int>(edges.size()) != P.nvars())
        throw std::invalid_argument("d_gamma: polynomial does not match the graph");
    CylPolynomial out(P.nvars());
    for (int ei = 0; ei < P.nvars(); ++ei) {
        Rational chi = is_bridge(shape, edges[ei]) ? make_rational(1, 2) : Rational(1);
        // b_e * dP/db_e at b_e = 0 keeps exactly the terms linear in b_e
        for (const auto& [e, c] : P.terms())
            if (e[ei] == 1) out.add_term(e, chi * c);
    }
    return out;
}

namespace {
void check_sv_pair(int g, int n) {
    if (g < 0 || n < 0 || 2 * g + n <= 3)
        throw std::invalid_argument("Siegel-Veech constant requires 2g+n > 3");
}
}  // namespace

SiegelVeechResult carea_direct(int g, int n) {
    check_sv_pair(g, n);
    SiegelVeechResult res;
    res.method = SvMethod::direct;
    res.volume = cached_volume(g, n);
    auto classes = enumerate_leg_counted_graphs(g, n);
    PiMonomial num;
    for (const auto& G : classes) {
        CylPolynomial dp = d_gamma(G.shape, p_gamma(G));
        if (dp.is_zero()) continue;
        num += z_op_pi(dp) * G.labeling_multiplicity();
    }
    res.numerator = num;
    if (!num.is_zero() && num.pi_exp != 6 * g - 6 + 2 * n)
        throw std::logic_error("carea numerator with wrong pi power");
    // c_area Vol = (3/pi^2) sum, so (pi^2/3) c_area = sum / Vol coefficientwise
    res.carea_pi23 = num.coeff / res.volume.coeff;
    return res;
}

SiegelVeechResult carea_boundary(int g, int n) {
    check_sv_pair(g, n);
    SiegelVeechResult res;
    res.method = SvMethod::boundary;
    res.volume = cached_volume(g, n);
    const int d = 6 * g - 6 + 2 * n;
    const long l = 4L * g - 4 + n;
    PiMonomial total;

    auto vol = [](int gg, int nn) { return cached_volume(gg, nn); };

    if (g >= 1) {
        for (int g1 = 0; g1 <= g; ++g1) {
            for (int n1 = 1; n1 <= n + 1; ++n1) {
                const int g2 = g - g1, n2 = n + 2 - n1;
                if (n2 < 1) continue;
                const long d1 = 6L * g1 - 6 + 2 * n1, d2 = 6L * g2 - 6 + 2 * n2;
                if (d1 < 1 || d2 < 1) continue;
                const long l1 = 4L * g1 - 4 + n1, l2 = 4L * g2 - 4 + n2;
                Rational coef = make_rational(1, 8);
                coef *= Rational(factorial(l)) / Rational(factorial(l1) * factorial(l2));
                coef *= Rational(factorial(n)) /
                        Rational(factorial(n1 - 1) * factorial(n2 - 1));
                coef *= Rational(factorial(d1 - 1) * factorial(d2 - 1)) /
                        Rational(factorial(d - 1));
                PiMonomial term = vol(g1, n1) * vol(g2, n2) * coef;
                if (term.is_zero()) continue;
                total += term;
                res.boundary_terms.push_back(
                    {SvBoundaryTerm::Kind::separating, g1, n1, g2, n2, term});
            }
        }
        if (n >= 2) {
            Rational coef = make_rational(1, 16);
            coef *= make_rational(Integer((4L * g - 4 + n) * n * (n - 1)),
                                  Integer((6L * g - 7 + 2 * n) * (6L * g - 8 + 2 * n)));
            PiMonomial term = vol(0, 3) * vol(g, n - 1) * coef;
            if (!term.is_zero()) {
                total += term;
                res.boundary_terms.push_back(
                    {SvBoundaryTerm::Kind::pole_triple, 0, 3, g, n - 1, term});
            }
        }
        {
            Rational coef = Rational(factorial(l)) / Rational(factorial(l - 2));
            coef *= Rational(factorial(d - 3)) / Rational(factorial(d - 1));
            PiMonomial term = vol(g - 1, n + 2) * coef;
            total += term;
            res.boundary_terms.push_back(
                {SvBoundaryTerm::Kind::nonseparating, g - 1, n + 2, 0, 0, term});
        }
    } else {
        for (int n1 = 4; n1 <= n - 2; ++n1) {
            const int n2 = n + 2 - n1;
            if (n2 < 4) continue;
            Rational coef = make_rational(1, 8);
            coef *= Rational(factorial(n - 4)) /
                    Rational(factorial(n1 - 4) * factorial(n2 - 4));
            coef *= Rational(factorial(n)) /
                    Rational(factorial(n1 - 1) * factorial(n2 - 1));
            coef *= Rational(factorial(2L * n1 - 7) * factorial(2L * n2 - 7)) /
                    Rational(factorial(2L * n - 7));
            PiMonomial term = vol(0, n1) * vol(0, n2) * coef;
            if (term.is_zero()) continue;
            total += term;
            res.boundary_terms.push_back(
                {SvBoundaryTerm::Kind::separating, 0, n1, 0, n2, term});
        }
        {
            Rational coef = make_rational(1, 16);
            coef *= make_rational(Integer((n - 4L) * n * (n - 1)),
                                  Integer((2L * n - 7) * (2L * n - 8)));
            PiMonomial term = vol(0, 3) * vol(0, n - 1) * coef;
            if (!term.is_zero()) {
                total += term;
                res.boundary_terms.push_back(
                    {SvBoundaryTerm::Kind::pole_triple, 0, 3, 0, n - 1, term});
            }
        }
    }
    res.numerator = total;
    if (!total.is_zero() && total.pi_exp != d - 2)
        throw std::logic_error("boundary sum with wrong pi power");
    // c_area Vol = total * pi^{d-2}; Vol = coeff * pi^d
    // => (pi^2/3) c_area = total_coeff / (3 Vol_coeff)
    res.carea_pi23 = total.coeff / (Rational(3) * res.volume.coeff);
    return res;
}

std::pair<Rational, Rational> lyapunov_sums(int g, int n) {
    Rational r = carea_direct(g, n).carea_pi23;
    Rational lp = make_rational(5L * g - 5 - n, 18) + r;
    Rational lm = lp + make_rational(g - 1L + n, 3);
    return {lp, lm};
}

}  // namespace mvv
