#include "mvv/frequencies.hpp"

#include <stdexcept>

#include "mvv/asymptotics.hpp"
#include "mvv/volumes.hpp"

namespace mvv {

namespace {
Rational normalization_constant(int g, int n) {
    // 2 (6g-6+2n) (4g-4+n)! 2^{4g-3+n}
    return Rational(2) * Rational(6L * g - 6 + 2 * n) *
           Rational(factorial(4L * g - 4 + n)) *
           Rational(int_pow(Integer(2), 4L * g - 3 + n));
}
}  // namespace

FrequencyReport multicurve_frequency(const StableGraph& G,
                                     const std::vector<long>& H) {
    const int g = G.genus, n = G.num_legs;
    if (2 * g + n <= 3)
        throw std::invalid_argument("multicurve frequency requires 2g+n > 3");
    FrequencyReport rep;
    rep.exceptional_normalization = (g == 2 && n == 0);
    Rational vol_gh = y_op(p_gamma(G), H);
    rep.c_gamma = vol_gh / normalization_constant(g, n);
    rep.c_tilde = rep.c_gamma / Rational(int_pow(Integer(2), 2L * g - 3 + n));
    return rep;
}

BgnResult b_gn(int g, int n) {
    if (2 * g + n <= 3)
        throw std::invalid_argument("b_gn requires 2g+n > 3");
    BgnResult r;
    r.exceptional_normalization = (g == 2 && n == 0);
    r.value = cached_volume(g, n) / normalization_constant(g, n);
    return r;
}

Rational sep_nonsep_ratio(int g) {
    if (g < 2) throw std::invalid_argument("sep_nonsep_ratio requires g >= 2");
    Rational num(0);
    for (int g1 = 1; 2 * g1 <= g; ++g1)
        num += vol_delta_zeta_coeff(g1, g - g1);
    return num / vol_gamma1_zeta_coeff(g);
}

std::pair<Rational, Rational> six_punctured_sphere_split() {
    PiMonomial split33, split24;
    for (const auto& G : enumerate_stable_graphs(0, 6)) {
        if (G.num_edges() != 1) continue;
        PiMonomial v = z_op_pi(p_gamma(G));
        // the two endpoint components carry 3+3 or 2+4 of the punctures
        std::size_t small = std::min(G.legs[0].size(), G.legs[1].size());
        if (small == 3)
            split33 += v;
        else
            split24 += v;
    }
    PiMonomial total = split33 + split24;
    return {split33.coeff / total.coeff, split24.coeff / total.coeff};
}

}  // namespace mvv
