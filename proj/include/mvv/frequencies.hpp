#pragma once

#include <utility>
#include <vector>

#include "mvv/pi_monomial.hpp"
#include "mvv/stable_graph.hpp"

namespace mvv {

// Mirzakhani frequency of the multicurve encoded by (Gamma, H):
//   c(gamma) = Vol(Gamma, H) / (2 (6g-6+2n) (4g-4+n)! 2^{4g-3+n})
// with Vol(Gamma, H) = Y(H)(P_Gamma). The pair (2,0) is exceptional (the
// hyperelliptic involution halves the zero labelings); absolute values for
// it carry the flag and follow Mirzakhani's own normalization, ratios are
// safe either way.
struct FrequencyReport {
    Rational c_gamma;
    Rational c_tilde;  // c / 2^{2g-3+n}
    bool exceptional_normalization = false;
};
FrequencyReport multicurve_frequency(const StableGraph& G,
                                     const std::vector<long>& H);

// Average Thurston-ball volume b_{g,n} = Vol Q_{g,n} / (2 d (4g-4+n)! 2^{4g-3+n}).
struct BgnResult {
    PiMonomial value;
    bool exceptional_normalization = false;  // (2,0)
};
BgnResult b_gn(int g, int n);

// sum_{g1 <= g/2} Vol(Delta(g1, g-g1)) / Vol(Gamma_1(g)): the frequency of
// separating simple closed geodesics relative to non-separating ones. The
// normalization constant cancels, so g = 2 is fine here.
Rational sep_nonsep_ratio(int g);

// Frequencies of the two topological types of simple closed curves on the
// six-punctured sphere: (3+3 split, 2+4 split), normalized to sum 1.
std::pair<Rational, Rational> six_punctured_sphere_split();

}  // namespace mvv
