#pragma once

#include <string>
#include <vector>

#include "mvv/pi_monomial.hpp"
#include "mvv/rational.hpp"

namespace mvv {

// Normalized 2-correlators a_{g,k}, k = 0..3g-1:
//   a_{g,k} = (2k+1)!! (6g-1-2k)!!/(6g-1)!! 24^g g! <tau_k tau_{3g-1-k}>_g,
// built from a_{g,0} = 1 by the three-case difference recursion and extended
// by the symmetry a_{g,k} = a_{g,3g-1-k}.
struct TwoCorrelatorRow {
    int g = 0;
    std::vector<Rational> a;  // size 3g
};
TwoCorrelatorRow a_gk_row(int g);

// R(g,j) = C(3g,3j) C(g,j) / C(6g,6j)
Rational r_gj(int g, int j);

// Contribution of the one-loop graph Gamma_1(g) (one vertex of genus g-1) to
// Vol Q_{g,0}, via the a_{g-1,k} row; exact rational times zeta(6g-6).
Rational vol_gamma1_zeta_coeff(int g);  // g >= 2
PiMonomial vol_gamma1(int g);

// Contribution of the two-vertex one-edge graph Delta(g1,g2), g1,g2 >= 1:
//   4 zeta(6g-6)/|Aut| C(4g-4,g) 12^-g C(g,g1) C(3g-4,3g1-2).
Rational vol_delta_zeta_coeff(int g1, int g2);
PiMonomial vol_delta(int g1, int g2);

// S(g) = sum_{g1=1}^{g-1} C(g,g1) C(3g-4,3g1-2), directly and through the
// second-order (Zeilberger) recurrence.
Integer s_g(int g);
Integer s_g_recurrence(int g);

// CSV "g,k,num,den" rows for g = 1..gmax
std::string a_gk_csv(int gmax);

}  // namespace mvv
