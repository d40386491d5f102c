#pragma once

#include <vector>

#include "mvv/pi_monomial.hpp"
#include "mvv/polynomial.hpp"
#include "mvv/stable_graph.hpp"

namespace mvv {

// sum_e chi(e) b_e dP/db_e |_{b_e=0}, chi = 1/2 on bridges, 1 otherwise.
CylPolynomial d_gamma(const GraphShape& shape, const CylPolynomial& P);

enum class SvMethod { direct, boundary };

struct SvBoundaryTerm {
    enum class Kind { separating, pole_triple, nonseparating } kind;
    int g1 = 0, n1 = 0, g2 = 0, n2 = 0;  // separating splittings only
    PiMonomial value;
};

struct SiegelVeechResult {
    Rational carea_pi23;   // (pi^2/3) * c_area, exact
    SvMethod method;
    PiMonomial numerator;  // the pi^{d-2} sum the method divides by Vol
    PiMonomial volume;
    std::vector<SvBoundaryTerm> boundary_terms;  // boundary method only
};

// (3/pi^2) sum_Gamma Z(d_Gamma P_Gamma) / Vol, reported as pi^2/3 * c_area.
// Requires 2g+n > 3.
SiegelVeechResult carea_direct(int g, int n);

// Goujard's principal-boundary formula; the (0,3) cross term uses the
// conventions Vol Q_{0,3} = 4, Vol Q_{1,1} = 2 pi^2/3 and the limit value
// 1/2 for (d_i-1)!/l_i! at (0,3).
SiegelVeechResult carea_boundary(int g, int n);

// (Lambda^+, Lambda^-) = ((5g-5-n)/18 + pi^2/3 c_area, ... + (g-1+n)/3).
std::pair<Rational, Rational> lyapunov_sums(int g, int n);

}  // namespace mvv
