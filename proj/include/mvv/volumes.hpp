#pragma once

#include <map>
#include <vector>

#include "mvv/pi_monomial.hpp"
#include "mvv/polynomial.hpp"
#include "mvv/stable_graph.hpp"
#include "mvv/zeta.hpp"

namespace mvv {

// Worker pool size used by the graph-sum assemblies (results do not depend
// on it; contributions are reduced in canonical order).
void set_worker_threads(int n);
int worker_threads();

// Kontsevich polynomial N_{g,n}(b_1..b_n): homogeneous of degree 6g-6+2n,
// even powers only, coefficients <psi^d>/(2^{5g-6+2n} d!).
CylPolynomial kontsevich_poly(int g, int n);

// P_Gamma in the edge variables (G.edges() order), including the global
// numeric prefactor, 1/2^{|V|-1} and 1/|Aut|. Legs enter as zero arguments.
// (0,3) has no polynomial (the volume convention handles it); requesting it
// throws std::invalid_argument.
CylPolynomial p_gamma(const StableGraph& G);
// Same with 1/|Aut*| (vertex maps may move legs); multiply z/y-images by
// G.labeling_multiplicity() to recover the labeled-class sum.
CylPolynomial p_gamma(const LegCountedGraph& G);

// Z: prod b_i^{m_i} -> prod m_i! zeta(m_i+1) over all declared variables
// (an exponent-0 variable contributes zeta(1), flagging divergence).
ZetaExpr z_op(const CylPolynomial& P);
// Exact variant; requires every zeta argument even (true for any P_Gamma).
PiMonomial z_op_pi(const CylPolynomial& P);

// Y(H): prod b_i^{m_i} -> prod m_i! / H_i^{m_i+1}
Rational y_op(const CylPolynomial& P, const std::vector<long>& H);

// Ztilde(x,H): prod b_i^{m_i} -> (m_1+...+m_k+k)! prod x_i^{m_i}/H_i^{m_i+1};
// the result is a density polynomial in x over the standard simplex.
CylPolynomial ztilde_op(const CylPolynomial& P, const std::vector<long>& H);
// integral over the standard simplex: prod x^m dx -> prod m_i!/(sum m+k)!
Rational simplex_integral(const CylPolynomial& xpoly);

struct VolumeResult {
    PiMonomial total;
    std::map<int, PiMonomial> by_cylinder_count;  // k = |E(Gamma)| -> sum
};

// Masur-Veech volume of Q_{g,n} as sum over stable graphs (leg-collapsed
// pipeline). Conventions: Vol Q_{0,3} = 4 (recorded under k = 0);
// (1,1) flows through the generic pipeline. Cached per (g,n).
const VolumeResult& masur_veech_volume(int g, int n);
PiMonomial cached_volume(int g, int n);

struct GraphContribution {
    StableGraph graph;
    Integer aut;
    CylPolynomial polynomial;  // P_Gamma
    PiMonomial volume;         // Z(P_Gamma)
    int cylinder_count = 0;
};
// Labeled per-graph ledger in enumeration order (desk-scale n only).
std::vector<GraphContribution> volume_by_graph(int g, int n);

}  // namespace mvv
