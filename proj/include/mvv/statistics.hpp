#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mvv/pi_monomial.hpp"
#include "mvv/stable_graph.hpp"
#include "mvv/zeta.hpp"

namespace mvv {

// Per-k probabilities that a random square-tiled surface in Q_{g,n} has
// exactly k maximal horizontal cylinders.
struct CylinderDistribution {
    int g = 0, n = 0;
    std::vector<std::pair<int, Rational>> p;  // (k, p_k), p_k sums to 1
};
CylinderDistribution cylinder_distribution(int g, int n);

// Asymptotic expectation of a monomial moment prod b_i^{delta_i} (delta may
// have negative entries, e.g. b_1/b_2) over square-tiled surfaces of type
// Gamma, optionally with the cylinder heights H fixed.
struct ExpectationQuery {
    StableGraph graph;
    std::vector<int> moment_delta;        // per-edge exponent shift
    std::optional<std::vector<long>> heights;
};

struct ExpectationResult {
    bool divergent = false;   // zeta(1) in the numerator (value +infinity)
    bool fixed_heights = false;
    Rational rational_value;  // set when heights were fixed
    ZetaExpr numerator, denominator;  // set when heights were summed
    std::string decimal(int digits) const;  // "DIVERGENT" when divergent
};
ExpectationResult expectation(const ExpectationQuery& q);

// Lemma value for one-cylinder surfaces: P(H_1 = 1) = 1/zeta(6g-6+2n).
struct HeightOneResult {
    PiMonomial exact;     // 1/zeta(d) as rational * pi^{-d}
    std::string decimal;
};
HeightOneResult height_one_probability(int g, int n, int digits = 12);

// P(all heights <= bound | Gamma): sum_{H in {1..B}^k} Y(H)(P) / Z(P).
struct HeightProbability {
    Rational numerator;       // the finite height sum
    ZetaExpr denominator;     // Z(P_Gamma)
    std::optional<PiMonomial> exact() const;  // denominator is even-arg here
    std::string decimal(int digits) const;
};
HeightProbability bounded_height_probability(const StableGraph& G, long bound);

}  // namespace mvv
