#include <doctest.h>

#include <random>

#include "mvv/decimal.hpp"
#include "mvv/volumes.hpp"
#include "test_util.hpp"

using namespace mvv;
using mvvtest::R;
using mvvtest::find_graph;
using mvvtest::loop_count;

TEST_CASE("Kontsevich polynomials for small (g,n)") {
    CylPolynomial n03 = kontsevich_poly(0, 3);
    CHECK(n03.terms().size() == 1);
    CHECK(n03.terms().at({0, 0, 0}) == R(1));

    CylPolynomial n04 = kontsevich_poly(0, 4);
    CHECK(n04.terms().size() == 4);
    CHECK(n04.terms().at({2, 0, 0, 0}) == R(1, 4));
    CHECK(n04.terms().at({0, 0, 0, 2}) == R(1, 4));

    CylPolynomial n11 = kontsevich_poly(1, 1);
    CHECK(n11.terms().size() == 1);
    CHECK(n11.terms().at({2}) == R(1, 48));

    // N_{1,2} = (b1^2+b2^2)^2/384
    CylPolynomial n12 = kontsevich_poly(1, 2);
    CHECK(n12.terms().at({4, 0}) == R(1, 384));
    CHECK(n12.terms().at({2, 2}) == R(1, 192));
    CHECK(n12.terms().at({0, 4}) == R(1, 384));

    CHECK_THROWS_AS(kontsevich_poly(0, 2), std::invalid_argument);
}

TEST_CASE("P_Gamma for the (2,0) table graphs") {
    auto graphs = enumerate_stable_graphs(2, 0);
    const auto& gamma1 = find_graph(graphs, [](const StableGraph& G) {
        return G.vertex_count() == 1 && G.shape.genus[0] == 1;
    });
    CylPolynomial p1 = p_gamma(gamma1);
    CHECK(p1.terms().size() == 1);
    CHECK(p1.terms().at({5}) == R(2, 15));

    const auto& dumbbell = find_graph(graphs, [](const StableGraph& G) {
        return G.vertex_count() == 2 && loop_count(G) == 2;
    });
    CylPolynomial pd = p_gamma(dumbbell);
    CHECK(pd.terms().size() == 1);
    CHECK(pd.terms().at({1, 1, 1}) == R(8, 5));

    const auto& two_loops = find_graph(graphs, [](const StableGraph& G) {
        return G.vertex_count() == 1 && G.shape.genus[0] == 0;
    });
    CylPolynomial pl = p_gamma(two_loops);
    CHECK(pl.terms().at({3, 1}) + pl.terms().at({1, 3}) == R(16, 5));

    // the one-loop (1,2) graph: P = 8/3 b1^3
    auto g12 = enumerate_stable_graphs(1, 2);
    const auto& loop12 = find_graph(g12, [](const StableGraph& G) {
        return G.vertex_count() == 1 && G.num_edges() == 1;
    });
    CylPolynomial p12 = p_gamma(loop12);
    CHECK(p12.terms().size() == 1);
    CHECK(p12.terms().at({3}) == R(8, 3));

    CHECK_THROWS_AS(p_gamma(enumerate_stable_graphs(0, 3)[0]),
                    std::invalid_argument);
}

TEST_CASE("Z operator examples") {
    CylPolynomial p = CylPolynomial::monomial({5}, R(2, 15));
    CHECK(z_op_pi(p) == PiMonomial(R(16, 945), 6));

    CylPolynomial q(2);
    q.add_term({3, 1}, R(8, 5));
    q.add_term({1, 3}, R(8, 5));
    CHECK(z_op_pi(q) == PiMonomial(R(8, 225), 6));

    CHECK(z_op_pi(CylPolynomial::constant(0, R(7, 2))) == PiMonomial(R(7, 2), 0));

    // z_op on an exponent-0 variable yields zeta(1)
    CylPolynomial r = CylPolynomial::monomial({0, 4}, R(1));
    ZetaExpr e = z_op(r);
    CHECK(e.divergent());
    CHECK(e.terms().at({1, 5}) == R(24));

    CHECK_THROWS_AS(z_op_pi(r), std::domain_error);
}

TEST_CASE("Y operator examples") {
    CHECK(y_op(CylPolynomial::monomial({5}, R(2, 15)), {1}) == R(16));
    CHECK(y_op(CylPolynomial::monomial({1, 1}, R(1)), {2, 3}) == R(1, 36));
    CHECK_THROWS_AS(y_op(CylPolynomial::monomial({1, 1}, R(1)), {2}),
                    std::invalid_argument);
}

TEST_CASE("Ztilde operator and simplex integration") {
    CylPolynomial b1 = CylPolynomial::monomial({1}, R(1));
    CylPolynomial zt = ztilde_op(b1, {1});
    CHECK(zt.terms().size() == 1);
    CHECK(zt.terms().at({1}) == R(2));            // 2! x1
    CHECK(simplex_integral(zt) == y_op(b1, {1}));  // = 1

    // simplex moment: int x1^2 x2^2 dx = 2!2!/6!
    CHECK(simplex_integral(CylPolynomial::monomial({2, 2}, R(1))) == R(4, 720));

    // integral of Ztilde recovers Y on random polynomials
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> expo(0, 4), coef(-5, 5), hdist(1, 4);
    for (int trial = 0; trial < 50; ++trial) {
        CylPolynomial p(3);
        for (int t = 0; t < 4; ++t)
            p.add_term({expo(rng), expo(rng), expo(rng)}, R(coef(rng), 1 + expo(rng)));
        std::vector<long> H{hdist(rng), hdist(rng), hdist(rng)};
        CHECK(simplex_integral(ztilde_op(p, H)) == y_op(p, H));
    }
}

TEST_CASE("Vol Q_{2,0} with the six table contributions") {
    const VolumeResult& vol = masur_veech_volume(2, 0);
    CHECK(vol.total == PiMonomial(R(1, 15), 6));

    std::multiset<std::string> contributions;
    for (const auto& gc : volume_by_graph(2, 0))
        contributions.insert(to_string(gc.volume.coeff));
    std::multiset<std::string> expected{"16/945", "1/2835", "8/225",
                                        "1/675",  "1/135",  "2/405"};
    CHECK(contributions == expected);

    CHECK(vol.by_cylinder_count.at(1) == PiMonomial(R(7, 405), 6));
    CHECK(vol.by_cylinder_count.at(2) == PiMonomial(R(1, 27), 6));
    CHECK(vol.by_cylinder_count.at(3) == PiMonomial(R(1, 81), 6));
}

TEST_CASE("Vol Q_{1,2} with the four table contributions") {
    CHECK(cached_volume(1, 2) == PiMonomial(R(1, 3), 4));
    std::multiset<std::string> contributions;
    for (const auto& gc : volume_by_graph(1, 2))
        contributions.insert(to_string(gc.volume.coeff));
    std::multiset<std::string> expected{"8/45", "1/135", "2/27", "2/27"};
    CHECK(contributions == expected);
}

TEST_CASE("volume conventions and genus 0") {
    CHECK(cached_volume(0, 3) == PiMonomial(R(4), 0));
    CHECK(cached_volume(1, 1) == PiMonomial(R(2, 3), 2));
    for (int n = 4; n <= 8; ++n) {
        PiMonomial expect(pow_rational(R(2), 5 - n), 2 * n - 6);
        CHECK(cached_volume(0, n) == expect);
    }
    CHECK_THROWS_AS(masur_veech_volume(0, 2), std::invalid_argument);
}

TEST_CASE("volume table spot values") {
    CHECK(cached_volume(1, 3) == PiMonomial(R(11, 60), 6));
    CHECK(cached_volume(2, 1) == PiMonomial(R(29, 840), 8));
    CHECK(cached_volume(3, 0) == PiMonomial(R(115, 33264), 12));
}

TEST_CASE("P_Gamma structural invariants") {
    for (auto [g, n] : {std::pair{2, 0}, {1, 2}, {0, 5}, {1, 3}, {2, 1}}) {
        for (const auto& G : enumerate_leg_counted_graphs(g, n)) {
            CylPolynomial P = p_gamma(G);
            if (P.is_zero()) continue;
            CHECK(P.all_exponents_odd());
            CHECK(P.homogeneous_degree() == 6 * g - 6 + 2 * n - G.num_edges());
            PiMonomial v = z_op_pi(P);
            if (!v.is_zero()) CHECK(v.pi_exp == 6 * g - 6 + 2 * n);
        }
    }
}

TEST_CASE("labeled and collapsed pipelines agree") {
    for (auto [g, n] : {std::pair{1, 2}, {0, 5}, {0, 6}, {1, 3}, {2, 1}, {1, 4}}) {
        PiMonomial labeled;
        for (const auto& gc : volume_by_graph(g, n)) labeled += gc.volume;
        CHECK(labeled == cached_volume(g, n));
    }
}

TEST_CASE("height partial sums increase to Z") {
    auto graphs = enumerate_stable_graphs(2, 0);
    const auto& two_loops = find_graph(graphs, [](const StableGraph& G) {
        return G.vertex_count() == 1 && G.shape.genus[0] == 0;
    });
    CylPolynomial P = p_gamma(two_loops);
    PiMonomial z = z_op_pi(P);
    Rational prev(0);
    for (long B = 1; B <= 5; ++B) {
        Rational sum(0);
        for (long h1 = 1; h1 <= B; ++h1)
            for (long h2 = 1; h2 <= B; ++h2) sum += y_op(P, {h1, h2});
        CHECK(sum > prev);
        prev = sum;
    }
    // the partial sums stay below the exact value (z evaluated numerically)
    RatInterval ziv = eval_interval(z, 30);
    CHECK(prev < ziv.lo);
}
