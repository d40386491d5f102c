#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "mvv/stable_graph.hpp"
#include "test_util.hpp"

using namespace mvv;
using mvvtest::find_graph;
using mvvtest::loop_count;

namespace {

// Brute-force oracle: enumerate raw decorated multigraphs with labeled legs
// over all vertex counts/matrices/assignments and classify them by pairwise
// isomorphism testing over all vertex permutations. Completely independent
// of the canonical-encoding path.
struct RawGraph {
    std::vector<int> genus;
    std::vector<std::vector<int>> mult;
    std::vector<std::vector<int>> legs;  // sorted labels
};

bool raw_connected(const RawGraph& G) {
    int m = static_cast<int>(G.genus.size());
    std::vector<char> seen(m, 0);
    std::vector<int> st{0};
    seen[0] = 1;
    int cnt = 1;
    while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        for (int u = 0; u < m; ++u)
            if (u != v && G.mult[v][u] && !seen[u]) seen[u] = 1, ++cnt, st.push_back(u);
    }
    return cnt == m;
}

bool raw_isomorphic(const RawGraph& A, const RawGraph& B) {
    int m = static_cast<int>(A.genus.size());
    if (static_cast<int>(B.genus.size()) != m) return false;
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int v = 0; v < m && ok; ++v)
            ok = A.genus[v] == B.genus[perm[v]] && A.legs[v] == B.legs[perm[v]];
        for (int v = 0; v < m && ok; ++v)
            for (int u = 0; u < m && ok; ++u)
                ok = A.mult[v][u] == B.mult[perm[v]][perm[u]];
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

long raw_aut_order(const RawGraph& A) {
    int m = static_cast<int>(A.genus.size());
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    long vertex_autos = 0;
    do {
        bool ok = true;
        for (int v = 0; v < m && ok; ++v)
            ok = A.genus[v] == A.genus[perm[v]] && A.legs[v] == A.legs[perm[v]];
        for (int v = 0; v < m && ok; ++v)
            for (int u = 0; u < m && ok; ++u)
                ok = A.mult[v][u] == A.mult[perm[v]][perm[u]];
        if (ok) ++vertex_autos;
    } while (std::next_permutation(perm.begin(), perm.end()));
    long he = 1;
    for (int v = 0; v < m; ++v) {
        for (int i = 0; i < A.mult[v][v]; ++i) he *= 2 * (i + 1);
        for (int u = v + 1; u < m; ++u)
            for (int i = 2; i <= A.mult[v][u]; ++i) he *= i;
    }
    return vertex_autos * he;
}

std::vector<RawGraph> brute_force_classes(int g, int n) {
    std::vector<RawGraph> classes;
    int maxm = std::max(1, 2 * g - 2 + n);
    for (int m = 1; m <= maxm; ++m) {
        // all genus vectors (unsorted on purpose)
        std::vector<int> gv(m, 0);
        std::function<void(int)> genus_rec = [&](int pos) {
            if (pos == m) {
                int s = std::accumulate(gv.begin(), gv.end(), 0);
                if (s > g) return;
                int E = m - 1 + (g - s);
                if (E < 0 || (E == 0 && m > 1)) return;
                if (E == 0 && 2 * g + n != 3) return;  // edgeless policy
                // all symmetric matrices with total edge count E
                std::vector<std::pair<int, int>> slots;
                for (int v = 0; v < m; ++v)
                    for (int u = v; u < m; ++u) slots.emplace_back(v, u);
                std::vector<int> fill(slots.size(), 0);
                std::function<void(std::size_t, int)> mat_rec = [&](std::size_t si,
                                                                    int left) {
                    if (si == slots.size()) {
                        if (left != 0) return;
                        RawGraph G;
                        G.genus = gv;
                        G.mult.assign(m, std::vector<int>(m, 0));
                        for (std::size_t i = 0; i < slots.size(); ++i) {
                            auto [v, u] = slots[i];
                            G.mult[v][u] += fill[i];
                            if (u != v) G.mult[u][v] += fill[i];
                        }
                        if (!raw_connected(G)) return;
                        // distribute labeled legs
                        std::vector<int> assign(n, 0);
                        std::function<void(int)> leg_rec = [&](int li) {
                            if (li == n) {
                                RawGraph H = G;
                                H.legs.assign(m, {});
                                for (int i = 0; i < n; ++i)
                                    H.legs[assign[i]].push_back(i + 1);
                                for (int v = 0; v < m; ++v) {
                                    int slots_v = 2 * H.mult[v][v];
                                    for (int u = 0; u < m; ++u)
                                        if (u != v) slots_v += H.mult[v][u];
                                    if (2 * H.genus[v] - 2 + slots_v +
                                            static_cast<int>(H.legs[v].size()) <=
                                        0)
                                        return;
                                }
                                for (const RawGraph& C : classes)
                                    if (raw_isomorphic(H, C)) return;
                                classes.push_back(std::move(H));
                                return;
                            }
                            for (int v = 0; v < m; ++v) {
                                assign[li] = v;
                                leg_rec(li + 1);
                            }
                        };
                        leg_rec(0);
                    } else {
                        for (int x = 0; x <= left; ++x) {
                            fill[si] = x;
                            mat_rec(si + 1, left - x);
                        }
                        fill[si] = 0;
                    }
                };
                mat_rec(0, E);
            } else {
                for (int x = 0; x <= g; ++x) {
                    gv[pos] = x;
                    genus_rec(pos + 1);
                }
            }
        };
        genus_rec(0);
    }
    return classes;
}

}  // namespace

TEST_CASE("isomorphism class counts") {
    CHECK(enumerate_stable_graphs(2, 0).size() == 6);
    CHECK(enumerate_stable_graphs(3, 0).size() == 41);
    CHECK(enumerate_stable_graphs(1, 2).size() == 4);
    CHECK(enumerate_stable_graphs(0, 3).size() == 1);
    CHECK(enumerate_stable_graphs(1, 1).size() == 2);
    CHECK(enumerate_stable_graphs(0, 4).size() == 4);
    CHECK(enumerate_stable_graphs(0, 5).size() == 26);
    CHECK_THROWS_AS(enumerate_stable_graphs(0, 2), std::invalid_argument);
}

TEST_CASE("brute-force oracle: counts and aut orders") {
    for (auto [g, n] : {std::pair{0, 4}, {0, 5}, {1, 1}, {1, 2}, {2, 0}}) {
        auto fast = enumerate_stable_graphs(g, n);
        auto slow = brute_force_classes(g, n);
        REQUIRE(fast.size() == slow.size());
        std::multiset<long> fast_auts, slow_auts;
        for (const auto& G : fast)
            fast_auts.insert(aut_order(G).get_si());
        for (const auto& G : slow) slow_auts.insert(raw_aut_order(G));
        CHECK(fast_auts == slow_auts);
    }
}

TEST_CASE("automorphism orders from the (2,0) table") {
    auto graphs = enumerate_stable_graphs(2, 0);
    const auto& loop_g1 = find_graph(graphs, [](const StableGraph& G) {
        return G.vertex_count() == 1 && G.shape.genus[0] == 1;
    });
    CHECK(aut_order(loop_g1) == 2);
    const auto& theta = find_graph(graphs, [](const StableGraph& G) {
        return G.vertex_count() == 2 && G.num_edges() == 3 && loop_count(G) == 0;
    });
    CHECK(aut_order(theta) == 12);
    const auto& two_loops = find_graph(graphs, [](const StableGraph& G) {
        return G.vertex_count() == 1 && G.shape.genus[0] == 0;
    });
    CHECK(aut_order(two_loops) == 8);
    const auto& dumbbell = find_graph(graphs, [](const StableGraph& G) {
        return G.vertex_count() == 2 && loop_count(G) == 2;
    });
    CHECK(aut_order(dumbbell) == 8);
}

TEST_CASE("edgeless graph has trivial automorphism group") {
    for (auto [g, n] : {std::pair{0, 3}, {1, 1}}) {
        auto graphs = enumerate_stable_graphs(g, n);
        const auto& trivial = find_graph(
            graphs, [](const StableGraph& G) { return G.num_edges() == 0; });
        CHECK(aut_order(trivial) == 1);
    }
}

TEST_CASE("bridges") {
    GraphShape two_vertices{{0, 1}, {{0, 1}, {1, 0}}};
    CHECK(is_bridge(two_vertices, Edge{0, 1}));
    GraphShape loop{{1}, {{1}}};
    CHECK(!is_bridge(loop, Edge{0, 0}));
    GraphShape triple{{0, 0}, {{0, 3}, {3, 0}}};
    CHECK(!is_bridge(triple, Edge{0, 1}));
    // dumbbell: the middle edge separates, the loops never do
    GraphShape dumbbell{{0, 0}, {{1, 1}, {1, 1}}};
    CHECK(is_bridge(dumbbell, Edge{0, 1}));
    CHECK(!is_bridge(dumbbell, Edge{0, 0}));
}

TEST_CASE("canonical encoding identifies relabeled graphs") {
    // dumbbell with vertices written in both orders: same encoding
    StableGraph A;
    A.shape = {{0, 1}, {{1, 1}, {1, 1}}};
    A.legs = {{}, {}};
    A.genus = 2;
    A.num_legs = 0;
    StableGraph B;
    B.shape = {{1, 0}, {{1, 1}, {1, 1}}};
    B.legs = {{}, {}};
    B.genus = 2;
    B.num_legs = 0;
    CHECK(canonical_encoding(A) == canonical_encoding(B));

    auto g11 = enumerate_stable_graphs(1, 1);
    CHECK(canonical_encoding(g11[0]) != canonical_encoding(g11[1]));

    std::set<std::string> encodings;
    for (const auto& G : enumerate_stable_graphs(2, 0))
        encodings.insert(canonical_encoding(G));
    CHECK(encodings.size() == 6);
}

TEST_CASE("leg labels pin automorphisms") {
    // two genus-0 vertices joined by two parallel edges, one leg each:
    // only the edge swap survives
    StableGraph G;
    G.shape = {{0, 0}, {{0, 2}, {2, 0}}};
    G.legs = {{1}, {2}};
    G.genus = 1;
    G.num_legs = 2;
    CHECK(aut_order(G) == 2);
    LegCountedGraph C;
    C.shape = G.shape;
    C.leg_count = {1, 1};
    C.genus = 1;
    C.num_legs = 2;
    CHECK(aut_order(C) == 4);  // vertex swap allowed once labels collapse
}

TEST_CASE("half-edge view satisfies the formal structure") {
    for (auto [g, n] : {std::pair{1, 2}, {2, 0}, {0, 5}, {1, 3}}) {
        for (const auto& G : enumerate_stable_graphs(g, n)) {
            HalfEdgeView H = to_half_edges(G);
            const int total = static_cast<int>(H.involution.size());
            CHECK(total == 2 * G.num_edges() + n);
            std::set<int> labels;
            int genus_sum = 0;
            for (int v = 0; v < G.vertex_count(); ++v)
                genus_sum += G.shape.genus[v];
            for (int h = 0; h < total; ++h) {
                CHECK(H.involution[H.involution[h]] == h);  // involution
                if (H.involution[h] == h) {
                    CHECK(H.leg_label[h] >= 1);
                    labels.insert(H.leg_label[h]);
                } else {
                    CHECK(H.leg_label[h] == 0);
                }
                CHECK(H.attach[h] >= 0);
                CHECK(H.attach[h] < G.vertex_count());
            }
            CHECK(static_cast<int>(labels.size()) == n);
            if (n > 0) {
                CHECK(*labels.begin() == 1);
                CHECK(*labels.rbegin() == n);
            }
            // genus condition: g = h1 + sum g_v, h1 = E - V + 1
            int h1 = G.num_edges() - G.vertex_count() + 1;
            CHECK(g == h1 + genus_sum);
            // stability
            for (int v = 0; v < G.vertex_count(); ++v)
                CHECK(2 * G.shape.genus[v] - 2 + G.valence(v) > 0);
        }
    }
}

TEST_CASE("leg-counted enumeration matches labeled on small pairs") {
    // class counts differ, but the weighted counts must match:
    //   sum over labeled classes of 1/|Aut|
    //   = sum over collapsed classes of n!/(prod p! |Aut*|)
    for (auto [g, n] : {std::pair{1, 2}, {0, 5}, {0, 6}, {1, 3}, {2, 1}}) {
        Rational labeled(0);
        for (const auto& G : enumerate_stable_graphs(g, n))
            if (G.num_edges() > 0) labeled += Rational(1) / Rational(aut_order(G));
        Rational collapsed(0);
        for (const auto& G : enumerate_leg_counted_graphs(g, n))
            collapsed += G.labeling_multiplicity() / Rational(aut_order(G));
        CHECK(labeled == collapsed);
    }
}

TEST_CASE("DOT export shape") {
    auto graphs = enumerate_stable_graphs(1, 2);
    std::string dot = to_dot(graphs[0]);
    CHECK(dot.find("graph stable {") == 0);
    CHECK(dot.find("g=") != std::string::npos);
    CHECK(dot.find("--") != std::string::npos);
}

TEST_CASE("deterministic enumeration order") {
    auto a = enumerate_stable_graphs(2, 1);
    auto b = enumerate_stable_graphs(2, 1);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(canonical_encoding(a[i]) == canonical_encoding(b[i]));
}
