#include "mvv/stable_graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace mvv {

int GraphShape::edge_count() const {
    int e = 0;
    const int m = vertex_count();
    for (int v = 0; v < m; ++v) {
        e += mult[v][v];
        for (int u = v + 1; u < m; ++u) e += mult[v][u];
    }
    return e;
}

int GraphShape::edge_slots(int v) const {
    int s = 2 * mult[v][v];
    for (int u = 0; u < vertex_count(); ++u)
        if (u != v) s += mult[v][u];
    return s;
}

bool GraphShape::connected() const {
    const int m = vertex_count();
    if (m <= 1) return true;
    std::vector<char> seen(m, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int found = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < m; ++u) {
            if (u != v && mult[v][u] > 0 && !seen[u]) {
                seen[u] = 1;
                ++found;
                stack.push_back(u);
            }
        }
    }
    return found == m;
}

std::vector<Edge> edge_list(const GraphShape& shape) {
    std::vector<Edge> out;
    const int m = shape.vertex_count();
    for (int v = 0; v < m; ++v) {
        for (int c = 0; c < shape.mult[v][v]; ++c) out.push_back({v, v});
        for (int u = v + 1; u < m; ++u)
            for (int c = 0; c < shape.mult[v][u]; ++c) out.push_back({v, u});
    }
    return out;
}

bool is_bridge(const GraphShape& shape, Edge e) {
    if (e.u == e.v) return false;
    GraphShape cut = shape;
    if (cut.mult[e.u][e.v] <= 0) throw std::invalid_argument("no such edge");
    --cut.mult[e.u][e.v];
    --cut.mult[e.v][e.u];
    return !cut.connected();
}

Rational LegCountedGraph::labeling_multiplicity() const {
    Rational mult(factorial(num_legs));
    for (int p : leg_count) mult /= Rational(factorial(p));
    return mult;
}

namespace {

// ---- canonical form & automorphisms over decorated multigraphs ----
//
// Vertices carry a decoration vector (genus plus leg data). Colors are
// refined by neighborhood multisets until stable; the canonical order is
// found by branch-and-bound over class-respecting permutations, minimizing
// the row-by-row encoding.

using Decor = std::vector<int>;

struct Colored {
    const GraphShape* shape;
    std::vector<Decor> decor;
    std::vector<int> color;          // refined color id per vertex
    std::vector<std::vector<int>> classes;  // vertex ids per color, color-ordered
};

Colored refine(const GraphShape& shape, std::vector<Decor> decor) {
    const int m = shape.vertex_count();
    Colored c{&shape, std::move(decor), std::vector<int>(m, 0), {}};
    // initial signatures: decoration + (slots, loops)
    std::vector<std::vector<int>> sig(m);
    for (int v = 0; v < m; ++v) {
        sig[v] = c.decor[v];
        sig[v].push_back(shape.edge_slots(v));
        sig[v].push_back(shape.mult[v][v]);
    }
    auto assign = [&](const std::vector<std::vector<int>>& s) {
        std::vector<std::vector<int>> uniq(s.begin(), s.end());
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (int v = 0; v < m; ++v)
            c.color[v] = static_cast<int>(
                std::lower_bound(uniq.begin(), uniq.end(), s[v]) - uniq.begin());
        return static_cast<int>(uniq.size());
    };
    int ncolors = assign(sig);
    while (true) {
        std::vector<std::vector<int>> next(m);
        for (int v = 0; v < m; ++v) {
            next[v] = {c.color[v]};
            std::vector<std::pair<int, int>> nb;
            for (int u = 0; u < m; ++u)
                if (u != v && shape.mult[v][u] > 0)
                    nb.emplace_back(c.color[u], shape.mult[v][u]);
            std::sort(nb.begin(), nb.end());
            for (auto& [col, mu] : nb) {
                next[v].push_back(col);
                next[v].push_back(mu);
            }
        }
        int nc = assign(next);
        if (nc == ncolors) break;
        ncolors = nc;
    }
    c.classes.assign(ncolors, {});
    for (int v = 0; v < m; ++v) c.classes[c.color[v]].push_back(v);
    return c;
}

// row encoding of canonical position i given perm prefix
void encode_row(const Colored& c, const std::vector<int>& perm, int i,
                std::vector<int>& out) {
    out.clear();
    int v = perm[i];
    out.insert(out.end(), c.decor[v].begin(), c.decor[v].end());
    for (int j = 0; j <= i; ++j) out.push_back(c.shape->mult[v][perm[j]]);
}

struct CanonSearch {
    const Colored& c;
    int m;
    std::vector<int> pos_class;  // class id per canonical position
    std::vector<std::vector<int>> best;  // best rows
    std::vector<std::vector<int>> cur;
    std::vector<int> perm;
    std::vector<char> used;

    explicit CanonSearch(const Colored& cc) : c(cc), m(cc.shape->vertex_count()) {
        for (int cl = 0; cl < static_cast<int>(c.classes.size()); ++cl)
            for (std::size_t i = 0; i < c.classes[cl].size(); ++i)
                pos_class.push_back(cl);
        cur.resize(m);
        perm.assign(m, -1);
        used.assign(m, 0);
    }

    // cmp is the relation of cur[0..i-1] to the best known at branch time:
    // 0 = equal so far, -1 = strictly smaller somewhere. Replacing best can
    // make an in-flight 0/-1 stale, so leaves always do a full comparison;
    // pruning on "greater" stays valid because best only ever decreases.
    void rec(int i, int cmp) {
        if (i == m) {
            if (best.empty() || cur < best) best = cur;
            return;
        }
        for (int v : c.classes[pos_class[i]]) {
            if (used[v]) continue;
            perm[i] = v;
            encode_row(c, perm, i, cur[i]);
            int step = cmp;
            if (step == 0 && !best.empty()) {
                if (cur[i] < best[i])
                    step = -1;
                else if (best[i] < cur[i])
                    continue;  // prune
            }
            used[v] = 1;
            rec(i + 1, step);
            used[v] = 0;
        }
    }

    std::string run() {
        rec(0, 0);
        std::ostringstream os;
        os << m << "|";
        for (const auto& row : best) {
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (j) os << ",";
                os << row[j];
            }
            os << "|";
        }
        return os.str();
    }
};

std::string canon_string(const GraphShape& shape, std::vector<Decor> decor) {
    Colored c = refine(shape, std::move(decor));
    CanonSearch s(c);
    return s.run();
}

// #vertex permutations fixing decorations and the multiplicity matrix
Integer vertex_automorphisms(const GraphShape& shape, std::vector<Decor> decor) {
    Colored c = refine(shape, std::move(decor));
    const int m = shape.vertex_count();
    std::vector<int> image(m, -1);
    std::vector<char> used(m, 0);
    long count = 0;
    std::function<void(int)> rec = [&](int v) {
        if (v == m) {
            ++count;
            return;
        }
        for (int w : c.classes[c.color[v]]) {
            if (used[w]) continue;
            if (c.decor[w] != c.decor[v]) continue;
            if (shape.mult[w][w] != shape.mult[v][v]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (shape.mult[v][u] != shape.mult[w][image[u]]) ok = false;
            if (!ok) continue;
            image[v] = w;
            used[w] = 1;
            rec(v + 1);
            used[w] = 0;
        }
    };
    rec(0);
    return Integer(count);
}

Integer half_edge_factor(const GraphShape& shape) {
    Integer f(1);
    const int m = shape.vertex_count();
    for (int v = 0; v < m; ++v) {
        int l = shape.mult[v][v];
        f *= int_pow(Integer(2), l) * factorial(l);
        for (int u = v + 1; u < m; ++u) f *= factorial(shape.mult[v][u]);
    }
    return f;
}

std::vector<Decor> labeled_decor(const StableGraph& G) {
    std::vector<Decor> d(G.vertex_count());
    for (int v = 0; v < G.vertex_count(); ++v) {
        d[v] = {G.shape.genus[v], static_cast<int>(G.legs[v].size())};
        d[v].insert(d[v].end(), G.legs[v].begin(), G.legs[v].end());
    }
    return d;
}

std::vector<Decor> counted_decor(const LegCountedGraph& G) {
    std::vector<Decor> d(G.vertex_count());
    for (int v = 0; v < G.vertex_count(); ++v)
        d[v] = {G.shape.genus[v], G.leg_count[v]};
    return d;
}

}  // namespace

std::string canonical_encoding(const StableGraph& G) {
    return canon_string(G.shape, labeled_decor(G));
}

std::string canonical_encoding(const LegCountedGraph& G) {
    return canon_string(G.shape, counted_decor(G));
}

Integer aut_order(const StableGraph& G) {
    return vertex_automorphisms(G.shape, labeled_decor(G)) * half_edge_factor(G.shape);
}

Integer aut_order(const LegCountedGraph& G) {
    return vertex_automorphisms(G.shape, counted_decor(G)) * half_edge_factor(G.shape);
}

// ---------------- enumeration ----------------

namespace {

// nondecreasing genus tuples with given sum cap
void gen_genus(int m, int gmax, int pos, int minval, int remaining,
               std::vector<int>& gv, const std::function<void(int)>& emit) {
    if (pos == m) {
        emit(remaining);  // remaining = g - sum = h1
        return;
    }
    for (int x = minval; x <= remaining; ++x) {
        gv[pos] = x;
        gen_genus(m, gmax, pos + 1, x, remaining - x, gv, emit);
    }
}

// degree vectors, nondecreasing within runs of equal genus
void gen_degrees(const std::vector<int>& gv, int pos, int total,
                 std::vector<int>& kv, const std::function<void()>& emit) {
    const int m = static_cast<int>(gv.size());
    if (pos == m) {
        if (total == 0) emit();
        return;
    }
    int lo = 1;
    if (pos > 0 && gv[pos] == gv[pos - 1]) lo = std::max(lo, kv[pos - 1]);
    if (m == 1) lo = total;  // single vertex takes everything
    for (int k = lo; k <= total - (m - 1 - pos); ++k) {
        kv[pos] = k;
        gen_degrees(gv, pos + 1, total - k, kv, emit);
    }
}

// symmetric matrices with row slot sums kv (diagonal counts twice)
void gen_matrices(const std::vector<int>& kv, GraphShape& shape, int v, int u,
                  std::vector<int>& used, const std::function<void()>& emit) {
    const int m = static_cast<int>(kv.size());
    if (v == m) {
        if (shape.connected()) emit();
        return;
    }
    if (u == m) {
        if (used[v] == kv[v]) gen_matrices(kv, shape, v + 1, v + 1, used, emit);
        return;
    }
    int rem = kv[v] - used[v];
    if (rem < 0) return;
    if (u == v) {
        for (int x = 0; 2 * x <= rem; ++x) {
            shape.mult[v][v] = x;
            used[v] += 2 * x;
            gen_matrices(kv, shape, v, u + 1, used, emit);
            used[v] -= 2 * x;
        }
        shape.mult[v][v] = 0;
    } else {
        int cap = std::min(rem, kv[u] - used[u]);
        for (int x = 0; x <= cap; ++x) {
            shape.mult[v][u] = shape.mult[u][v] = x;
            used[v] += x;
            used[u] += x;
            gen_matrices(kv, shape, v, u + 1, used, emit);
            used[v] -= x;
            used[u] -= x;
        }
        shape.mult[v][u] = shape.mult[u][v] = 0;
    }
}

// every connected decorated shape with >= 1 edge, genus vectors sorted
void for_each_shape(int g, int n, const std::function<void(const GraphShape&)>& sink) {
    const int maxm = std::max(1, 2 * g - 2 + n);
    for (int m = 1; m <= maxm; ++m) {
        std::vector<int> gv(m);
        gen_genus(m, g, 0, 0, g, gv, [&](int h1) {
            const int E = m - 1 + h1;
            if (E <= 0) return;  // edgeless handled separately
            std::vector<int> kv(m);
            gen_degrees(gv, 0, 2 * E, kv, [&]() {
                // stability needs 2g_v - 2 + k_v + n > 0 even with all legs
                for (int v = 0; v < m; ++v)
                    if (2 * gv[v] - 2 + kv[v] + n <= 0) return;
                GraphShape shape;
                shape.genus = gv;
                shape.mult.assign(m, std::vector<int>(m, 0));
                std::vector<int> used(m, 0);
                gen_matrices(kv, shape, 0, 0, used, [&]() { sink(shape); });
            });
        });
    }
}

StableGraph make_edgeless(int g, int n) {
    StableGraph G;
    G.shape.genus = {g};
    G.shape.mult = {{0}};
    G.legs.resize(1);
    for (int i = 1; i <= n; ++i) G.legs[0].push_back(i);
    G.genus = g;
    G.num_legs = n;
    return G;
}

void check_pair(int g, int n) {
    if (g < 0 || n < 0 || 2 * g + n <= 2)
        throw std::invalid_argument("unstable pair (g,n)");
}

}  // namespace

std::vector<StableGraph> enumerate_stable_graphs(int g, int n) {
    check_pair(g, n);
    std::map<std::pair<int, std::string>, StableGraph> classes;
    for_each_shape(g, n, [&](const GraphShape& shape) {
        const int m = shape.vertex_count();
        // distribute labeled legs: odometer over vertex per leg
        std::vector<int> assign(n, 0);
        while (true) {
            StableGraph G;
            G.shape = shape;
            G.genus = g;
            G.num_legs = n;
            G.legs.assign(m, {});
            for (int i = 0; i < n; ++i) G.legs[assign[i]].push_back(i + 1);
            bool stable = true;
            for (int v = 0; v < m && stable; ++v)
                if (2 * shape.genus[v] - 2 + G.valence(v) <= 0) stable = false;
            if (stable) {
                std::string key = canonical_encoding(G);
                classes.emplace(std::make_pair(G.num_edges(), std::move(key)),
                                std::move(G));
            }
            // advance odometer
            int i = 0;
            while (i < n && ++assign[i] == m) assign[i++] = 0;
            if (i == n) break;
        }
    });
    std::vector<StableGraph> out;
    if (2 * g + n == 3) out.push_back(make_edgeless(g, n));
    for (auto& [k, G] : classes) out.push_back(std::move(G));
    return out;
}

std::vector<LegCountedGraph> enumerate_leg_counted_graphs(int g, int n) {
    check_pair(g, n);
    std::map<std::pair<int, std::string>, LegCountedGraph> classes;
    for_each_shape(g, n, [&](const GraphShape& shape) {
        const int m = shape.vertex_count();
        std::vector<int> mins(m), p(m);
        int need = 0;
        for (int v = 0; v < m; ++v) {
            mins[v] = std::max(0, 3 - 2 * shape.genus[v] - shape.edge_slots(v));
            need += mins[v];
        }
        if (need > n) return;
        std::function<void(int, int)> rec = [&](int v, int left) {
            if (v == m) {
                if (left != 0) return;
                LegCountedGraph G;
                G.shape = shape;
                G.leg_count = p;
                G.genus = g;
                G.num_legs = n;
                std::string key = canonical_encoding(G);
                classes.emplace(std::make_pair(G.num_edges(), std::move(key)),
                                std::move(G));
                return;
            }
            int hi = left;
            for (int u = v + 1; u < m; ++u) hi -= mins[u];
            for (int x = mins[v]; x <= hi; ++x) {
                p[v] = x;
                rec(v + 1, left - x);
            }
        };
        rec(0, n);
    });
    std::vector<LegCountedGraph> out;
    out.reserve(classes.size());
    for (auto& [k, G] : classes) out.push_back(std::move(G));
    return out;
}

HalfEdgeView to_half_edges(const StableGraph& G) {
    HalfEdgeView H;
    H.num_vertices = G.vertex_count();
    H.vertex_genus = G.shape.genus;
    auto edges = G.edges();
    const int he = 2 * static_cast<int>(edges.size()) + G.num_legs;
    H.involution.resize(he);
    H.attach.resize(he);
    H.leg_label.assign(he, 0);
    int idx = 0;
    for (const Edge& e : edges) {
        H.involution[idx] = idx + 1;
        H.involution[idx + 1] = idx;
        H.attach[idx] = e.u;
        H.attach[idx + 1] = e.v;
        idx += 2;
    }
    for (int v = 0; v < G.vertex_count(); ++v) {
        for (int label : G.legs[v]) {
            H.involution[idx] = idx;
            H.attach[idx] = v;
            H.leg_label[idx] = label;
            ++idx;
        }
    }
    return H;
}

std::string to_dot(const StableGraph& G) {
    std::ostringstream os;
    os << "graph stable {\n";
    for (int v = 0; v < G.vertex_count(); ++v)
        os << "  v" << v << " [label=\"g=" << G.shape.genus[v] << "\"];\n";
    int li = 0;
    for (int v = 0; v < G.vertex_count(); ++v) {
        for (int label : G.legs[v]) {
            os << "  l" << li << " [shape=none,label=\"" << label << "\"];\n";
            os << "  v" << v << " -- l" << li << " [style=dashed];\n";
            ++li;
        }
    }
    int ei = 0;
    for (const Edge& e : G.edges()) {
        os << "  v" << e.u << " -- v" << e.v << " [label=\"b" << ++ei << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace mvv
