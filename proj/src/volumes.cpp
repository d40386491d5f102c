#include "mvv/volumes.hpp"

#include <atomic>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "mvv/correlators.hpp"

namespace mvv {

namespace {

std::atomic<int> g_threads{0};  // 0 = auto

int effective_threads() {
    int t = g_threads.load();
    if (t > 0) return t;
    unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(hw == 0 ? 1 : std::min(hw, 8u));
}

// index-sharded parallel map with deterministic output order
template <typename F>
void parallel_indexed(std::size_t count, F&& fn) {
    int nt = std::min<std::size_t>(effective_threads(), count);
    if (nt <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mu;
    for (int t = 0; t < nt; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mu);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

void check_stable_pair(int g, int n) {
    if (g < 0 || n < 0 || 2 * g + n <= 2)
        throw std::invalid_argument("unstable pair (g,n)");
}

// compositions of `total` over `slots` nonnegative entries
void for_each_composition(int slots, int total,
                          const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> d(slots, 0);
    if (slots == 0) {
        if (total == 0) fn(d);
        return;
    }
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == slots - 1) {
            d[pos] = left;
            fn(d);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            d[pos] = x;
            rec(pos + 1, left - x);
        }
    };
    rec(0, total);
}

// N_{g_v, n_v} with the edge slots of vertex v substituted and legs at zero,
// expressed in the nvars edge variables. slots lists edge indices, loops
// twice.
CylPolynomial vertex_poly(int gv, const std::vector<int>& slots, int legs,
                          int nvars) {
    const int nv = static_cast<int>(slots.size()) + legs;
    const int dv = 3 * gv - 3 + nv;
    CylPolynomial out(nvars);
    if (dv < 0) return out;
    const Rational scale =
        pow_rational(Rational(2), -(5L * gv - 6 + 2L * nv));
    for_each_composition(static_cast<int>(slots.size()), dv,
                         [&](const std::vector<int>& d) {
        std::vector<int> full = d;
        full.resize(nv, 0);
        Rational c = correlators().psi(gv, full);
        if (c == 0) return;
        for (int x : d) c /= Rational(factorial(x));
        CylPolynomial::Exponents e(nvars, 0);
        for (std::size_t i = 0; i < slots.size(); ++i) e[slots[i]] += 2 * d[i];
        out.add_term(std::move(e), c * scale);
    });
    return out;
}

CylPolynomial p_gamma_impl(const GraphShape& shape,
                           const std::vector<int>& leg_counts,
                           const Integer& aut, int g, int n) {
    if (g == 0 && n == 3)
        throw std::invalid_argument("p_gamma undefined for (0,3); use the volume convention");
    const auto edges = edge_list(shape);
    const int k = static_cast<int>(edges.size());
    const int m = shape.vertex_count();

    Rational pref(int_pow(Integer(2), 6L * g - 5 + 2L * n));
    pref *= Rational(factorial(4L * g - 4 + n)) / Rational(factorial(6L * g - 7 + 2L * n));
    pref /= Rational(int_pow(Integer(2), m - 1));
    pref /= Rational(aut);

    CylPolynomial poly = CylPolynomial::constant(k, pref);
    for (int v = 0; v < m && !poly.is_zero(); ++v) {
        std::vector<int> slots;
        for (int ei = 0; ei < k; ++ei) {
            if (edges[ei].u == v) slots.push_back(ei);
            if (edges[ei].v == v) slots.push_back(ei);
        }
        poly = poly * vertex_poly(shape.genus[v], slots, leg_counts[v], k);
    }
    // times prod_e b_e
    CylPolynomial result(k);
    for (const auto& [e, c] : poly.terms()) {
        CylPolynomial::Exponents shifted = e;
        for (int i = 0; i < k; ++i) ++shifted[i];
        result.add_term(std::move(shifted), c);
    }
    return result;
}

}  // namespace

void set_worker_threads(int n) { g_threads.store(n); }
int worker_threads() { return effective_threads(); }

CylPolynomial kontsevich_poly(int g, int n) {
    check_stable_pair(g, n);
    const int deg = 3 * g - 3 + n;
    const Rational scale = pow_rational(Rational(2), -(5L * g - 6 + 2L * n));
    CylPolynomial out(n);
    for_each_composition(n, deg, [&](const std::vector<int>& d) {
        Rational c = correlators().psi(g, d);
        if (c == 0) return;
        for (int x : d) c /= Rational(factorial(x));
        CylPolynomial::Exponents e(n);
        for (int i = 0; i < n; ++i) e[i] = 2 * d[i];
        out.add_term(std::move(e), c * scale);
    });
    return out;
}

CylPolynomial p_gamma(const StableGraph& G) {
    std::vector<int> lc(G.vertex_count());
    for (int v = 0; v < G.vertex_count(); ++v)
        lc[v] = static_cast<int>(G.legs[v].size());
    return p_gamma_impl(G.shape, lc, aut_order(G), G.genus, G.num_legs);
}

CylPolynomial p_gamma(const LegCountedGraph& G) {
    return p_gamma_impl(G.shape, G.leg_count, aut_order(G), G.genus, G.num_legs);
}

ZetaExpr z_op(const CylPolynomial& P) {
    ZetaExpr out;
    for (const auto& [e, c] : P.terms()) {
        Rational coeff = c;
        ZetaExpr::Key args;
        args.reserve(e.size());
        for (int m : e) {
            coeff *= Rational(factorial(m));
            args.push_back(m + 1);
        }
        std::sort(args.begin(), args.end());
        out.add_term(std::move(args), coeff);
    }
    return out;
}

PiMonomial z_op_pi(const CylPolynomial& P) {
    PiMonomial total;
    for (const auto& [e, c] : P.terms()) {
        PiMonomial term(c, 0);
        for (int m : e) {
            if ((m + 1) % 2 != 0)
                throw std::domain_error("z_op_pi: odd zeta argument " + std::to_string(m + 1));
            term = term * zeta_even(m + 1) * Rational(factorial(m));
        }
        total += term;
    }
    return total;
}

Rational y_op(const CylPolynomial& P, const std::vector<long>& H) {
    if (static_cast<int>(H.size()) != P.nvars())
        throw std::invalid_argument("y_op: height vector length mismatch");
    for (long h : H)
        if (h < 1) throw std::invalid_argument("y_op: heights must be positive");
    Rational total(0);
    for (const auto& [e, c] : P.terms()) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            t *= make_rational(factorial(e[i]),
                               int_pow(Integer(H[i]), e[i] + 1));
        total += t;
    }
    return total;
}

CylPolynomial ztilde_op(const CylPolynomial& P, const std::vector<long>& H) {
    if (static_cast<int>(H.size()) != P.nvars())
        throw std::invalid_argument("ztilde_op: height vector length mismatch");
    const int k = P.nvars();
    CylPolynomial out(k);
    for (const auto& [e, c] : P.terms()) {
        long md = 0;
        Rational t = c;
        for (int i = 0; i < k; ++i) {
            md += e[i];
            t /= Rational(int_pow(Integer(H[i]), e[i] + 1));
        }
        out.add_term(e, t * Rational(factorial(md + k)));
    }
    return out;
}

Rational simplex_integral(const CylPolynomial& xpoly) {
    const int k = xpoly.nvars();
    Rational total(0);
    for (const auto& [e, c] : xpoly.terms()) {
        long md = 0;
        Rational t = c;
        for (int i = 0; i < k; ++i) {
            md += e[i];
            t *= Rational(factorial(e[i]));
        }
        total += t / Rational(factorial(md + k));
    }
    return total;
}

namespace {
std::mutex volume_cache_mu;
std::map<std::pair<int, int>, VolumeResult> volume_cache;
}  // namespace

const VolumeResult& masur_veech_volume(int g, int n) {
    check_stable_pair(g, n);
    {
        std::lock_guard lock(volume_cache_mu);
        auto it = volume_cache.find({g, n});
        if (it != volume_cache.end()) return it->second;
    }
    VolumeResult result;
    if (g == 0 && n == 3) {
        result.total = PiMonomial(Rational(4), 0);
        result.by_cylinder_count[0] = result.total;
    } else {
        auto classes = enumerate_leg_counted_graphs(g, n);
        const int d = 6 * g - 6 + 2 * n;
        std::vector<PiMonomial> contrib(classes.size());
        parallel_indexed(classes.size(), [&](std::size_t i) {
            PiMonomial v = z_op_pi(p_gamma(classes[i]));
            contrib[i] = v * classes[i].labeling_multiplicity();
        });
        for (std::size_t i = 0; i < classes.size(); ++i) {
            if (contrib[i].is_zero()) continue;
            if (contrib[i].pi_exp != d)
                throw std::logic_error("graph contribution with wrong pi power");
            result.total += contrib[i];
            auto [it, fresh] =
                result.by_cylinder_count.emplace(classes[i].num_edges(), contrib[i]);
            if (!fresh) it->second += contrib[i];
        }
    }
    std::lock_guard lock(volume_cache_mu);
    return volume_cache.emplace(std::make_pair(g, n), std::move(result))
        .first->second;
}

PiMonomial cached_volume(int g, int n) { return masur_veech_volume(g, n).total; }

std::vector<GraphContribution> volume_by_graph(int g, int n) {
    check_stable_pair(g, n);
    auto graphs = enumerate_stable_graphs(g, n);
    std::vector<GraphContribution> out(graphs.size());
    parallel_indexed(graphs.size(), [&](std::size_t i) {
        GraphContribution& gc = out[i];
        gc.graph = graphs[i];
        gc.aut = aut_order(graphs[i]);
        gc.cylinder_count = graphs[i].num_edges();
        if (g == 0 && n == 3) {
            gc.polynomial = CylPolynomial(0);
            gc.volume = PiMonomial(Rational(4), 0);  // limit convention
            return;
        }
        gc.polynomial = p_gamma(graphs[i]);
        gc.volume = z_op_pi(gc.polynomial);
    });
    return out;
}

}  // namespace mvv
