#include "mvv/cli_app.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <json.hpp>

#include "mvv/asymptotics.hpp"
#include "mvv/correlators.hpp"
#include "mvv/decimal.hpp"
#include "mvv/frequencies.hpp"
#include "mvv/siegel_veech.hpp"
#include "mvv/statistics.hpp"
#include "mvv/volumes.hpp"

namespace mvv {

namespace {

using json = nlohmann::ordered_json;

json to_json(const Rational& r) {
    return json{{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

json to_json(const PiMonomial& m) {
    return json{{"num", m.coeff.get_num().get_str()},
                {"den", m.coeff.get_den().get_str()},
                {"pi_exp", m.pi_exp}};
}

json to_json(const ZetaExpr& e) {
    json arr = json::array();
    for (const auto& [args, c] : e.terms())
        arr.push_back(json{{"args", args},
                           {"num", c.get_num().get_str()},
                           {"den", c.get_den().get_str()}});
    return arr;
}

std::string pi_text(const PiMonomial& m, int digits) {
    return m.str() + " = " + decimal_string(m, digits);
}

std::filesystem::path cache_dir() {
    if (const char* env = std::getenv("MVV_CACHE_DIR")) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
        return std::filesystem::path(xdg) / "mvvol";
    if (const char* home = std::getenv("HOME"))
        return std::filesystem::path(home) / ".cache" / "mvvol";
    return std::filesystem::path(".mvvol-cache");
}

struct Options {
    std::string format = "text";
    int digits = 12;
    int threads = 0;
    bool no_cache = false;
};

struct CacheGuard {
    bool enabled;
    std::filesystem::path file;
    explicit CacheGuard(bool on, std::ostream& err) : enabled(on) {
        if (!enabled) return;
        std::error_code ec;
        std::filesystem::create_directories(cache_dir(), ec);
        file = cache_dir() / "correlators.txt";
        auto st = correlators().load(file.string());
        if (st == CorrelatorEngine::LoadStatus::corrupt_rebuilt)
            err << "warning: correlator cache was corrupt; rebuilding\n";
    }
    ~CacheGuard() {
        if (!enabled) return;
        try {
            correlators().save(file.string());
        } catch (...) {
            // cache persistence is best-effort
        }
    }
};

int graph_index_or_throw(const std::vector<StableGraph>& graphs, int idx) {
    if (idx < 0 || idx >= static_cast<int>(graphs.size()))
        throw std::invalid_argument("graph index out of range (see `graphs`)");
    return idx;
}

void cmd_volume(int g, int n, bool by_graph, bool by_cyl, const Options& opt,
                std::ostream& out) {
    const VolumeResult& vol = masur_veech_volume(g, n);
    if (opt.format == "json") {
        json j{{"g", g}, {"n", n}, {"volume", to_json(vol.total)}};
        j["decimal"] = decimal_string(vol.total, opt.digits);
        if (g == 1 && n == 1)
            j["note"] = "conventional value for Q_{1,1}";
        if (g == 0 && n == 3)
            j["note"] = "conventional value for Q_{0,3}";
        if (by_cyl) {
            json arr = json::array();
            for (const auto& [k, v] : vol.by_cylinder_count) {
                json row{{"cylinders", k}, {"contribution", to_json(v)}};
                row["p_k"] = to_json(Rational(v.coeff / vol.total.coeff));
                arr.push_back(row);
            }
            j["by_cylinders"] = arr;
        }
        if (by_graph) {
            json arr = json::array();
            for (const auto& gc : volume_by_graph(g, n)) {
                arr.push_back(json{{"graph", canonical_encoding(gc.graph)},
                                   {"aut", gc.aut.get_str()},
                                   {"p_gamma", gc.polynomial.str()},
                                   {"vol", to_json(gc.volume)},
                                   {"cylinders", gc.cylinder_count}});
            }
            j["by_graph"] = arr;
        }
        out << j.dump(2) << "\n";
        return;
    }
    if (opt.format == "csv" && by_cyl) {
        out << "k,num,den,pi_exp,p_num,p_den\n";
        for (const auto& [k, v] : vol.by_cylinder_count) {
            Rational p = v.coeff / vol.total.coeff;
            out << k << "," << v.coeff.get_num().get_str() << ","
                << v.coeff.get_den().get_str() << "," << v.pi_exp << ","
                << p.get_num().get_str() << "," << p.get_den().get_str() << "\n";
        }
        return;
    }
    out << "Vol Q_{" << g << "," << n << "} = " << pi_text(vol.total, opt.digits)
        << "\n";
    if ((g == 1 && n == 1) || (g == 0 && n == 3))
        out << "  (conventional value)\n";
    if (by_cyl) {
        for (const auto& [k, v] : vol.by_cylinder_count) {
            Rational p = v.coeff / vol.total.coeff;
            out << "  " << k << " cylinder(s): " << v.str()
                << "   p_" << k << " = " << to_string(p) << "\n";
        }
    }
    if (by_graph) {
        int i = 0;
        for (const auto& gc : volume_by_graph(g, n)) {
            out << "  graph " << i++ << ": aut=" << gc.aut.get_str()
                << " cylinders=" << gc.cylinder_count
                << " P = " << gc.polynomial.str() << "  Vol = " << gc.volume.str()
                << "\n";
        }
    }
}

void cmd_carea(int g, int n, const std::string& method, const Options& opt,
               std::ostream& out) {
    std::optional<SiegelVeechResult> dir, bnd;
    if (method == "direct" || method == "both") dir = carea_direct(g, n);
    if (method == "boundary" || method == "both") bnd = carea_boundary(g, n);
    bool agree = true;
    if (dir && bnd) agree = dir->carea_pi23 == bnd->carea_pi23;
    const SiegelVeechResult& primary = dir ? *dir : *bnd;

    if (opt.format == "json") {
        json j{{"g", g}, {"n", n}};
        if (dir) j["direct"] = to_json(dir->carea_pi23);
        if (bnd) j["boundary"] = to_json(bnd->carea_pi23);
        if (dir && bnd) j["agree"] = agree;
        j["pi2_carea_over_3"] = to_json(primary.carea_pi23);
        j["decimal"] = decimal_string(primary.carea_pi23, opt.digits);
        Rational lp = make_rational(5L * g - 5 - n, 18) + primary.carea_pi23;
        Rational lm = lp + make_rational(g - 1L + n, 3);
        j["lambda_plus"] = to_json(lp);
        j["lambda_minus"] = to_json(lm);
        out << j.dump(2) << "\n";
    } else {
        if (dir)
            out << "pi^2/3 c_area (direct)   = " << to_string(dir->carea_pi23) << "\n";
        if (bnd)
            out << "pi^2/3 c_area (boundary) = " << to_string(bnd->carea_pi23) << "\n";
        if (dir && bnd) out << "agree = " << (agree ? "true" : "false") << "\n";
        Rational lp = make_rational(5L * g - 5 - n, 18) + primary.carea_pi23;
        Rational lm = lp + make_rational(g - 1L + n, 3);
        out << "Lambda+ = " << to_string(lp) << ", Lambda- = " << to_string(lm)
            << "\n";
    }
    if (!agree)
        throw std::logic_error("carea methods disagree: direct " +
                               to_string(dir->carea_pi23) + " vs boundary " +
                               to_string(bnd->carea_pi23));
}

void cmd_graphs(int g, int n, bool dot, const Options& opt, std::ostream& out) {
    auto graphs = enumerate_stable_graphs(g, n);
    if (dot) {
        for (const auto& G : graphs) out << to_dot(G);
        return;
    }
    if (opt.format == "json") {
        json arr = json::array();
        int i = 0;
        for (const auto& G : graphs) {
            json row{{"index", i++},
                     {"encoding", canonical_encoding(G)},
                     {"genus", G.shape.genus},
                     {"aut", aut_order(G).get_str()},
                     {"edges", json::array()},
                     {"legs", G.legs}};
            for (const Edge& e : G.edges())
                row["edges"].push_back(json::array({e.u, e.v}));
            arr.push_back(row);
        }
        out << arr.dump(2) << "\n";
        return;
    }
    out << graphs.size() << " stable graph(s) for (g,n) = (" << g << "," << n
        << ")\n";
    int i = 0;
    for (const auto& G : graphs) {
        out << "  [" << i++ << "] vertices:";
        for (int v = 0; v < G.vertex_count(); ++v) {
            out << " g=" << G.shape.genus[v];
            if (!G.legs[v].empty()) {
                out << "(legs";
                for (int l : G.legs[v]) out << " " << l;
                out << ")";
            }
        }
        out << "  edges:";
        for (const Edge& e : G.edges()) out << " " << e.u << "-" << e.v;
        out << "  |Aut| = " << aut_order(G).get_str() << "\n";
    }
}

void cmd_corr(int g, const std::vector<int>& d, const Options& opt,
              std::ostream& out) {
    Rational v = correlators().psi(g, d);
    if (opt.format == "json") {
        out << json{{"g", g}, {"d", d}, {"value", to_json(v)}}.dump(2) << "\n";
    } else {
        out << to_string(v) << "\n";
    }
}

void cmd_agk(int g, const Options& opt, std::ostream& out) {
    if (opt.format == "csv") {
        out << a_gk_csv(g);
        return;
    }
    TwoCorrelatorRow row = a_gk_row(g);
    if (opt.format == "json") {
        json arr = json::array();
        for (int k = 0; k < 3 * g; ++k)
            arr.push_back(to_json(row.a[k]));
        out << json{{"g", g}, {"a", arr}}.dump(2) << "\n";
        return;
    }
    for (int k = 0; k < 3 * g; ++k)
        out << "a_{" << g << "," << k << "} = " << to_string(row.a[k]) << "\n";
}

void cmd_freq_bgn(int g, int n, const Options& opt, std::ostream& out) {
    BgnResult b = b_gn(g, n);
    if (opt.format == "json") {
        json j{{"g", g},
               {"n", n},
               {"b_gn", to_json(b.value)},
               {"decimal", decimal_string(b.value, opt.digits)}};
        if (b.exceptional_normalization) j["flags"] = {"exceptional-normalization"};
        out << j.dump(2) << "\n";
        return;
    }
    out << "b_{" << g << "," << n << "} = " << pi_text(b.value, opt.digits) << "\n";
    if (b.exceptional_normalization)
        out << "  flag: exceptional normalization for (2,0)\n";
}

void cmd_freq_curve(int g, int n, int index, const std::vector<long>& H,
                    const Options& opt, std::ostream& out) {
    auto graphs = enumerate_stable_graphs(g, n);
    const StableGraph& G = graphs[graph_index_or_throw(graphs, index)];
    if (static_cast<int>(H.size()) != G.num_edges())
        throw std::invalid_argument("need one height per edge");
    FrequencyReport rep = multicurve_frequency(G, H);
    if (opt.format == "json") {
        json j{{"gamma", canonical_encoding(G)},
               {"weights", H},
               {"c", to_json(rep.c_gamma)},
               {"c_tilde", to_json(rep.c_tilde)},
               {"flags", json::array()}};
        if (rep.exceptional_normalization)
            j["flags"].push_back("exceptional-normalization");
        out << j.dump(2) << "\n";
        return;
    }
    out << "c(gamma) = " << to_string(rep.c_gamma)
        << ", c~ = " << to_string(rep.c_tilde) << "\n";
    if (rep.exceptional_normalization)
        out << "  flag: exceptional normalization for (2,0)\n";
}

void cmd_stats_expect(int g, int n, int index, const std::string& ratio,
                      const std::vector<long>& heights, const Options& opt,
                      std::ostream& out) {
    auto graphs = enumerate_stable_graphs(g, n);
    const StableGraph& G = graphs[graph_index_or_throw(graphs, index)];
    auto slash = ratio.find('/');
    if (slash == std::string::npos)
        throw std::invalid_argument("ratio must look like e1/e2");
    int i = std::stoi(ratio.substr(0, slash)) - 1;
    int j = std::stoi(ratio.substr(slash + 1)) - 1;
    const int k = G.num_edges();
    if (i < 0 || j < 0 || i >= k || j >= k)
        throw std::invalid_argument("edge index out of range");
    ExpectationQuery q;
    q.graph = G;
    q.moment_delta.assign(k, 0);
    q.moment_delta[i] += 1;
    q.moment_delta[j] -= 1;
    if (!heights.empty()) {
        if (static_cast<int>(heights.size()) != k)
            throw std::invalid_argument("need one height per edge");
        q.heights = heights;
    }
    ExpectationResult res = expectation(q);
    if (opt.format == "json") {
        json j2{{"graph", canonical_encoding(G)}, {"ratio", ratio}};
        if (res.divergent) {
            j2["value"] = "DIVERGENT";
        } else if (res.fixed_heights) {
            j2["heights"] = heights;
            j2["value"] = to_json(res.rational_value);
            j2["decimal"] = res.decimal(opt.digits);
        } else {
            j2["numerator"] = to_json(res.numerator);
            j2["denominator"] = to_json(res.denominator);
            j2["decimal"] = res.decimal(opt.digits);
        }
        out << j2.dump(2) << "\n";
        return;
    }
    if (res.divergent) {
        out << "E = DIVERGENT\n";
    } else if (res.fixed_heights) {
        out << "E = " << to_string(res.rational_value) << " = "
            << res.decimal(opt.digits) << "\n";
    } else {
        out << "E = [" << res.numerator.str() << "] / [" << res.denominator.str()
            << "] = " << res.decimal(opt.digits) << "\n";
    }
}

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"Masur-Veech volumes, Siegel-Veech constants and statistics of "
                 "square-tiled surfaces"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--digits", opt.digits, "decimal digits for numeric output")
        ->check(CLI::Range(1, 200));
    app.add_option("--threads", opt.threads, "worker threads (0 = auto)");
    app.add_flag("--no-cache", opt.no_cache, "skip the on-disk correlator cache");

    int g = 0, n = 0, index = 0, bound = 1;
    std::vector<int> dvec;
    std::vector<long> heights;
    bool by_graph = false, by_cyl = false, dot = false;
    std::string method = "direct", ratio;

    auto* volume = app.add_subcommand("volume", "Masur-Veech volume of Q_{g,n}");
    volume->add_option("g", g)->required();
    volume->add_option("n", n)->required();
    volume->add_flag("--by-graph", by_graph, "per-stable-graph breakdown");
    volume->add_flag("--by-cylinders", by_cyl, "per-cylinder-count breakdown");

    auto* carea = app.add_subcommand("carea", "area Siegel-Veech constant");
    carea->add_option("g", g)->required();
    carea->add_option("n", n)->required();
    carea->add_option("--method", method, "direct|boundary|both")
        ->check(CLI::IsMember({"direct", "boundary", "both"}));

    auto* graphs = app.add_subcommand("graphs", "stable graphs of (g,n)");
    graphs->add_option("g", g)->required();
    graphs->add_option("n", n)->required();
    graphs->add_flag("--dot", dot, "DOT export");

    auto* corr = app.add_subcommand("corr", "psi-correlator <tau_{d_1}...>_g");
    corr->add_option("g", g)->required();
    corr->add_option("d", dvec, "exponents d_1 d_2 ...")->expected(-1);

    auto* agk = app.add_subcommand("agk", "normalized 2-correlators a_{g,k}");
    agk->add_option("g", g)->required();

    auto* freq = app.add_subcommand("freq", "multicurve frequencies");
    freq->require_subcommand(1);
    auto* fbgn = freq->add_subcommand("bgn", "average Thurston unit-ball volume");
    fbgn->add_option("g", g)->required();
    fbgn->add_option("n", n)->required();
    auto* fsep = freq->add_subcommand("sep-ratio", "separating / non-separating");
    fsep->add_option("g", g)->required();
    freq->add_subcommand("six-split", "six-punctured sphere split frequencies");
    auto* fcurve = freq->add_subcommand("curve", "frequency of one multicurve");
    fcurve->add_option("g", g)->required();
    fcurve->add_option("n", n)->required();
    fcurve->add_option("--graph", index, "graph index (see `graphs`)")->required();
    fcurve->add_option("--heights", heights, "cylinder heights H_1,H_2,...")
        ->delimiter(',')
        ->required();

    auto* stats = app.add_subcommand("stats", "square-tiled surface statistics");
    stats->require_subcommand(1);
    auto* scyl = stats->add_subcommand("cyl", "cylinder-count distribution");
    scyl->add_option("g", g)->required();
    scyl->add_option("n", n)->required();
    auto* sexp = stats->add_subcommand("expect", "perimeter-ratio expectation");
    sexp->add_option("g", g)->required();
    sexp->add_option("n", n)->required();
    sexp->add_option("--graph", index)->required();
    sexp->add_option("--ratio", ratio, "e_i/e_j (1-based edge indices)")->required();
    sexp->add_option("--heights", heights)->delimiter(',');
    auto* sh1 = stats->add_subcommand("height1", "P(single cylinder has H = 1)");
    sh1->add_option("g", g)->required();
    sh1->add_option("n", n)->required();
    auto* sbnd = stats->add_subcommand("bounded", "P(all heights <= bound)");
    sbnd->add_option("g", g)->required();
    sbnd->add_option("n", n)->required();
    sbnd->add_option("--graph", index)->required();
    sbnd->add_option("--bound", bound)->required();

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    if (opt.threads > 0) set_worker_threads(opt.threads);
    CacheGuard cache(!opt.no_cache, err);

    if (*volume) cmd_volume(g, n, by_graph, by_cyl, opt, out);
    if (*carea) cmd_carea(g, n, method, opt, out);
    if (*graphs) cmd_graphs(g, n, dot, opt, out);
    if (*corr) cmd_corr(g, dvec, opt, out);
    if (*agk) cmd_agk(g, opt, out);
    if (*freq) {
        if (*fbgn) cmd_freq_bgn(g, n, opt, out);
        if (*fsep) out << "sep/nonsep(" << g << ") = "
                       << to_string(sep_nonsep_ratio(g)) << "\n";
        if (*freq->get_subcommand("six-split")) {
            auto [s33, s24] = six_punctured_sphere_split();
            out << "3+3 split: " << to_string(s33) << "\n2+4 split: "
                << to_string(s24) << "\n";
        }
        if (*fcurve) cmd_freq_curve(g, n, index, heights, opt, out);
    }
    if (*stats) {
        if (*scyl) {
            CylinderDistribution dist = cylinder_distribution(g, n);
            if (opt.format == "csv") {
                out << "k,p_num,p_den\n";
                for (auto& [k, p] : dist.p)
                    out << k << "," << p.get_num().get_str() << ","
                        << p.get_den().get_str() << "\n";
            } else {
                for (auto& [k, p] : dist.p)
                    out << "p_" << k << " = " << to_string(p) << "\n";
            }
        }
        if (*sexp) cmd_stats_expect(g, n, index, ratio, heights, opt, out);
        if (*sh1) {
            HeightOneResult r = height_one_probability(g, n, opt.digits);
            out << "P(H = 1) = " << r.exact.str() << " = " << r.decimal << "\n";
        }
        if (*sbnd) {
            auto graphsv = enumerate_stable_graphs(g, n);
            const StableGraph& G = graphsv[graph_index_or_throw(graphsv, index)];
            HeightProbability p = bounded_height_probability(G, bound);
            out << "P(all H <= " << bound << ") = [" << to_string(p.numerator)
                << "] / [" << p.denominator.str() << "] = "
                << p.decimal(opt.digits) << "\n";
        }
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::logic_error& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace mvv
