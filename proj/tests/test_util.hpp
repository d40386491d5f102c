#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mvv/rational.hpp"
#include "mvv/stable_graph.hpp"

namespace mvvtest {

inline mvv::Rational R(long num, long den = 1) { return mvv::make_rational(num, den); }

inline mvv::Rational R(const char* num, const char* den) {
    return mvv::make_rational(mvv::Integer(num), mvv::Integer(den));
}

// parse "1.644934067" / "-0.5" / "2" into an exact rational
inline mvv::Rational parse_decimal(const std::string& s) {
    std::string t = s;
    bool neg = !t.empty() && t[0] == '-';
    if (neg) t.erase(0, 1);
    auto dot = t.find('.');
    long scale = 0;
    if (dot != std::string::npos) {
        scale = static_cast<long>(t.size() - dot - 1);
        t.erase(dot, 1);
    }
    mvv::Rational r = mvv::make_rational(mvv::Integer(t),
                                         mvv::int_pow(mvv::Integer(10), scale));
    return neg ? mvv::Rational(-r) : r;
}

// pick the unique enumerated stable graph matching a structural predicate
template <typename Pred>
const mvv::StableGraph& find_graph(const std::vector<mvv::StableGraph>& graphs,
                                   Pred pred) {
    const mvv::StableGraph* found = nullptr;
    for (const auto& G : graphs) {
        if (pred(G)) {
            if (found) throw std::runtime_error("graph predicate not unique");
            found = &G;
        }
    }
    if (!found) throw std::runtime_error("graph predicate matched nothing");
    return *found;
}

inline int loop_count(const mvv::StableGraph& G) {
    int l = 0;
    for (int v = 0; v < G.vertex_count(); ++v) l += G.shape.mult[v][v];
    return l;
}

}  // namespace mvvtest
