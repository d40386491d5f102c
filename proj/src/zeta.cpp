#include "mvv/zeta.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace mvv {

namespace {
std::mutex bernoulli_mu;
std::vector<Rational> bernoulli_table;  // B_0, B_1, ..., guarded by bernoulli_mu

// extends the table up to index m inclusive
void extend_bernoulli(int m) {
    if (bernoulli_table.empty()) {
        bernoulli_table.push_back(Rational(1));
        bernoulli_table.push_back(make_rational(-1, 2));
    }
    for (int k = static_cast<int>(bernoulli_table.size()); k <= m; ++k) {
        // sum_{j=0}^{k} C(k+1, j) B_j = 0  =>  B_k
        Rational s(0);
        for (int j = 0; j < k; ++j)
            s += Rational(binomial(k + 1, j)) * bernoulli_table[j];
        bernoulli_table.push_back(-s / Rational(k + 1));
    }
}
}  // namespace

Rational bernoulli(int m) {
    if (m < 0 || m % 2 != 0)
        throw std::invalid_argument("bernoulli: index must be even and nonnegative");
    std::lock_guard lock(bernoulli_mu);
    extend_bernoulli(m);
    return bernoulli_table[m];
}

PiMonomial zeta_even(int s) {
    if (s < 2 || s % 2 != 0)
        throw std::invalid_argument("zeta_even: argument must be a positive even integer");
    int m = s / 2;
    Rational c = bernoulli(s) * make_rational(int_pow(Integer(2), s), 2 * factorial(s));
    if (m % 2 == 0) c = -c;
    return PiMonomial(c, s);
}

ZetaExpr ZetaExpr::constant(Rational c) {
    ZetaExpr e;
    e.add_term({}, c);
    return e;
}

ZetaExpr ZetaExpr::monomial(Key args, Rational coeff) {
    std::sort(args.begin(), args.end());
    for (int a : args)
        if (a < 1) throw std::invalid_argument("zeta argument below 1");
    ZetaExpr e;
    e.add_term(std::move(args), coeff);
    return e;
}

bool ZetaExpr::divergent() const {
    for (const auto& [k, c] : terms_)
        if (!k.empty() && k.front() == 1) return true;
    return false;
}

const std::pair<const ZetaExpr::Key, Rational>* ZetaExpr::single_term() const {
    if (terms_.size() != 1) return nullptr;
    return &*terms_.begin();
}

void ZetaExpr::add_term(Key args, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(std::move(args), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

ZetaExpr ZetaExpr::operator+(const ZetaExpr& o) const {
    ZetaExpr r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, c);
    return r;
}

ZetaExpr ZetaExpr::operator-(const ZetaExpr& o) const {
    ZetaExpr r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
    return r;
}

ZetaExpr ZetaExpr::operator*(const ZetaExpr& o) const {
    ZetaExpr r;
    for (const auto& [k1, c1] : terms_) {
        for (const auto& [k2, c2] : o.terms_) {
            Key k = k1;
            k.insert(k.end(), k2.begin(), k2.end());
            std::sort(k.begin(), k.end());
            r.add_term(std::move(k), c1 * c2);
        }
    }
    return r;
}

ZetaExpr ZetaExpr::operator*(const Rational& c) const {
    ZetaExpr r;
    if (c == 0) return r;
    for (const auto& [k, v] : terms_) r.add_term(k, v * c);
    return r;
}

namespace {
// multiset difference a \ b; false if b is not contained in a
bool multiset_subtract(const std::vector<int>& a, const std::vector<int>& b,
                       std::vector<int>& out) {
    out.clear();
    size_t i = 0, j = 0;
    while (i < a.size()) {
        if (j < b.size() && a[i] == b[j]) {
            ++i, ++j;
        } else if (j < b.size() && b[j] < a[i]) {
            return false;
        } else {
            out.push_back(a[i++]);
        }
    }
    return j == b.size();
}
}  // namespace

ZetaExpr ZetaExpr::operator/(const ZetaExpr& o) const {
    const auto* t = o.single_term();
    if (!t) throw std::domain_error("ZetaExpr division requires a monomial divisor");
    ZetaExpr r;
    std::vector<int> diff;
    for (const auto& [k, c] : terms_) {
        if (!multiset_subtract(k, t->first, diff))
            throw std::domain_error("ZetaExpr division: divisor arguments not contained in term");
        r.add_term(diff, c / t->second);
    }
    return r;
}

bool ZetaExpr::all_even_args() const {
    for (const auto& [k, c] : terms_)
        for (int a : k)
            if (a % 2 != 0) return false;
    return true;
}

PiMonomial ZetaExpr::exact_pi_value() const {
    if (divergent()) throw std::domain_error("divergent ZetaExpr");
    PiMonomial total;
    for (const auto& [k, c] : terms_) {
        PiMonomial term(c, 0);
        for (int a : k) {
            if (a % 2 != 0)
                throw std::domain_error("exact_pi_value requires even zeta arguments");
            term = term * zeta_even(a);
        }
        total += term;
    }
    return total;
}

std::string ZetaExpr::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << to_string(c);
        int i = 0;
        while (i < static_cast<int>(k.size())) {
            int j = i;
            while (j < static_cast<int>(k.size()) && k[j] == k[i]) ++j;
            os << " zeta(" << k[i] << ")";
            if (j - i > 1) os << "^" << j - i;
            i = j;
        }
    }
    return os.str();
}

std::string PiMonomial::str() const {
    if (is_zero()) return "0";
    std::string s = to_string(coeff);
    if (pi_exp != 0) {
        s += " * pi";
        if (pi_exp != 1) s += "^" + std::to_string(pi_exp);
    }
    return s;
}

std::string to_string(const PiMonomial& m) { return m.str(); }

}  // namespace mvv
