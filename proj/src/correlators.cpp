#include "mvv/correlators.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace mvv {

namespace {

uint32_t crc32_update(uint32_t crc, const char* data, std::size_t len) {
    static const auto table = [] {
        std::array<uint32_t, 256> t{};
        for (uint32_t i = 0; i < 256; ++i) {
            uint32_t c = i;
            for (int j = 0; j < 8; ++j) c = (c >> 1) ^ (0xEDB88320u & (-(c & 1u)));
            t[i] = c;
        }
        return t;
    }();
    crc = ~crc;
    for (std::size_t i = 0; i < len; ++i)
        crc = (crc >> 8) ^ table[(crc ^ static_cast<unsigned char>(data[i])) & 0xFF];
    return ~crc;
}

constexpr const char* kCacheHeader = "mvv-correlator-cache v1";

}  // namespace

std::size_t CorrelatorEngine::KeyHash::operator()(
    const std::pair<int, std::vector<int>>& k) const {
    std::size_t h = static_cast<std::size_t>(k.first) * 0x9E3779B97F4A7C15ull;
    for (int x : k.second)
        h = (h ^ static_cast<std::size_t>(x + 1)) * 0x100000001B3ull;
    return h;
}

Rational CorrelatorEngine::psi(int g, std::vector<int> d) {
    const int n = static_cast<int>(d.size());
    if (2 * g - 2 + n <= 0)
        throw std::invalid_argument("psi_correlator: unstable (g,n)");
    long sum = 0;
    for (int x : d) {
        if (x < 0) throw std::invalid_argument("psi_correlator: negative exponent");
        sum += x;
    }
    if (sum != 3L * g - 3 + n) return Rational(0);
    std::sort(d.begin(), d.end());
    if (g == 0 && n == 3) return Rational(1);
    if (g == 1 && n == 1) return make_rational(1, 24);

    std::pair<int, std::vector<int>> key(g, std::move(d));
    {
        std::shared_lock lock(mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    Rational value = compute(g, key.second);
    {
        std::unique_lock lock(mu_);
        memo_.emplace(std::move(key), value);
    }
    return value;
}

Rational CorrelatorEngine::compute(int g, const std::vector<int>& d) {
    const int n = static_cast<int>(d.size());
    if (d.front() == 0) {
        // string equation
        Rational s(0);
        if (2 * g - 2 + (n - 1) > 0) {
            std::vector<int> rest(d.begin() + 1, d.end());
            for (int j = 0; j < n - 1; ++j) {
                if (rest[j] == 0) continue;
                std::vector<int> t = rest;
                --t[j];
                s += psi(g, std::move(t));
            }
        }
        return s;
    }
    if (d.front() == 1) {
        // dilaton equation
        if (2 * g - 2 + (n - 1) <= 0) return Rational(0);
        std::vector<int> rest(d.begin() + 1, d.end());
        return Rational(2 * g - 2 + (n - 1)) * psi(g, std::move(rest));
    }

    // DVV with pivot tau_{k+1} = smallest entry
    const int k = d.front() - 1;
    const std::vector<int> rest(d.begin() + 1, d.end());
    const int nr = n - 1;
    const Rational den(double_factorial(2 * k + 3));
    Rational total(0);

    for (int j = 0; j < nr; ++j) {
        std::vector<int> t;
        t.reserve(nr);
        for (int i = 0; i < nr; ++i)
            if (i != j) t.push_back(rest[i]);
        t.push_back(k + rest[j]);
        Rational coef = make_rational(double_factorial(2 * (k + rest[j]) + 1),
                                      Integer(den.get_num()) * double_factorial(2 * rest[j] - 1));
        total += coef * psi(g, std::move(t));
    }

    for (int a = 0; a <= k - 1; ++a) {
        const int b = k - 1 - a;
        Rational coef = make_rational(double_factorial(2 * a + 1) * double_factorial(2 * b + 1),
                                      2 * Integer(den.get_num()));
        // non-separating
        if (g >= 1 && 2 * (g - 1) - 2 + (nr + 2) > 0) {
            std::vector<int> t = rest;
            t.push_back(a);
            t.push_back(b);
            total += coef * psi(g - 1, std::move(t));
        }
        // separating
        for (int g1 = 0; g1 <= g; ++g1) {
            const int g2 = g - g1;
            for (unsigned mask = 0; mask < (1u << nr); ++mask) {
                std::vector<int> I, J;
                long sI = 0, sJ = 0;
                for (int i = 0; i < nr; ++i) {
                    if (mask >> i & 1u) {
                        I.push_back(rest[i]);
                        sI += rest[i];
                    } else {
                        J.push_back(rest[i]);
                        sJ += rest[i];
                    }
                }
                const int n1 = static_cast<int>(I.size()) + 1;
                const int n2 = static_cast<int>(J.size()) + 1;
                if (2 * g1 - 2 + n1 <= 0 || 2 * g2 - 2 + n2 <= 0) continue;
                if (sI + a != 3L * g1 - 3 + n1 || sJ + b != 3L * g2 - 3 + n2) continue;
                I.push_back(a);
                J.push_back(b);
                total += coef * psi(g1, std::move(I)) * psi(g2, std::move(J));
            }
        }
    }
    return total;
}

std::size_t CorrelatorEngine::cache_size() const {
    std::shared_lock lock(mu_);
    return memo_.size();
}

void CorrelatorEngine::clear() {
    std::unique_lock lock(mu_);
    memo_.clear();
}

void CorrelatorEngine::save(const std::string& path) const {
    std::ostringstream body;
    body << kCacheHeader << "\n";
    {
        std::shared_lock lock(mu_);
        // deterministic order
        std::vector<const Memo::value_type*> rows;
        rows.reserve(memo_.size());
        for (const auto& kv : memo_) rows.push_back(&kv);
        std::sort(rows.begin(), rows.end(), [](auto* a, auto* b) {
            return a->first < b->first;
        });
        for (const auto* kv : rows) {
            body << kv->first.first << ";";
            for (std::size_t i = 0; i < kv->first.second.size(); ++i) {
                if (i) body << ",";
                body << kv->first.second[i];
            }
            body << ";" << to_string(kv->second) << "\n";
        }
    }
    std::string text = body.str();
    uint32_t crc = crc32_update(0, text.data(), text.size());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write correlator cache: " + path);
    char buf[16];
    std::snprintf(buf, sizeof buf, "%08x", crc);
    out << text << "checksum " << buf << "\n";
}

CorrelatorEngine::LoadStatus CorrelatorEngine::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return LoadStatus::missing;
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    auto corrupt = [&] {
        clear();
        return LoadStatus::corrupt_rebuilt;
    };
    auto foot = text.rfind("checksum ");
    if (foot == std::string::npos) return corrupt();
    std::string body = text.substr(0, foot);
    uint32_t crc_stored = 0;
    {
        std::istringstream fs(text.substr(foot + 9));
        fs >> std::hex >> crc_stored;
        if (!fs) return corrupt();
    }
    if (crc32_update(0, body.data(), body.size()) != crc_stored) return corrupt();

    Memo staged;
    std::istringstream lines(body);
    std::string line;
    if (!std::getline(lines, line) || line != kCacheHeader) return corrupt();
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        auto p1 = line.find(';');
        auto p2 = line.find(';', p1 + 1);
        if (p1 == std::string::npos || p2 == std::string::npos) return corrupt();
        int g = 0;
        auto rc = std::from_chars(line.data(), line.data() + p1, g);
        if (rc.ec != std::errc()) return corrupt();
        std::vector<int> d;
        {
            std::string mid = line.substr(p1 + 1, p2 - p1 - 1);
            std::istringstream ms(mid);
            std::string tok;
            while (std::getline(ms, tok, ','))
                d.push_back(std::stoi(tok));
        }
        Rational v;
        try {
            v = rational_from_string(line.substr(p2 + 1));
        } catch (const std::invalid_argument&) {
            return corrupt();
        }
        if (!std::is_sorted(d.begin(), d.end())) return corrupt();
        staged.emplace(std::make_pair(g, std::move(d)), std::move(v));
    }
    std::unique_lock lock(mu_);
    memo_ = std::move(staged);
    return LoadStatus::loaded;
}

CorrelatorEngine& correlators() {
    static CorrelatorEngine engine;
    return engine;
}

Rational psi_correlator(int g, std::vector<int> d) {
    return correlators().psi(g, std::move(d));
}

}  // namespace mvv
