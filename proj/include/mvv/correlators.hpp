#pragma once

#include <cstddef>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "mvv/rational.hpp"

namespace mvv {

// psi-class intersection numbers <tau_{d_1} ... tau_{d_n}>_g computed by the
// Virasoro (DVV) recursion with string/dilaton shortcuts and a memo table
// over canonical keys (d sorted ascending). The recursion pivots on the
// smallest entry; this keeps the reachable key set small enough to evaluate
// two-point correlators well past genus 60.
class CorrelatorEngine {
   public:
    // Order of d is irrelevant. Returns 0 when sum(d) != 3g-3+n.
    // Throws std::invalid_argument when 2g-2+n <= 0 or some d_i < 0.
    Rational psi(int g, std::vector<int> d);

    std::size_t cache_size() const;
    void clear();

    enum class LoadStatus { loaded, missing, corrupt_rebuilt };
    // Line-oriented versioned format with a whole-file checksum footer.
    // A corrupt or mismatched file leaves the cache empty and reports it.
    LoadStatus load(const std::string& path);
    void save(const std::string& path) const;

   private:
    struct KeyHash {
        std::size_t operator()(const std::pair<int, std::vector<int>>& k) const;
    };
    using Memo =
        std::unordered_map<std::pair<int, std::vector<int>>, Rational, KeyHash>;

    Rational compute(int g, const std::vector<int>& d);

    Memo memo_;
    mutable std::shared_mutex mu_;
};

// Process-wide engine used by the higher-level modules.
CorrelatorEngine& correlators();

// Convenience wrapper over the global engine.
Rational psi_correlator(int g, std::vector<int> d);

}  // namespace mvv
