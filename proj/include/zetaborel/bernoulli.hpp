#pragma once

#include <cstddef>
#include <fstream>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "zetaborel/rational.hpp"

namespace zetaborel {

/// Grow-only table of first-kind Bernoulli numbers (B_1 = -1/2, generating
/// function z/(e^z - 1)). Extension is computed from the triangular
/// recurrence obtained from B.H = id:
///
///   sum_{j=0}^{n} C(n,j) B_j / (n - j + 1) = [n == 0]
///
/// Already-computed entries are never mutated; readers of existing entries
/// only take a shared lock.
class BernoulliTable {
public:
    BernoulliTable() : values_{Rat(1)} {}

    Rat get(std::size_t k) {
        {
            std::shared_lock lock(mu_);
            if (k < values_.size()) return values_[k];
        }
        std::unique_lock lock(mu_);
        extend_locked(k);
        return values_[k];
    }

    std::size_t computed() const {
        std::shared_lock lock(mu_);
        return values_.size();
    }

    /// One line per entry, "k num/den", append-only format.
    void save(const std::string& path) const {
        std::shared_lock lock(mu_);
        std::ofstream out(path);
        if (!out) throw std::runtime_error("BernoulliTable::save: cannot write " + path);
        for (std::size_t k = 0; k < values_.size(); ++k)
            out << k << ' ' << rat_to_string(values_[k]) << '\n';
    }

    /// Loads a cache file and validates it by re-deriving the last entry from
    /// the preceding ones. Returns false (table untouched) when the file is
    /// missing; throws on a corrupt or inconsistent file.
    bool load(const std::string& path) {
        std::ifstream in(path);
        if (!in) return false;
        std::vector<Rat> loaded;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            const auto sp = line.find(' ');
            if (sp == std::string::npos) throw std::runtime_error("bernoulli cache: bad line '" + line + "'");
            const std::size_t k = std::stoul(line.substr(0, sp));
            if (k != loaded.size()) throw std::runtime_error("bernoulli cache: non-contiguous index");
            loaded.push_back(rat_from_string(line.substr(sp + 1)));
        }
        if (loaded.empty() || loaded[0] != 1) throw std::runtime_error("bernoulli cache: missing B_0 = 1");
        if (loaded.size() > 1) {
            const std::size_t n = loaded.size() - 1;
            Rat s = 0;
            for (std::size_t j = 0; j < n; ++j)
                s += Rat(binomial(static_cast<long long>(n), static_cast<long long>(j))) * loaded[j] /
                     Rat(static_cast<long long>(n - j + 1));
            if (-s != loaded[n]) throw std::runtime_error("bernoulli cache: last entry fails the recurrence");
        }
        std::unique_lock lock(mu_);
        if (loaded.size() > values_.size()) values_ = std::move(loaded);
        return true;
    }

private:
    void extend_locked(std::size_t k) {
        while (values_.size() <= k) {
            const std::size_t n = values_.size();
            Rat s = 0;
            for (std::size_t j = 0; j < n; ++j)
                s += Rat(binomial(static_cast<long long>(n), static_cast<long long>(j))) * values_[j] /
                     Rat(static_cast<long long>(n - j + 1));
            values_.push_back(-s);
        }
    }

    mutable std::shared_mutex mu_;
    std::vector<Rat> values_;
};

inline BernoulliTable& bernoulli_table() {
    static BernoulliTable table;
    return table;
}

/// First-kind B_k (B_1 = -1/2).
inline Rat bernoulli(std::size_t k) { return bernoulli_table().get(k); }

/// Second-kind B+_k: equals B_k except B+_1 = +1/2.
inline Rat bernoulli_second(std::size_t k) {
    if (k == 1) return make_rat(1, 2);
    return bernoulli(k);
}

/// beta+_k = B_k / k for k != 1, beta+_1 = +1/2.
inline Rat beta_plus(std::size_t k) {
    if (k == 0) throw std::domain_error("beta_plus: k must be >= 1");
    if (k == 1) return make_rat(1, 2);
    return bernoulli(k) / Rat(static_cast<long long>(k));
}

}  // namespace zetaborel
