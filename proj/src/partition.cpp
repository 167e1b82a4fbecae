#include "hha/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hha {

void Partition::canonicalize() {
    if (sectors_.empty()) {
        std::sort(parts_.begin(), parts_.end(), std::greater<int>());
        return;
    }
    if (sectors_.size() != parts_.size())
        throw std::invalid_argument("sector list length mismatch");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(parts_.size());
    for (std::size_t i = 0; i < parts_.size(); ++i)
        pairs.emplace_back(parts_[i], sectors_[i]);
    // part descending, sector ascending within ties
    std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        parts_[i] = pairs[i].first;
        sectors_[i] = pairs[i].second;
    }
}

Partition Partition::from_parts(std::vector<int> parts) {
    for (int p : parts)
        if (p < 1) throw std::invalid_argument("partition parts must be >= 1");
    Partition r;
    r.parts_ = std::move(parts);
    r.canonicalize();
    return r;
}

Partition Partition::from_pairs(std::vector<std::pair<int, int>> pairs) {
    Partition r;
    r.parts_.reserve(pairs.size());
    r.sectors_.reserve(pairs.size());
    for (auto& [p, s] : pairs) {
        if (p < 1) throw std::invalid_argument("partition parts must be >= 1");
        if (s < 1) throw std::invalid_argument("sector indices are 1-based");
        r.parts_.push_back(p);
        r.sectors_.push_back(s);
    }
    r.canonicalize();
    return r;
}

int Partition::sector_at(std::size_t idx) const {
    return sectors_.empty() ? 1 : sectors_[idx];
}

int Partition::level() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::with_part(int part, int sector) const {
    if (part < 1) throw std::invalid_argument("partition parts must be >= 1");
    if (sector < 1) throw std::invalid_argument("sector indices are 1-based");
    Partition r = *this;
    if (sector > 1 && r.sectors_.empty())
        r.sectors_.assign(r.parts_.size(), 1);
    r.parts_.push_back(part);
    if (!r.sectors_.empty()) r.sectors_.push_back(sector);
    r.canonicalize();
    return r;
}

Partition Partition::without_index(std::size_t idx) const {
    if (idx >= parts_.size()) throw std::out_of_range("part index out of range");
    Partition r = *this;
    r.parts_.erase(r.parts_.begin() + static_cast<std::ptrdiff_t>(idx));
    if (!r.sectors_.empty())
        r.sectors_.erase(r.sectors_.begin() + static_cast<std::ptrdiff_t>(idx));
    return r;  // removing an element keeps canonical order
}

std::string Partition::str() const {
    if (parts_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += '+';
        s += std::to_string(parts_[i]);
        if (!sectors_.empty()) {
            s += '#';
            s += std::to_string(sectors_[i]);
        }
    }
    return s;
}

namespace {

// Shapes of n with every part <= max_part, first part largest, descending
// lexicographic order.
void shapes_rec(int n, int max_part, std::vector<int>& acc,
                std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(acc);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        acc.push_back(p);
        shapes_rec(n - p, p, acc, out);
        acc.pop_back();
    }
}

// Non-decreasing sector assignments of length len over {1..sectors},
// ascending lexicographic order.
void sector_multisets(int len, int sectors, int low, std::vector<int>& acc,
                      std::vector<std::vector<int>>& out) {
    if (len == 0) {
        out.push_back(acc);
        return;
    }
    for (int s = low; s <= sectors; ++s) {
        acc.push_back(s);
        sector_multisets(len - 1, sectors, s, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int sectors) {
    if (n < 0) throw std::invalid_argument("level must be >= 0");
    if (sectors < 1) throw std::invalid_argument("sector count must be >= 1");

    std::vector<std::vector<int>> shapes;
    std::vector<int> acc;
    shapes_rec(n, n == 0 ? 1 : n, acc, shapes);

    std::vector<Partition> result;
    for (const auto& shape : shapes) {
        if (sectors == 1) {
            result.push_back(Partition::from_parts(shape));
            continue;
        }
        // Independent sector multiset per run of equal parts; runs combined
        // with earlier (larger) parts varying slowest.
        std::vector<std::pair<std::size_t, std::size_t>> runs;  // [begin, end)
        std::size_t i = 0;
        while (i < shape.size()) {
            std::size_t j = i;
            while (j < shape.size() && shape[j] == shape[i]) ++j;
            runs.emplace_back(i, j);
            i = j;
        }
        std::vector<std::vector<std::vector<int>>> per_run;
        for (auto [b, e] : runs) {
            std::vector<std::vector<int>> ms;
            std::vector<int> sacc;
            sector_multisets(static_cast<int>(e - b), sectors, 1, sacc, ms);
            per_run.push_back(std::move(ms));
        }
        std::vector<std::size_t> idx(per_run.size(), 0);
        for (;;) {
            std::vector<std::pair<int, int>> pairs;
            for (std::size_t r = 0; r < runs.size(); ++r) {
                const auto& choice = per_run[r][idx[r]];
                for (std::size_t k = 0; k < choice.size(); ++k)
                    pairs.emplace_back(shape[runs[r].first + k], choice[k]);
            }
            result.push_back(Partition::from_pairs(std::move(pairs)));
            // odometer, last run fastest
            std::size_t r = per_run.size();
            while (r > 0) {
                --r;
                if (++idx[r] < per_run[r].size()) break;
                idx[r] = 0;
                if (r == 0) goto done_shape;
            }
            if (per_run.empty()) break;
        }
    done_shape:;
    }
    return result;
}

mpz_class partition_count(int n) {
    if (n < 0) throw std::invalid_argument("level must be >= 0");
    std::vector<mpz_class> dp(static_cast<std::size_t>(n) + 1, 0);
    dp[0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int j = k; j <= n; ++j) dp[j] += dp[j - k];
    return dp[static_cast<std::size_t>(n)];
}

Rat z_factor(const Partition& p) {
    if (p.sectored())
        throw std::invalid_argument("z_factor is defined for single-sector partitions");
    mpz_class z = 1;
    const auto& parts = p.parts();
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        const auto mult = static_cast<unsigned long>(j - i);
        mpz_class pw, fact;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(parts[i]), mult);
        mpz_fac_ui(fact.get_mpz_t(), mult);
        z *= pw * fact;
        i = j;
    }
    return Rat(z);
}

}  // namespace hha
