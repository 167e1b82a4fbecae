#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hha/rational.hpp"

namespace hha {

/**
 * A multiset of positive integer parts, stored non-increasing. In sectored
 * mode each part carries a 1-based sector index and ties in part value are
 * ordered by non-decreasing sector, so the stored form is unique.
 *
 * Partitions index PBW monomials b_{-n_1}^{(j_1)} ... b_{-n_k}^{(j_k)} v and
 * therefore also the weight-space bases of the module.
 */
class Partition {
public:
    Partition() = default;

    // Single-sector partition; parts may be given in any order.
    static Partition from_parts(std::vector<int> parts);
    // Sectored partition from (part, sector) pairs, in any order.
    static Partition from_pairs(std::vector<std::pair<int, int>> pairs);

    const std::vector<int>& parts() const { return parts_; }
    const std::vector<int>& sectors() const { return sectors_; }
    bool sectored() const { return !sectors_.empty(); }

    // Sector of the idx-th part (1 in single-sector mode).
    int sector_at(std::size_t idx) const;

    int level() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // Insert one part and re-canonicalize. sector > 1 switches the result to
    // sectored mode.
    Partition with_part(int part, int sector = 1) const;
    // Remove the part at position idx.
    Partition without_index(std::size_t idx) const;

    // "3+1", "2#1+1#2" in sectored mode, "0" for the empty partition.
    std::string str() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    std::vector<int> sectors_;  // empty in single-sector mode
    void canonicalize();
};

// All canonical partitions of n over the given sector count, in a fixed
// deterministic order: part shapes in descending lexicographic order
// ([4], [3,1], [2,2], [2,1,1], [1,1,1,1]), sector assignments in ascending
// lexicographic order within a shape. For sectors == 1 the count is p(n).
std::vector<Partition> partitions_of(int n, int sectors = 1);

// p(n), consistent with partitions_of(n, 1).size().
mpz_class partition_count(int n);

// z_lambda = prod_i i^{m_i} m_i! over part multiplicities m_i.
// Rejects sectored partitions.
Rat z_factor(const Partition& p);

}  // namespace hha
