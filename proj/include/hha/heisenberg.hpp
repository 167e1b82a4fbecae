#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "hha/rational.hpp"

namespace hha {

// Raised when an operation needs a bracket key beyond the tabulated mode
// range. Distinguishes "structurally zero" (off-band) from "not tabulated".
struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * Finitely banded, skew-symmetric table of central-bracket scalars:
 * [b_m^(i), b_n^(j)] = entry(i,j,m,n) * c. Entries are exact rationals,
 * already evaluated at a fixed rational point; entries vanish whenever
 * |m+n| exceeds the band width.
 */
class CocycleTable {
public:
    // key = {i, j, m, n}
    using Key = std::array<int, 4>;
    using Record = std::tuple<int, int, int, int, Rat>;

    // Single-sector table with entry(1,1,m,-m) = m*omega1 for 1 <= m <=
    // max_mode, band width 0. Rejects omega1 <= 0.
    static CocycleTable hyperelliptic(const Rat& omega1, int max_mode);

    // Build from explicit records. With complete_skew (the default) one-sided
    // entries get their skew mirror filled in; pass false to construct
    // deliberately broken tables for validation tests.
    static CocycleTable from_records(int sector_count, int band_width, int max_mode,
                                     const std::vector<Record>& records,
                                     bool complete_skew = true);

    // Cocycle file format: JSON text with fields sector_count, band_width,
    // max_mode, evaluation_point ("p/q"), entries: [{i,j,m,n,value}].
    // Completes one-sided skew pairs, then validates; throws
    // std::runtime_error with a description on parse or validation failure.
    static CocycleTable load(const std::string& json_text);

    int sector_count() const { return sector_count_; }
    int band_width() const { return band_width_; }
    int max_mode() const { return max_mode_; }
    const Rat& evaluation_point() const { return evaluation_point_; }
    bool is_hyperelliptic() const { return sector_count_ == 1 && band_width_ == 0; }
    const std::map<Key, Rat>& entries() const { return entries_; }

    // The scalar psi^(ij)_{mn}; 0 outside the support. Throws
    // std::out_of_range for bad sector indices and TruncationError for
    // in-band keys beyond max_mode.
    Rat bracket(int i, int m, int j, int n) const;

    // List of violated invariants (skew-symmetry keys, band violations);
    // empty means valid.
    std::vector<std::string> validate() const;

private:
    int sector_count_ = 1;
    int band_width_ = 0;
    int max_mode_ = 0;
    Rat evaluation_point_ = 0;
    std::map<Key, Rat> entries_;
};

// The highest weight: the values phi(b_0^(j)) per sector and phi(c).
class WeightFunctional {
public:
    WeightFunctional(std::vector<Rat> b0_values, Rat c_value);

    const Rat& c() const { return c_value_; }
    const Rat& b0(int sector) const;
    int sector_count() const { return static_cast<int>(b0_values_.size()); }

private:
    std::vector<Rat> b0_values_;
    Rat c_value_;
};

}  // namespace hha
