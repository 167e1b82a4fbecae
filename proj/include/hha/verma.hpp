#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hha/heisenberg.hpp"
#include "hha/partition.hpp"

namespace hha {

/**
 * Finitely supported rational combination of PBW monomials, keyed by
 * partition: an element of the phi-Verma module in its Fock realization.
 * Zero coefficients are never stored; the vacuum is {0 -> 1}.
 */
class ModuleVector {
public:
    ModuleVector() = default;

    static ModuleVector vacuum();
    static ModuleVector basis(Partition p);

    const std::map<Partition, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(const Partition& p) const;
    void add_term(const Partition& p, const Rat& c);

    // Largest level in the support; 0 for the zero vector.
    int max_level() const;

    ModuleVector& operator+=(const ModuleVector& o);
    friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) {
        a += b;
        return a;
    }
    friend ModuleVector operator-(const ModuleVector& a, const ModuleVector& b);
    friend ModuleVector operator*(const Rat& s, ModuleVector v);
    bool operator==(const ModuleVector&) const = default;

private:
    std::map<Partition, Rat> terms_;
};

// Creation b_{-k}^(j): each partition gains the part (k, j); coefficients
// unchanged (the negative-mode subalgebra is abelian).
ModuleVector create(const ModuleVector& v, int k, int sector = 1);

// Annihilation b_k^(i) by Leibniz contraction against each part, weighted by
// bracket(i,k,j_p,-l_p)*phi(c).
ModuleVector annihilate(const ModuleVector& v, int k, int sector,
                        const CocycleTable& table, const WeightFunctional& phi);

// (mode, sector); mode < 0 creates, mode > 0 annihilates, mode 0 acts as the
// scalar phi(b_0^(sector)).
using Generator = std::pair<int, int>;

// Applies generators right-to-left: the last element of word acts first.
ModuleVector apply_word(const ModuleVector& v, const std::vector<Generator>& word,
                        const CocycleTable& table, const WeightFunctional& phi);

// The contravariant Shapovalov form, evaluated by applying the anti-involuted
// word of each term of v to w and reading off the vacuum coefficient.
Rat shapovalov(const ModuleVector& v, const ModuleVector& w,
               const CocycleTable& table, const WeightFunctional& phi);

struct GramMatrix {
    int level = 0;
    std::vector<Partition> basis;             // deterministic order
    std::vector<std::vector<Rat>> entries;    // symmetric, dense

    // {"level":n, "basis":["3+1",...], "entries":[["p/q",...],...]}
    std::string to_json() const;
};

GramMatrix gram_matrix(int n, const CocycleTable& table, const WeightFunctional& phi);
Rat gram_det(int n, const CocycleTable& table, const WeightFunctional& phi);

struct AdmissibilityResult {
    bool admissible = true;
    int degenerate_level = -1;        // first degenerate level on failure
    std::vector<Rat> kernel_witness;  // kernel vector of G_n at that level
};

// True iff gram_det(n) != 0 for 1 <= n <= N.
AdmissibilityResult is_p_admissible_up_to(int N, const CocycleTable& table,
                                          const WeightFunctional& phi);

// Splits terms by level; concatenation reassembles v.
std::map<int, ModuleVector> level_decompose(const ModuleVector& v);

}  // namespace hha
