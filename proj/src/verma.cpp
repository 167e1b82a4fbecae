#include "hha/verma.hpp"

#include <algorithm>

#include "hha/linalg.hpp"
#include "json.hpp"

namespace hha {

ModuleVector ModuleVector::vacuum() {
    ModuleVector v;
    v.terms_[Partition()] = 1;
    return v;
}

ModuleVector ModuleVector::basis(Partition p) {
    ModuleVector v;
    v.terms_[std::move(p)] = 1;
    return v;
}

Rat ModuleVector::coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rat(0) : it->second;
}

void ModuleVector::add_term(const Partition& p, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int ModuleVector::max_level() const {
    int m = 0;
    for (const auto& [p, c] : terms_) m = std::max(m, p.level());
    return m;
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
}

ModuleVector operator-(const ModuleVector& a, const ModuleVector& b) {
    ModuleVector r = a;
    for (const auto& [p, c] : b.terms()) r.add_term(p, -c);
    return r;
}

ModuleVector operator*(const Rat& s, ModuleVector v) {
    if (s == 0) return ModuleVector();
    ModuleVector r;
    for (const auto& [p, c] : v.terms()) r.add_term(p, s * c);
    return r;
}

ModuleVector create(const ModuleVector& v, int k, int sector) {
    if (k < 1) throw std::invalid_argument("creation mode must be >= 1");
    ModuleVector r;
    for (const auto& [p, c] : v.terms()) r.add_term(p.with_part(k, sector), c);
    return r;
}

ModuleVector annihilate(const ModuleVector& v, int k, int sector,
                        const CocycleTable& table, const WeightFunctional& phi) {
    if (k < 1) throw std::invalid_argument("annihilation mode must be >= 1");
    ModuleVector r;
    for (const auto& [p, c] : v.terms()) {
        for (std::size_t idx = 0; idx < p.parts().size(); ++idx) {
            const Rat w = table.bracket(sector, k, p.sector_at(idx), -p.parts()[idx]);
            if (w == 0) continue;
            r.add_term(p.without_index(idx), c * w * phi.c());
        }
    }
    return r;
}

ModuleVector apply_word(const ModuleVector& v, const std::vector<Generator>& word,
                        const CocycleTable& table, const WeightFunctional& phi) {
    ModuleVector r = v;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const auto [mode, sector] = *it;
        if (mode == 0)
            r = phi.b0(sector) * r;
        else if (mode < 0)
            r = create(r, -mode, sector);
        else
            r = annihilate(r, mode, sector, table, phi);
    }
    return r;
}

Rat shapovalov(const ModuleVector& v, const ModuleVector& w,
               const CocycleTable& table, const WeightFunctional& phi) {
    Rat total = 0;
    const Partition empty;
    for (const auto& [p, c] : v.terms()) {
        // omega(b_{-l1}...b_{-lr}) = b_{lr}...b_{l1}; rightmost acts first.
        std::vector<Generator> word;
        word.reserve(p.parts().size());
        for (std::size_t idx = p.parts().size(); idx-- > 0;)
            word.emplace_back(p.parts()[idx], p.sector_at(idx));
        total += c * apply_word(w, word, table, phi).coeff(empty);
    }
    return total;
}

std::string GramMatrix::to_json() const {
    nlohmann::json j;
    j["level"] = level;
    auto& jb = j["basis"] = nlohmann::json::array();
    for (const auto& p : basis) jb.push_back(p.str());
    auto& je = j["entries"] = nlohmann::json::array();
    for (const auto& row : entries) {
        nlohmann::json jr = nlohmann::json::array();
        for (const auto& e : row) jr.push_back(rat_str(e));
        je.push_back(std::move(jr));
    }
    return j.dump();
}

GramMatrix gram_matrix(int n, const CocycleTable& table, const WeightFunctional& phi) {
    GramMatrix g;
    g.level = n;
    g.basis = partitions_of(n, table.sector_count());
    const std::size_t d = g.basis.size();
    g.entries.assign(d, std::vector<Rat>(d, 0));
    for (std::size_t p = 0; p < d; ++p) {
        const ModuleVector vp = ModuleVector::basis(g.basis[p]);
        for (std::size_t q = p; q < d; ++q) {
            Rat s = shapovalov(vp, ModuleVector::basis(g.basis[q]), table, phi);
            g.entries[p][q] = s;
            g.entries[q][p] = s;
        }
    }
    return g;
}

Rat gram_det(int n, const CocycleTable& table, const WeightFunctional& phi) {
    return det_bareiss(gram_matrix(n, table, phi).entries);
}

AdmissibilityResult is_p_admissible_up_to(int N, const CocycleTable& table,
                                          const WeightFunctional& phi) {
    for (int n = 1; n <= N; ++n) {
        GramMatrix g = gram_matrix(n, table, phi);
        if (det_bareiss(g.entries) != 0) continue;
        AdmissibilityResult r;
        r.admissible = false;
        r.degenerate_level = n;
        if (auto k = kernel_vector(g.entries)) r.kernel_witness = *k;
        return r;
    }
    return {};
}

std::map<int, ModuleVector> level_decompose(const ModuleVector& v) {
    std::map<int, ModuleVector> out;
    for (const auto& [p, c] : v.terms()) out[p.level()].add_term(p, c);
    return out;
}

}  // namespace hha
