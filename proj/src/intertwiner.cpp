#include "hha/intertwiner.hpp"

#include <stdexcept>

#include "hha/linalg.hpp"

namespace hha {

UniPoly quotient_psi(const ModuleVector& v) {
    UniPoly out;
    for (const auto& [p, c] : v.terms()) {
        if (p.sectored())
            throw std::invalid_argument("psi is defined for single-sector vectors");
        out = out + UniPoly::monomial(p.level(), c);
    }
    return out;
}

UniPoly legendre_identify(const UniPoly& p_in_a) {
    UniPoly out;
    for (int n = 0; n <= p_in_a.degree(); ++n) {
        const Rat c = p_in_a.coeff(n);
        if (c != 0) out = out + c * legendre(n);
    }
    return out;
}

UniPoly phi_map(const ModuleVector& v) { return legendre_identify(quotient_psi(v)); }

bool intertwining_check(const ModuleVector& v, int r, const CocycleTable& table,
                        const WeightFunctional& phi) {
    if (r < 1) throw std::invalid_argument("tower exponent must be >= 1");
    const UniPoly lhs = phi_map(apply_Omega_power(v, r, table, phi));
    UniPoly rhs = phi_map(v);
    for (int i = 0; i < r; ++i) rhs = legendre_operator(rhs);
    return lhs == rhs;
}

OrthogonalRepresentative orthogonal_representative(int n, const CocycleTable& table,
                                                   const WeightFunctional& phi) {
    if (n < 0) throw std::invalid_argument("level must be >= 0");
    if (!table.is_hyperelliptic())
        throw std::invalid_argument("orthogonal representatives need a hyperelliptic table");
    OrthogonalRepresentative rep;
    rep.level = n;
    rep.norm_sq_scale = Rat(2) / Rat(2 * n + 1);
    if (n == 0) {
        rep.q_vector = ModuleVector::vacuum();
        return rep;
    }
    const GramMatrix g = gram_matrix(n, table, phi);
    // S(q, w) = 0 for every coefficient-sum-zero w, plus sum(q) = 1, is
    // equivalent to G q = t * ones with the normalization fixing t. Solve
    // G y = ones and rescale.
    const auto y = solve_linear(g.entries, Vec(g.basis.size(), 1));
    if (!y) throw std::runtime_error("Gram matrix singular at level " + std::to_string(n));
    Rat sum = 0;
    for (const auto& c : *y) sum += c;
    if (sum == 0)
        throw std::runtime_error("no coefficient-sum-1 representative at level " +
                                 std::to_string(n));
    for (std::size_t i = 0; i < g.basis.size(); ++i)
        rep.q_vector.add_term(g.basis[i], (*y)[i] / sum);
    return rep;
}

std::vector<std::vector<Rat>> ptilde_gram(int N, const CocycleTable& table,
                                          const WeightFunctional& phi) {
    std::vector<OrthogonalRepresentative> reps;
    reps.reserve(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) reps.push_back(orthogonal_representative(n, table, phi));
    std::vector<std::vector<Rat>> out(static_cast<std::size_t>(N) + 1,
                                      std::vector<Rat>(static_cast<std::size_t>(N) + 1, 0));
    for (int m = 0; m <= N; ++m)
        for (int n = 0; n <= N; ++n) {
            const Rat s = shapovalov(reps[static_cast<std::size_t>(m)].q_vector,
                                     reps[static_cast<std::size_t>(n)].q_vector, table, phi);
            out[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)] =
                m == n ? Rat(reps[static_cast<std::size_t>(n)].norm_sq_scale * s) : s;
        }
    return out;
}

bool canonicality_compare(const WeightFunctional& phi1, const WeightFunctional& phi2,
                          int N, const CocycleTable& table) {
    const Rat s = phi2.c() / phi1.c();
    for (int n = 0; n <= N; ++n) {
        const auto r1 = orthogonal_representative(n, table, phi1);
        const auto r2 = orthogonal_representative(n, table, phi2);
        if (r1.norm_sq_scale != r2.norm_sq_scale) return false;
        // undo the scaling covariance: q2_lambda * s^len(lambda)
        ModuleVector u;
        for (const auto& [p, c] : r2.q_vector.terms()) {
            Rat f = c;
            for (int i = 0; i < p.length(); ++i) f *= s;
            u.add_term(p, f);
        }
        if (u.terms().size() != r1.q_vector.terms().size()) return false;
        // cross-multiplication proportionality against q1, and kappa = sum(u)
        Rat kappa = 0;
        for (const auto& [p, c] : u.terms()) {
            if (r1.q_vector.coeff(p) == 0) return false;
            kappa += c;
        }
        for (const auto& [p, c] : u.terms())
            if (c != kappa * r1.q_vector.coeff(p)) return false;
        const Rat s1 = shapovalov(r1.q_vector, r1.q_vector, table, phi1);
        const Rat s2 = shapovalov(r2.q_vector, r2.q_vector, table, phi2);
        if (s2 != kappa * s1) return false;
    }
    return true;
}

}  // namespace hha
