#include "hha/sugawara.hpp"

namespace hha {

namespace {

Rat sugawara_scale(const CocycleTable& table, const WeightFunctional& phi) {
    if (!table.is_hyperelliptic())
        throw std::invalid_argument("Sugawara operators need a single-sector hyperelliptic table");
    const Rat omega1 = table.bracket(1, 1, 1, -1);  // psi_{1,-1} = omega1
    const Rat denom = omega1 * phi.c();
    if (denom == 0) throw std::invalid_argument("omega1 * phi(c) must be non-zero");
    return Rat(1) / denom;
}

}  // namespace

ModuleVector apply_L0(const ModuleVector& v, const CocycleTable& table,
                      const WeightFunctional& phi) {
    const Rat scale = sugawara_scale(table, phi);
    ModuleVector sum;
    const int top = v.max_level();
    for (int k = 1; k <= top; ++k) sum += create(annihilate(v, k, 1, table, phi), k, 1);
    return scale * sum;
}

ModuleVector apply_Omega(const ModuleVector& v, const CocycleTable& table,
                         const WeightFunctional& phi) {
    const ModuleVector l0v = apply_L0(v, table, phi);
    return Rat(-1) * apply_L0(l0v + v, table, phi);
}

ModuleVector apply_Omega_power(const ModuleVector& v, int r, const CocycleTable& table,
                               const WeightFunctional& phi) {
    if (r < 1) throw std::invalid_argument("tower exponent must be >= 1");
    ModuleVector w = v;
    for (int i = 0; i < r; ++i) w = apply_Omega(w, table, phi);
    return w;
}

Rat omega_eigenvalue(int n, int r) {
    if (n < 0 || r < 0) throw std::invalid_argument("arguments must be non-negative");
    Rat base = Rat(-n) * Rat(n + 1);
    Rat out = 1;
    for (int i = 0; i < r; ++i) out *= base;
    return out;
}

}  // namespace hha
