#pragma once

#include "hha/verma.hpp"

namespace hha {

// Sugawara zero mode L_0 = (1/(omega1 phi(c))) sum_{k>=1} b_{-k} b_k, the sum
// truncated at the maximum level present in v (the remaining terms vanish).
// Requires a single-sector hyperelliptic table.
ModuleVector apply_L0(const ModuleVector& v, const CocycleTable& table,
                      const WeightFunctional& phi);

// Omega = -L_0 (L_0 + Id); acts as -n(n+1) on level n.
ModuleVector apply_Omega(const ModuleVector& v, const CocycleTable& table,
                         const WeightFunctional& phi);

// r-fold iteration of Omega; (-n(n+1))^r on level n.
ModuleVector apply_Omega_power(const ModuleVector& v, int r, const CocycleTable& table,
                               const WeightFunctional& phi);

// (-n(n+1))^r, with r = 0 giving 1.
Rat omega_eigenvalue(int n, int r);

}  // namespace hha
