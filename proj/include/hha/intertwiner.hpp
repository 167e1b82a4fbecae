#pragma once

#include <vector>

#include "hha/legendre.hpp"
#include "hha/sugawara.hpp"
#include "hha/verma.hpp"

namespace hha {

// The quotient psi: every level-n PBW monomial maps to a^n; linear extension.
// Rejects sectored input.
UniPoly quotient_psi(const ModuleVector& v);

// The identification Psi: a^n -> P_n(x), extended linearly.
UniPoly legendre_identify(const UniPoly& p_in_a);

// Phi = Psi o psi.
UniPoly phi_map(const ModuleVector& v);

// Checks Phi(Omega^r v) = L^r Phi(v), exact polynomial equality.
bool intertwining_check(const ModuleVector& v, int r, const CocycleTable& table,
                        const WeightFunctional& phi);

/**
 * Square-root-free record of the level-n orthogonal vector: P~_n =
 * sqrt(h_n) * Q_n where Q_n has rational coefficients summing to 1 and
 * norm_sq_scale holds h_n = 2/(2n+1). At omega1 = phi(c) = 1 one has
 * S(Q_n, Q_n) = 1, so S(P~_n, P~_n) = h_n.
 */
struct OrthogonalRepresentative {
    int level = 0;
    ModuleVector q_vector;
    Rat norm_sq_scale;
};

// The unique level-n vector S-orthogonal to ker(psi) with coefficient sum 1.
// Throws std::runtime_error naming the level when G_n is singular.
OrthogonalRepresentative orthogonal_representative(int n, const CocycleTable& table,
                                                   const WeightFunctional& phi);

// (N+1)x(N+1) table: off-diagonal entries S(Q_m, Q_n) (zero by weight
// preservation), diagonal entries h_n * S(Q_n, Q_n).
std::vector<std::vector<Rat>> ptilde_gram(int N, const CocycleTable& table,
                                          const WeightFunctional& phi);

// True iff the representatives from the two functionals agree for all
// n <= N once the phi(c) scaling covariance is taken out: with
// s = phi2(c)/phi1(c), the vectors (q2_lambda * s^len(lambda)) and q1 must be
// proportional (exact cross-multiplication), and the norms must satisfy
// S2(Q2,Q2) = kappa * S1(Q1,Q1) with kappa the proportionality constant.
bool canonicality_compare(const WeightFunctional& phi1, const WeightFunctional& phi2,
                          int N, const CocycleTable& table);

}  // namespace hha
