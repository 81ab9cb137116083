#pragma once

// Zero recovery through the para-conjugate product (MQPC): P_r on the unit
// circle is |B(re^{it})|^2, a rational function whose poles inside |z| < r
// sit at r*alpha_k.  The principal part of its Laurent series is exactly what
// the samples provide, so the poles come out of a Hankel (Prony) pencil built
// from the negative-index coefficients.

#include <vector>

#include "phaseret/factorization.hpp"
#include "phaseret/types.hpp"

namespace phaseret {

struct LaurentCoefficients {
    int N = 0;
    std::vector<cplx> coeffs;  // c_{-N}..c_{N}; index q + N
    double r = 0.0;

    cplx c(int q) const { return coeffs[std::size_t(q + N)]; }
};

struct PoleSet {
    std::vector<cplx> inner_poles;  // |pi| < r, repeated per multiplicity
    int origin_count = 0;           // poles snapped to 0 (spurious in exact arithmetic)
    int discarded_outer = 0;        // identified poles with |pi| >= r
};

// Elementwise square of |B(re^{it})|.
RealSamples pr_boundary(const RealSamples& inner_modulus_r);

// c_q = (1/n) sum_j P(x_j) e^{-i q x_j} for q = -N..N; needs 2N+1 <= n.
LaurentCoefficients laurent_coeffs(const RealSamples& pr, int N);

// Hankel pencil on the principal part: pole count from the singular-value
// gap, poles as eigenvalues of the shifted pencil, clustered within 1e-4 and
// recorded with multiplicity.
PoleSet extract_inner_poles(const LaurentCoefficients& lc, int k_max);

// alpha_k = pi_k / r; m = origin_count.
BlaschkeProduct zeros_from_poles(const PoleSet& poles, double r);

// Full chain at a single interior circle.  N <= 0 picks min(n/2 - 1, 200).
ReconstructionResult mqpc_retrieve(const ModulusField& measurements, double r = 0.8, int N = 0,
                                   int k_max = 20);

}  // namespace phaseret
