#pragma once

// Synthetic measurement generators with ground truth attached.

#include <cstdint>
#include <random>
#include <vector>

#include "phaseret/types.hpp"

namespace phaseret {

struct GeneratedExample {
    ModulusField field;            // pipeline input: modulus per circle + boundary
    ComplexSamples truth_boundary; // oracle: complex boundary values
    std::vector<cplx> true_zeros;  // nontrivial zeros
    int true_m = 0;                // origin multiplicity
};

// f(z) = (0.1867 z^6 - 0.00869 z^5) / ((1 - 0.7842 z)(1 - 0.2669 z)):
// origin zero of order 5 plus a simple zero at 0.00869/0.1867.
GeneratedExample gen_example1(std::size_t n, const std::vector<double>& radii);

// f(z) = prod_{k=1}^{10} (z - a_k)/(1 - conj(a_k) z) with the given ten zeros.
GeneratedExample gen_example2(const std::vector<cplx>& zeros, std::size_t n,
                              const std::vector<double>& radii);

// Same, with the ten zeros drawn from the seed: modulus 0.9*u, angle 2*pi*u.
GeneratedExample gen_example2(std::uint64_t seed, std::size_t n,
                              const std::vector<double>& radii);

// Top 53 bits of the raw engine output as a uniform double in [0, 1).
double unit_uniform(std::mt19937_64& rng);

std::vector<cplx> draw_example2_zeros(std::uint64_t seed);

// Zeros uniform in modulus over [min_mod, max_mod] and in angle, redrawn
// until pairwise separation holds.  Test-ensemble helper.
std::vector<cplx> random_separated_zeros(std::mt19937_64& rng, std::size_t count, double min_mod,
                                         double max_mod, double min_sep);

}  // namespace phaseret
