#pragma once

// Zero recovery by minimum search (MQMV): divide measured modulus by the
// outer modulus on interior circles, then repeatedly locate and deflate the
// smallest field value until it no longer dips below the threshold.

#include <map>
#include <optional>
#include <vector>

#include "phaseret/factorization.hpp"
#include "phaseret/types.hpp"

namespace phaseret {

// |B(re^{it})| per interior circle.
struct InnerModulusField {
    std::size_t n = 0;
    std::map<double, RealSamples> circles;
};

struct MinSearchConfig {
    double epsilon = 1e-3;   // acceptance threshold on the refined minimum
    int max_zeros = 64;      // cap on total zero count including origin orders
    int refine_iters = 5;    // pattern-search shrink steps
    std::vector<double> search_radii;  // empty: every interior circle present
};

// 32 circles covering [0.02, 0.95].  The inner edge sits low enough that
// small nontrivial zeros stay radially separable from the origin cluster.
std::vector<double> default_search_radii();

InnerModulusField inner_modulus_field(const ModulusField& measurements, const OuterFactor& outer,
                                      const std::vector<double>& radii);

// Global grid minimum of the squared field, refined by a shrinking 3x3
// pattern search with a quadratic vertex step.  Returns the zero candidate
// (0 for an origin snap), or nothing when the refined minimum stays above
// cfg.epsilon.
std::optional<cplx> find_min_zero(const InnerModulusField& field, const MinSearchConfig& cfg);

// Divide out one Blaschke factor (alpha = 0 divides by r).  The divisor is
// floored so a node sitting on the removed zero cannot blow up.
InnerModulusField deflate(const InnerModulusField& field, cplx alpha);

ReconstructionResult mqmv_retrieve(const ModulusField& measurements, const MinSearchConfig& cfg);

}  // namespace phaseret
