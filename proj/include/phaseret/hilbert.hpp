#pragma once

// Circular Hilbert transform on equispaced nodes.
//
// The quadrature couples the cotangent-kernel trapezoid sum with a spectral
// derivative correction at the diagonal; off the grid the correction term is
// carried by the trigonometric interpolant of the samples.

#include <cstddef>

#include "phaseret/types.hpp"

namespace phaseret {

// Transform values at the sample nodes themselves.
RealSamples hilbert_on_nodes(const RealSamples& samples);

// Transform value at an arbitrary angle t.  Angles within 2*pi/(1e6*n) of a
// node are redirected to the on-node rule, which is the stable limit there.
double hilbert_offgrid(const RealSamples& samples, double t);

// Slow principal-value reference: midpoint rule on an m-point lattice with the
// singularity subtracted.  Used for cross-checks, not production work.
double hilbert_pv_reference(const RealSamples& samples, double t, std::size_t m = 4096);

}  // namespace phaseret
