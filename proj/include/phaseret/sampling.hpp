#pragma once

#include "phaseret/types.hpp"

namespace phaseret {

// Equispaced angular lattice x_j = 2*pi*j/n on the circle of radius rho.
// n must be at least 4, rho in (0, 1].
CircleGrid make_circle_grid(std::size_t n, double rho);

// One circle of a modulus field as grid-carrying samples.
RealSamples circle_samples(const ModulusField& field, double rho);

// Value of the degree-n/2 trigonometric interpolant of the samples at angle t.
// Uses the cardinal form sin(n u/2) / (n tan(u/2)); within 1e-12 of a node the
// sample itself is returned (the cardinal function is 1 there, 0 elsewhere).
double trig_interpolate(const std::vector<double>& samples, double t);

// Spectral derivative of the trigonometric interpolant, evaluated on the nodes.
// Equivalent to differentiating the DFT representation with the Nyquist term
// dropped; n must be even.
std::vector<double> spectral_derivative(const std::vector<double>& samples);

}  // namespace phaseret
