#pragma once

// Outer/inner factorization pieces: the outer factor built from boundary
// modulus data, Blaschke products, unimodular alignment, and the assembled
// reconstruction result shared by both retrieval variants.

#include <map>
#include <string>
#include <vector>

#include "phaseret/types.hpp"

namespace phaseret {

// Boundary modulus below this is treated as a zero on the circle (log not
// integrable at the sampled resolution).  Also the divisor floor in deflation.
inline constexpr double modulus_floor = 1e-13;

// Largest |z| the discretized Schwarz kernel is accepted at.
inline constexpr double outer_rim_limit = 0.98;

// Outer factor determined by the boundary modulus.  The boundary phase is the
// conjugate function of log-modulus; interior values come from the Schwarz
// kernel and are trustworthy only away from the rim.
class OuterFactor {
public:
    OuterFactor() = default;  // empty placeholder; populate via the real constructor
    explicit OuterFactor(const RealSamples& boundary_modulus);

    const CircleGrid& grid() const { return m_grid; }
    // Input modulus exactly as handed in.
    const std::vector<double>& modulus() const { return m_modulus; }
    const std::vector<double>& log_modulus() const { return m_log_modulus; }
    const std::vector<double>& phase() const { return m_phase; }

    // Boundary trace modulus_j * exp(i * phase_j).
    ComplexSamples boundary_trace() const;

    // Value at one interior point / all nodes of an interior circle.
    cplx evaluate(cplx z) const;
    ComplexSamples evaluate_circle(double rho) const;

private:
    CircleGrid m_grid;
    std::vector<double> m_modulus;
    std::vector<double> m_log_modulus;
    std::vector<double> m_phase;
};

inline OuterFactor outer_boundary(const RealSamples& boundary_modulus) {
    return OuterFactor(boundary_modulus);
}
inline cplx outer_interior(const OuterFactor& outer, cplx z) { return outer.evaluate(z); }

// B(z) = z^m prod (-conj(a)/|a|) (z-a)/(1-conj(a) z).
cplx blaschke_eval(const BlaschkeProduct& b, cplx z);
ComplexSamples blaschke_circle(const BlaschkeProduct& b, const CircleGrid& grid);

// Unimodular constant C minimizing ||f_ref - C*g||_2, i.e. <f_ref,g>/|<f_ref,g>|.
cplx align_constant(const ComplexSamples& g, const ComplexSamples& f_ref);
cplx align_constant(const std::vector<cplx>& g, const std::vector<cplx>& f_ref);

// min over unimodular C of ||f_ref - C*g||_2 / ||f_ref||_2; real overload is a
// plain relative error (no alignment freedom).
double relative_error(const ComplexSamples& f_ref, const ComplexSamples& g);
double relative_error(const std::vector<cplx>& f_ref, const std::vector<cplx>& g);
double relative_error(const RealSamples& f_ref, const RealSamples& g);

// Per circle, outer value times Blaschke value on the grid nodes; radius 1
// uses the boundary trace.
std::map<double, ComplexSamples> reconstruct(const OuterFactor& outer, const BlaschkeProduct& b,
                                             const std::vector<double>& radii);

struct StageError {
    int k;
    double err;
};

// Relative modulus misfit of |outer * B| against the measurements over
// interior circles at r <= 0.8 (the rim is quadrature-limited; if no circle
// sits that deep, whatever interior circles exist are used instead).
double interior_misfit(const ModulusField& measurements, const OuterFactor& outer,
                       const BlaschkeProduct& b);

struct ReconstructionResult {
    OuterFactor outer;
    BlaschkeProduct inner;
    cplx constant;
    std::vector<StageError> stage_errors;
    std::map<double, ComplexSamples> reconstructed;
    std::string stop_reason;
};

}  // namespace phaseret
