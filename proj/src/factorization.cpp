#include "phaseret/factorization.hpp"

#include <cmath>

#include "phaseret/hilbert.hpp"

namespace phaseret {

OuterFactor::OuterFactor(const RealSamples& boundary_modulus)
    : m_grid(boundary_modulus.grid), m_modulus(boundary_modulus.values) {
    const std::size_t n = m_grid.n;
    if (m_modulus.size() != n) throw input_error("sample count does not match grid");
    for (double m : m_modulus) {
        if (!std::isfinite(m)) throw input_error("modulus must be finite");
        if (m <= modulus_floor)
            throw input_error(
                "boundary zero or near-zero; log|f| not integrable at the sampled resolution");
    }

    m_log_modulus.resize(n);
    for (std::size_t j = 0; j < n; ++j) m_log_modulus[j] = std::log(m_modulus[j]);

    RealSamples u;
    u.grid = m_grid;
    u.values = m_log_modulus;
    m_phase = hilbert_on_nodes(u).values;
}

ComplexSamples OuterFactor::boundary_trace() const {
    ComplexSamples out;
    out.grid = m_grid;
    out.values.resize(m_grid.n);
    for (std::size_t j = 0; j < m_grid.n; ++j)
        out.values[j] = std::polar(m_modulus[j], m_phase[j]);
    return out;
}

cplx OuterFactor::evaluate(cplx z) const {
    // Tolerance keeps polar-constructed points at exactly the limit radius
    // from tripping on the hypot rounding.
    if (std::abs(z) > outer_rim_limit * (1.0 + 1e-12))
        throw numeric_error("evaluation too near boundary for quadrature accuracy");
    // Schwarz kernel trapezoid: exp((1/n) sum_j (w_j+z)/(w_j-z) log m_j).
    cplx acc = 0.0;
    for (std::size_t j = 0; j < m_grid.n; ++j) {
        const cplx w = std::polar(1.0, m_grid.nodes[j]);
        acc += (w + z) / (w - z) * m_log_modulus[j];
    }
    return std::exp(acc / double(m_grid.n));
}

ComplexSamples OuterFactor::evaluate_circle(double rho) const {
    if (rho > outer_rim_limit)
        throw numeric_error("evaluation too near boundary for quadrature accuracy");
    ComplexSamples out;
    out.grid = CircleGrid{m_grid.n, rho, m_grid.nodes};
    out.values.resize(m_grid.n);
    for (std::size_t k = 0; k < m_grid.n; ++k)
        out.values[k] = evaluate(std::polar(rho, m_grid.nodes[k]));
    return out;
}

cplx blaschke_eval(const BlaschkeProduct& b, cplx z) {
    cplx v = 1.0;
    for (int q = 0; q < b.m; ++q) v *= z;
    for (const cplx& a : b.zeros)
        v *= (-std::conj(a) / std::abs(a)) * (z - a) / (1.0 - std::conj(a) * z);
    return v;
}

ComplexSamples blaschke_circle(const BlaschkeProduct& b, const CircleGrid& grid) {
    ComplexSamples out;
    out.grid = grid;
    out.values.resize(grid.n);
    for (std::size_t k = 0; k < grid.n; ++k)
        out.values[k] = blaschke_eval(b, std::polar(grid.rho, grid.nodes[k]));
    return out;
}

cplx align_constant(const std::vector<cplx>& g, const std::vector<cplx>& f_ref) {
    if (g.size() != f_ref.size()) throw input_error("alignment requires equal sample counts");
    cplx ip = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) ip += f_ref[j] * std::conj(g[j]);
    const double mag = std::abs(ip);
    if (mag == 0.0) throw numeric_error("alignment undefined (orthogonal reference)");
    return ip / mag;
}

cplx align_constant(const ComplexSamples& g, const ComplexSamples& f_ref) {
    if (!(g.grid == f_ref.grid)) throw input_error("alignment requires matching grids");
    return align_constant(g.values, f_ref.values);
}

double relative_error(const std::vector<cplx>& f_ref, const std::vector<cplx>& g) {
    double den = 0.0;
    for (const cplx& v : f_ref) den += std::norm(v);
    if (den == 0.0) throw input_error("zero reference norm");
    const cplx c = align_constant(g, f_ref);
    double num = 0.0;
    for (std::size_t j = 0; j < f_ref.size(); ++j) num += std::norm(f_ref[j] - c * g[j]);
    return std::sqrt(num / den);
}

double relative_error(const ComplexSamples& f_ref, const ComplexSamples& g) {
    if (!(f_ref.grid == g.grid)) throw input_error("relative error requires matching grids");
    return relative_error(f_ref.values, g.values);
}

double relative_error(const RealSamples& f_ref, const RealSamples& g) {
    if (!(f_ref.grid == g.grid)) throw input_error("relative error requires matching grids");
    double num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < f_ref.values.size(); ++j) {
        const double d = f_ref.values[j] - g.values[j];
        num += d * d;
        den += f_ref.values[j] * f_ref.values[j];
    }
    if (den == 0.0) throw input_error("zero reference norm");
    return std::sqrt(num / den);
}

double interior_misfit(const ModulusField& measurements, const OuterFactor& outer,
                       const BlaschkeProduct& b) {
    std::vector<double> radii;
    for (double r : measurements.interior_radii())
        if (r <= 0.8 + 1e-12) radii.push_back(r);
    if (radii.empty())
        for (double r : measurements.interior_radii())
            if (r <= outer_rim_limit) radii.push_back(r);
    if (radii.empty()) throw input_error("no interior circle available");

    double num = 0.0, den = 0.0;
    for (double r : radii) {
        const std::vector<double>& m = measurements.circle(r);
        const ComplexSamples o = outer.evaluate_circle(r);
        for (std::size_t j = 0; j < m.size(); ++j) {
            const double g =
                std::abs(o.values[j]) * std::abs(blaschke_eval(b, std::polar(r, o.grid.nodes[j])));
            const double d = m[j] - g;
            num += d * d;
            den += m[j] * m[j];
        }
    }
    return std::sqrt(num / den);
}

std::map<double, ComplexSamples> reconstruct(const OuterFactor& outer, const BlaschkeProduct& b,
                                             const std::vector<double>& radii) {
    std::map<double, ComplexSamples> out;
    for (double rho : radii) {
        ComplexSamples o = rho == 1.0 ? outer.boundary_trace() : outer.evaluate_circle(rho);
        const CircleGrid grid{outer.grid().n, rho, outer.grid().nodes};
        ComplexSamples bv = blaschke_circle(b, grid);
        ComplexSamples g;
        g.grid = grid;
        g.values.resize(grid.n);
        for (std::size_t j = 0; j < grid.n; ++j) g.values[j] = o.values[j] * bv.values[j];
        out.emplace(rho, std::move(g));
    }
    return out;
}

}  // namespace phaseret
