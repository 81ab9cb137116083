#include "phaseret/hilbert.hpp"

#include <cmath>

#include "phaseret/sampling.hpp"

namespace phaseret {

namespace {

double on_node_row(const std::vector<double>& f, const std::vector<double>& x, std::size_t k,
                   double deriv_k) {
    const std::size_t n = f.size();
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        acc += f[j] / std::tan(0.5 * (x[k] - x[j]));
    }
    return acc / double(n) - 2.0 * deriv_k / double(n);
}

}  // namespace

RealSamples hilbert_on_nodes(const RealSamples& samples) {
    const std::size_t n = samples.grid.n;
    const std::vector<double> deriv = spectral_derivative(samples.values);

    RealSamples out;
    out.grid = samples.grid;
    out.values.resize(n);
    for (std::size_t k = 0; k < n; ++k)
        out.values[k] = on_node_row(samples.values, samples.grid.nodes, k, deriv[k]);
    return out;
}

double hilbert_offgrid(const RealSamples& samples, double t) {
    const std::size_t n = samples.grid.n;
    const auto& x = samples.grid.nodes;
    const auto& f = samples.values;

    const double tau = 2.0 * M_PI / double(n) / 1e6;
    // Near a node the cardinal correction degenerates; the on-node rule is the
    // correct limit, so snap there.
    for (std::size_t k = 0; k < n; ++k) {
        if (std::abs(std::remainder(t - x[k], 2.0 * M_PI)) < tau) {
            const std::vector<double> deriv = spectral_derivative(f);
            return on_node_row(f, x, k, deriv[k]);
        }
    }

    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += f[j] / std::tan(0.5 * (t - x[j]));
    const double p = trig_interpolate(f, t);
    return acc / double(n) - p / std::tan(0.5 * double(n) * t);
}

double hilbert_pv_reference(const RealSamples& samples, double t, std::size_t m) {
    // PV integral (1/2pi) \int cot((t-s)/2) f(s) ds with the singularity
    // removed: the cotangent kernel has zero principal value, so subtracting
    // f(t) leaves a bounded integrand; a lattice shifted half a cell off t
    // keeps every abscissa away from the pole.
    const double ft = trig_interpolate(samples.values, t);
    double acc = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        const double s = t + 2.0 * M_PI * (double(j) + 0.5) / double(m);
        const double fs = trig_interpolate(samples.values, s);
        acc += (fs - ft) / std::tan(0.5 * (t - s));
    }
    return acc / double(m);
}

}  // namespace phaseret
