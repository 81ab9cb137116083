#include "phaseret/sampling.hpp"

#include <cmath>

namespace phaseret {

CircleGrid make_circle_grid(std::size_t n, double rho) {
    if (n < 4) throw input_error("node count must be at least 4");
    if (!(rho > 0.0) || rho > 1.0) throw input_error("radius must lie in (0, 1]");
    CircleGrid g;
    g.n = n;
    g.rho = rho;
    g.nodes.resize(n);
    for (std::size_t j = 0; j < n; ++j) g.nodes[j] = 2.0 * M_PI * double(j) / double(n);
    return g;
}

RealSamples circle_samples(const ModulusField& field, double rho) {
    RealSamples s;
    s.values = rho == 1.0 ? field.boundary() : field.circle(rho);
    s.grid = make_circle_grid(field.n, rho);
    return s;
}

static double wrap_pi(double u) {
    u = std::remainder(u, 2.0 * M_PI);
    return u;
}

double trig_interpolate(const std::vector<double>& samples, double t) {
    const std::size_t n = samples.size();
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double u = t - 2.0 * M_PI * double(j) / double(n);
        const double w = wrap_pi(u);
        if (std::abs(w) < 1e-12) return samples[j];
        acc += samples[j] * std::sin(0.5 * double(n) * u) / (double(n) * std::tan(0.5 * u));
    }
    return acc;
}

std::vector<double> spectral_derivative(const std::vector<double>& samples) {
    const std::size_t n = samples.size();
    if (n < 4) throw input_error("node count must be at least 4");
    if (n % 2 != 0) throw input_error("node count must be even");
    // D_kj = (1/2)(-1)^(k-j) cot((x_k - x_j)/2), zero diagonal. This is the
    // differentiation matrix of the symmetric trigonometric interpolant (the
    // Nyquist mode differentiates to zero).
    std::vector<double> out(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == k) continue;
            const double d = M_PI * (double(k) - double(j)) / double(n);
            const double sign = ((k + j) % 2 == 0) ? 1.0 : -1.0;
            acc += 0.5 * sign * samples[j] / std::tan(d);
        }
        out[k] = acc;
    }
    return out;
}

}  // namespace phaseret
