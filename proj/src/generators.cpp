#include "phaseret/generators.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "phaseret/sampling.hpp"

namespace phaseret {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

void check_radii(const std::vector<double>& radii) {
    if (radii.empty()) throw input_error("at least one interior circle is required");
    for (double r : radii)
        if (!(r > 0.0) || !(r < 1.0))
            throw input_error("generator radii must lie strictly inside the unit circle");
    for (std::size_t i = 1; i < radii.size(); ++i)
        if (!(radii[i] > radii[i - 1])) throw input_error("generator radii must be strictly increasing");
}

template <class F>
GeneratedExample build_example(F&& f, std::size_t n, std::vector<double> radii) {
    std::sort(radii.begin(), radii.end());
    check_radii(radii);
    GeneratedExample ex;
    ex.field.n = n;
    for (double r : radii) {
        std::vector<double> row(n);
        for (std::size_t j = 0; j < n; ++j)
            row[j] = std::abs(f(std::polar(r, two_pi * double(j) / double(n))));
        ex.field.radii.push_back(r);
        ex.field.values.push_back(std::move(row));
    }
    ex.field.radii.push_back(1.0);
    std::vector<double> rim(n);
    ex.truth_boundary.grid = make_circle_grid(n, 1.0);
    ex.truth_boundary.values.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        cplx v = f(std::polar(1.0, two_pi * double(j) / double(n)));
        ex.truth_boundary.values[j] = v;
        rim[j] = std::abs(v);
    }
    ex.field.values.push_back(std::move(rim));
    return ex;
}

}  // namespace

GeneratedExample gen_example1(std::size_t n, const std::vector<double>& radii) {
    if (n < 16) throw input_error("example 1 needs at least 16 nodes");
    auto f = [](cplx z) {
        cplx num = 0.1867 * std::pow(z, 6) - 0.00869 * std::pow(z, 5);
        cplx den = (1.0 - 0.7842 * z) * (1.0 - 0.2669 * z);
        return num / den;
    };
    GeneratedExample ex = build_example(f, n, radii);
    ex.true_m = 5;
    ex.true_zeros = {cplx(0.00869 / 0.1867, 0.0)};
    return ex;
}

GeneratedExample gen_example2(const std::vector<cplx>& zeros, std::size_t n,
                              const std::vector<double>& radii) {
    if (zeros.size() != 10) throw input_error("example 2 takes exactly ten zeros");
    for (const cplx& a : zeros)
        if (!(std::abs(a) < 1.0)) throw input_error("example 2 zeros must lie strictly inside the unit circle");
    if (n < 16) throw input_error("example 2 needs at least 16 nodes");
    auto f = [&zeros](cplx z) {
        cplx acc(1.0, 0.0);
        for (const cplx& a : zeros) acc *= (z - a) / (1.0 - std::conj(a) * z);
        return acc;
    };
    GeneratedExample ex = build_example(f, n, radii);
    ex.true_zeros = zeros;
    ex.true_m = 0;
    return ex;
}

GeneratedExample gen_example2(std::uint64_t seed, std::size_t n, const std::vector<double>& radii) {
    return gen_example2(draw_example2_zeros(seed), n, radii);
}

double unit_uniform(std::mt19937_64& rng) {
    return double(rng() >> 11) * 0x1.0p-53;
}

std::vector<cplx> draw_example2_zeros(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<cplx> zeros(10);
    for (cplx& a : zeros) {
        double mod = 0.9 * unit_uniform(rng);
        double arg = two_pi * unit_uniform(rng);
        a = std::polar(mod, arg);
    }
    return zeros;
}

std::vector<cplx> random_separated_zeros(std::mt19937_64& rng, std::size_t count, double min_mod,
                                         double max_mod, double min_sep) {
    std::vector<cplx> zeros;
    while (zeros.size() < count) {
        double mod = min_mod + (max_mod - min_mod) * unit_uniform(rng);
        double arg = two_pi * unit_uniform(rng);
        cplx cand = std::polar(mod, arg);
        bool ok = true;
        for (const cplx& z : zeros)
            if (std::abs(cand - z) < min_sep) { ok = false; break; }
        if (ok) zeros.push_back(cand);
    }
    return zeros;
}

}  // namespace phaseret
