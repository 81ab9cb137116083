#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <doctest.h>

#include "phaseret/hilbert.hpp"
#include "phaseret/sampling.hpp"

using namespace phaseret;

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

RealSamples sample_rim(std::size_t n, double (*f)(double)) {
    RealSamples s;
    s.grid = make_circle_grid(n, 1.0);
    s.values.resize(n);
    for (std::size_t j = 0; j < n; ++j) s.values[j] = f(s.grid.nodes[j]);
    return s;
}

}  // namespace

TEST_CASE("conjugate of cos(kt) is sin(kt)") {
    std::size_t n = 32;
    for (int k = 1; k <= 5; ++k) {
        RealSamples s;
        s.grid = make_circle_grid(n, 1.0);
        s.values.resize(n);
        for (std::size_t j = 0; j < n; ++j) s.values[j] = std::cos(k * s.grid.nodes[j]);
        RealSamples h = hilbert_on_nodes(s);
        for (std::size_t j = 0; j < n; ++j)
            CHECK(h.values[j] == doctest::Approx(std::sin(k * s.grid.nodes[j])).epsilon(1e-12));

        for (std::size_t j = 0; j < n; ++j) s.values[j] = std::sin(k * s.grid.nodes[j]);
        h = hilbert_on_nodes(s);
        for (std::size_t j = 0; j < n; ++j)
            CHECK(h.values[j] == doctest::Approx(-std::cos(k * s.grid.nodes[j])).epsilon(1e-12));
    }
}

TEST_CASE("conjugate of a constant vanishes") {
    RealSamples s;
    s.grid = make_circle_grid(16, 1.0);
    s.values.assign(16, 3.5);
    for (double v : hilbert_on_nodes(s).values) CHECK(std::abs(v) < 1e-12);
}

TEST_CASE("off-grid evaluation snaps to the node rule near nodes") {
    std::size_t n = 32;
    RealSamples s = sample_rim(n, [](double t) { return std::cos(3.0 * t) + 0.5 * std::sin(t); });
    RealSamples h = hilbert_on_nodes(s);
    double t5 = s.grid.nodes[5];
    CHECK(hilbert_offgrid(s, t5) == doctest::Approx(h.values[5]).epsilon(1e-13));
    CHECK(hilbert_offgrid(s, t5 + 1e-14) == doctest::Approx(h.values[5]).epsilon(1e-13));
}

TEST_CASE("off-grid values match the analytic conjugate for band-limited data") {
    std::size_t n = 32;
    RealSamples s = sample_rim(n, [](double t) { return std::cos(2.0 * t) - 3.0 * std::sin(7.0 * t); });
    auto conj = [](double t) { return std::sin(2.0 * t) + 3.0 * std::cos(7.0 * t); };
    for (double t : {0.37, 1.21, 2.9, 4.44, 5.9})
        CHECK(hilbert_offgrid(s, t) == doctest::Approx(conj(t)).epsilon(1e-10));
}

TEST_CASE("node rule agrees with the principal-value reference") {
    std::size_t n = 64;
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    for (int trial = 0; trial < 3; ++trial) {
        RealSamples s;
        s.grid = make_circle_grid(n, 1.0);
        s.values.assign(n, 0.0);
        std::vector<double> a(n / 2), b(n / 2);
        for (std::size_t k = 0; k < n / 2; ++k) { a[k] = coef(rng); b[k] = coef(rng); }
        for (std::size_t j = 0; j < n; ++j) {
            double t = s.grid.nodes[j], acc = a[0];
            for (std::size_t k = 1; k < n / 2; ++k) acc += a[k] * std::cos(k * t) + b[k] * std::sin(k * t);
            s.values[j] = acc;
        }
        RealSamples h = hilbert_on_nodes(s);
        for (std::size_t j = 0; j < n; j += 7)
            CHECK(h.values[j] == doctest::Approx(hilbert_pv_reference(s, s.grid.nodes[j])).epsilon(1e-9));
    }
}

TEST_CASE("conjugate of a Poisson-kernel trace") {
    // u + iv is the boundary trace of 1/(1 - 0.5 z), analytic with real value 1
    // at 0.  Aliasing of the 0.5^k coefficient tail bounds the node error.
    std::size_t n = 64;
    RealSamples u = sample_rim(n, [](double t) { return (1.0 - 0.5 * std::cos(t)) / (1.25 - std::cos(t)); });
    RealSamples h = hilbert_on_nodes(u);
    double worst = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double t = u.grid.nodes[j];
        double v = 0.5 * std::sin(t) / (1.25 - std::cos(t));
        worst = std::max(worst, std::abs(h.values[j] - v));
    }
    CHECK(worst < 1e-8);
}
