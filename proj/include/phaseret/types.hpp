#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace phaseret {

using cplx = std::complex<double>;

// Bad data or bad configuration: CLI exit status 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation that cannot be completed at the requested accuracy: CLI exit status 3.
struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct CircleGrid {
    std::size_t n = 0;
    double rho = 1.0;
    std::vector<double> nodes;  // x_j = 2*pi*j/n

    bool operator==(const CircleGrid& o) const { return n == o.n && rho == o.rho; }
};

struct RealSamples {
    CircleGrid grid;
    std::vector<double> values;
};

struct ComplexSamples {
    CircleGrid grid;
    std::vector<cplx> values;
};

// Modulus measurements per circle; the only information the pipelines get about f.
// Radii sorted ascending, boundary circle rho = 1 always present (enforced by I/O
// and the generators).
struct ModulusField {
    std::size_t n = 0;
    std::vector<double> radii;                 // ascending, last one == 1.0
    std::vector<std::vector<double>> values;   // values[i][j] on circle radii[i]

    bool has_radius(double rho, double tol = 1e-12) const {
        for (double r : radii)
            if (std::abs(r - rho) <= tol) return true;
        return false;
    }
    const std::vector<double>& circle(double rho, double tol = 1e-12) const {
        for (std::size_t i = 0; i < radii.size(); ++i)
            if (std::abs(radii[i] - rho) <= tol) return values[i];
        throw input_error("interior circle at r missing");
    }
    const std::vector<double>& boundary() const {
        if (!has_radius(1.0)) throw input_error("missing boundary circle");
        return circle(1.0);
    }
    std::vector<double> interior_radii() const {
        std::vector<double> out;
        for (double r : radii)
            if (r < 1.0) out.push_back(r);
        return out;
    }
};

struct BlaschkeProduct {
    int m = 0;                  // origin multiplicity
    std::vector<cplx> zeros;    // each with 0 < |alpha| < 1
};

}  // namespace phaseret
