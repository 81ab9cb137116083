#include "phaseret/paraconjugate.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "phaseret/minvalue.hpp"
#include "phaseret/sampling.hpp"

namespace phaseret {

namespace {

constexpr double sigma_tol = 1e-12;       // relative singular-value cutoff
constexpr double principal_floor = 1e-6;  // ||c_-||_inf below this * |c_0|: no poles
constexpr double cluster_tol = 1e-4;      // eigenvalue merge distance
constexpr double origin_snap = 1e-6;      // * r: pole counted as origin

}  // namespace

RealSamples pr_boundary(const RealSamples& inner_modulus_r) {
    RealSamples p;
    p.grid = inner_modulus_r.grid;
    p.values.resize(inner_modulus_r.values.size());
    for (std::size_t j = 0; j < p.values.size(); ++j) {
        const double v = inner_modulus_r.values[j];
        if (!(v >= 0.0)) throw input_error("inner modulus values must be non-negative");
        p.values[j] = v * v;
    }
    return p;
}

LaurentCoefficients laurent_coeffs(const RealSamples& pr, int N) {
    const std::size_t n = pr.grid.n;
    if (N < 1 || std::size_t(2 * N + 1) > n) throw input_error("N too large for the grid");
    LaurentCoefficients lc;
    lc.N = N;
    lc.r = pr.grid.rho;
    lc.coeffs.resize(std::size_t(2 * N + 1));
    for (int q = -N; q <= N; ++q) {
        cplx acc = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            acc += pr.values[j] * std::polar(1.0, -double(q) * pr.grid.nodes[j]);
        lc.coeffs[std::size_t(q + N)] = acc / double(n);
    }
    return lc;
}

PoleSet extract_inner_poles(const LaurentCoefficients& lc, int k_max) {
    if (k_max < 1) throw input_error("k_max must be at least 1");
    PoleSet out;

    double cneg = 0.0;
    for (int q = 1; q <= lc.N; ++q) cneg = std::max(cneg, std::abs(lc.c(-q)));
    if (cneg <= principal_floor * std::abs(lc.c(0))) return out;

    const int kh = std::min(k_max, (lc.N - 1) / 2);
    if (kh < 1) throw input_error("N too large for the grid");

    Eigen::MatrixXcd h0(kh, kh), h1(kh, kh);
    for (int i = 0; i < kh; ++i)
        for (int j = 0; j < kh; ++j) {
            h0(i, j) = lc.c(-(i + j + 1));
            h1(i, j) = lc.c(-(i + j + 2));
        }

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(h0, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sig = svd.singularValues();
    int K = 0;
    while (K < kh && sig(K) > sigma_tol * sig(0)) ++K;
    if (K == 0) return out;
    if (sig(0) / sig(K - 1) > 1e12)
        throw numeric_error("pole extraction unstable; increase n or reduce r");

    const Eigen::MatrixXcd u = svd.matrixU().leftCols(K);
    const Eigen::MatrixXcd v = svd.matrixV().leftCols(K);
    Eigen::MatrixXcd a = u.adjoint() * h1 * v;
    for (int j = 0; j < K; ++j) a.col(j) /= sig(j);

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> eig(a);
    if (eig.info() != Eigen::Success)
        throw numeric_error("pole extraction unstable; increase n or reduce r");

    // Cluster the eigenvalues (a p-fold pole surfaces as p nearby ones) and
    // classify against the construction radius.
    std::vector<std::pair<cplx, int>> clusters;
    for (int i = 0; i < K; ++i) {
        const cplx p = eig.eigenvalues()(i);
        if (!std::isfinite(p.real()) || !std::isfinite(p.imag()))
            throw numeric_error("pole extraction unstable; increase n or reduce r");
        bool merged = false;
        for (auto& [mean, cnt] : clusters) {
            if (std::abs(p - mean) < cluster_tol) {
                mean = (mean * double(cnt) + p) / double(cnt + 1);
                ++cnt;
                merged = true;
                break;
            }
        }
        if (!merged) clusters.push_back({p, 1});
    }
    for (const auto& [mean, cnt] : clusters) {
        if (std::abs(mean) < origin_snap * lc.r)
            out.origin_count += cnt;
        else if (std::abs(mean) < lc.r)
            out.inner_poles.insert(out.inner_poles.end(), std::size_t(cnt), mean);
        else
            out.discarded_outer += cnt;
    }
    return out;
}

BlaschkeProduct zeros_from_poles(const PoleSet& poles, double r) {
    if (!(r > 0.0) || r >= 1.0) throw input_error("radius must lie strictly inside the unit circle");
    BlaschkeProduct b;
    b.m = poles.origin_count;
    for (const cplx& p : poles.inner_poles) {
        const cplx a = p / r;
        if (std::abs(a) >= 1.0)
            throw input_error("inconsistent pole radius; r too small or spurious pole");
        b.zeros.push_back(a);
    }
    return b;
}

ReconstructionResult mqpc_retrieve(const ModulusField& measurements, double r, int N, int k_max) {
    OuterFactor outer(circle_samples(measurements, 1.0));
    InnerModulusField field = inner_modulus_field(measurements, outer, {r});
    const RealSamples& bmod = field.circles.at(r);

    const int n_eff = int(measurements.n);
    const int order = N > 0 ? N : std::min(n_eff / 2 - 1, 200);

    RealSamples pr = pr_boundary(bmod);
    LaurentCoefficients lc = laurent_coeffs(pr, order);
    PoleSet poles = extract_inner_poles(lc, k_max);
    BlaschkeProduct inner = zeros_from_poles(poles, r);

    // The z^m factor is invisible to the pole structure (it cancels against
    // its own reflection in P_r) but survives as the constant scale r^{2m}:
    // read the multiplicity off the circle-averaged log residual.
    double acc = 0.0;
    for (std::size_t j = 0; j < pr.values.size(); ++j) {
        double term = std::log(std::max(pr.values[j], 1e-300));
        for (const cplx& a : inner.zeros) {
            const cplx z = std::polar(r, pr.grid.nodes[j]);
            term -= 2.0 * std::log(std::abs((z - a) / (1.0 - std::conj(a) * z)));
        }
        acc += term;
    }
    acc /= double(pr.values.size());
    inner.m = std::max(0, int(std::lround(acc / (2.0 * std::log(r)))));

    std::vector<StageError> stages;
    stages.push_back({0, interior_misfit(measurements, outer, BlaschkeProduct{})});
    stages.push_back({inner.m + int(inner.zeros.size()), interior_misfit(measurements, outer, inner)});

    std::vector<double> recon_radii;
    for (double rho : measurements.radii)
        if (rho <= outer_rim_limit || rho == 1.0) recon_radii.push_back(rho);
    return ReconstructionResult{outer,
                                inner,
                                cplx(1.0, 0.0),
                                std::move(stages),
                                reconstruct(outer, inner, recon_radii),
                                "completed"};
}

}  // namespace phaseret
