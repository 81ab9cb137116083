#include "phaseret/minvalue.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "phaseret/sampling.hpp"

namespace phaseret {

std::vector<double> default_search_radii() {
    std::vector<double> r(32);
    for (std::size_t k = 0; k < r.size(); ++k)
        r[k] = 0.02 + double(k) * (0.95 - 0.02) / double(r.size() - 1);
    return r;
}

InnerModulusField inner_modulus_field(const ModulusField& measurements, const OuterFactor& outer,
                                      const std::vector<double>& radii) {
    InnerModulusField field;
    field.n = measurements.n;
    for (double r : radii) {
        if (!(r > 0.0) || r >= 1.0)
            throw input_error("search radii must lie strictly inside the unit circle");
        const std::vector<double>& meas = measurements.circle(r);
        ComplexSamples o = outer.evaluate_circle(r);
        RealSamples b;
        b.grid = o.grid;
        b.values.resize(field.n);
        for (std::size_t j = 0; j < field.n; ++j) {
            const double oa = std::abs(o.values[j]);
            if (oa <= modulus_floor)
                throw numeric_error("outer modulus below floor at an interior point");
            b.values[j] = meas[j] / oa;
        }
        field.circles.emplace(r, std::move(b));
    }
    return field;
}

InnerModulusField deflate(const InnerModulusField& field, cplx alpha) {
    InnerModulusField out;
    out.n = field.n;
    for (const auto& [r, samples] : field.circles) {
        RealSamples d = samples;
        for (std::size_t j = 0; j < field.n; ++j) {
            const cplx z = std::polar(r, samples.grid.nodes[j]);
            const double div =
                alpha == 0.0 ? std::abs(z) : std::abs((z - alpha) / (1.0 - std::conj(alpha) * z));
            d.values[j] /= std::max(div, modulus_floor);
        }
        out.circles.emplace(r, std::move(d));
    }
    return out;
}

namespace {

// Squared field laid out for interpolation: per-circle rows over a shared
// angular grid, circles ascending in radius.
struct SearchView {
    std::size_t n;
    std::vector<double> nodes;
    std::vector<double> radii;
    std::vector<std::vector<double>> w;  // squared values per circle

    explicit SearchView(const InnerModulusField& field) : n(field.n) {
        for (const auto& [r, samples] : field.circles) {
            radii.push_back(r);
            std::vector<double> row(n);
            for (std::size_t j = 0; j < n; ++j) row[j] = samples.values[j] * samples.values[j];
            w.push_back(std::move(row));
            if (nodes.empty()) nodes = samples.grid.nodes;
        }
    }

    // Trig-interpolate each of the (up to) six nearest circles at angle t,
    // then run Neville across radius.  The squared field is smooth in both
    // directions, unlike its square root at a zero.
    double val(double r, double t) const {
        std::vector<std::size_t> idx(radii.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return std::abs(radii[a] - r) < std::abs(radii[b] - r);
        });
        const std::size_t m = std::min<std::size_t>(6, idx.size());
        idx.resize(m);
        std::sort(idx.begin(), idx.end());

        std::vector<double> rs(m), p(m);
        for (std::size_t i = 0; i < m; ++i) {
            rs[i] = radii[idx[i]];
            p[i] = trig_interpolate(w[idx[i]], t);
        }
        for (std::size_t lev = 1; lev < m; ++lev)
            for (std::size_t i = 0; i + lev < m; ++i)
                p[i] = ((r - rs[i + lev]) * p[i] + (rs[i] - r) * p[i + 1]) / (rs[i] - rs[i + lev]);
        return std::abs(p[0]);
    }
};

struct RefineResult {
    double r, t, v;
    bool at_origin;
};

RefineResult refine(const SearchView& view, double r0, double t0, int iters) {
    const double r1 = view.radii.front();
    double hr = view.radii.size() > 1 ? view.radii[1] - view.radii[0] : r1 / 2.0;
    double ht = 4.0 * 2.0 * M_PI / double(view.n);
    const double r_lo = r1 / 2.0;
    const double r_hi = view.radii.back();

    double rc = r0, tc = t0, vc = view.val(rc, tc);
    for (int it = 0; it < iters; ++it) {
        struct Pt {
            double r, t, v;
        };
        std::vector<Pt> pts;
        for (double dr : {-hr, 0.0, hr}) {
            const double rr = std::min(std::max(rc + dr, r_lo), r_hi);
            for (double dt : {-ht, 0.0, ht}) pts.push_back({rr, tc + dt, view.val(rr, tc + dt)});
        }

        // Least-squares quadratic v ~ c0 + c1 dr + c2 dt + c3 dr^2 + c4 dr dt + c5 dt^2.
        Eigen::MatrixXd A(pts.size(), 6);
        Eigen::VectorXd y(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const double dr = pts[i].r - rc, dt = pts[i].t - tc;
            A(i, 0) = 1.0;
            A(i, 1) = dr;
            A(i, 2) = dt;
            A(i, 3) = dr * dr;
            A(i, 4) = dr * dt;
            A(i, 5) = dt * dt;
            y(i) = pts[i].v;
        }
        Eigen::VectorXd c =
            A.jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(y);

        // Vertex step, only when the fitted Hessian is positive definite and
        // the step stays within twice the current stencil.
        const double h00 = 2.0 * c(3), h01 = c(4), h11 = 2.0 * c(5);
        const double det = h00 * h11 - h01 * h01;
        if (h00 > 0.0 && det > 0.0) {
            const double s0 = (-c(1) * h11 + c(2) * h01) / det;
            const double s1 = (c(1) * h01 - c(2) * h00) / det;
            if (std::abs(s0) <= 2.0 * hr && std::abs(s1) <= 2.0 * ht) {
                const double rr = std::min(std::max(rc + s0, r_lo), r_hi);
                const double tt = tc + s1;
                pts.push_back({rr, tt, view.val(rr, tt)});
            }
        }

        const auto best = std::min_element(pts.begin(), pts.end(),
                                           [](const Pt& a, const Pt& b) { return a.v < b.v; });
        if (best->v < vc) {
            rc = best->r;
            tc = best->t;
            vc = best->v;
        }
        hr *= 0.5;
        ht *= 0.5;
    }
    return {rc, tc, vc, rc < 0.75 * r1};
}

}  // namespace

std::optional<cplx> find_min_zero(const InnerModulusField& field, const MinSearchConfig& cfg) {
    if (field.circles.empty()) throw input_error("no interior circle available");
    SearchView view(field);

    double best_v = view.w[0][0];
    double best_r = view.radii[0], best_t = view.nodes[0];
    for (std::size_t i = 0; i < view.radii.size(); ++i)
        for (std::size_t j = 0; j < view.n; ++j)
            if (view.w[i][j] < best_v) {
                best_v = view.w[i][j];
                best_r = view.radii[i];
                best_t = view.nodes[j];
            }

    const RefineResult ref = refine(view, best_r, best_t, cfg.refine_iters);
    if (ref.at_origin) return cplx(0.0, 0.0);
    if (std::sqrt(ref.v) <= cfg.epsilon) return std::polar(ref.r, ref.t);
    return std::nullopt;
}

namespace {

// Relative modulus misfit of |outer * B| against the measurements, over the
// interior circles at r <= 0.8 (rim circles are quadrature-limited and would
// swamp the metric; fall back to whatever interior circles exist).
struct MisfitEval {
    const ModulusField* meas;
    std::vector<double> radii;
    std::vector<std::vector<double>> outer_abs;
    std::vector<double> nodes;

    MisfitEval(const ModulusField& measurements, const OuterFactor& outer) : meas(&measurements) {
        for (double r : measurements.interior_radii())
            if (r <= 0.8 + 1e-12) radii.push_back(r);
        if (radii.empty())
            for (double r : measurements.interior_radii())
                if (r <= outer_rim_limit) radii.push_back(r);
        if (radii.empty()) throw input_error("no interior circle available");
        for (double r : radii) {
            ComplexSamples o = outer.evaluate_circle(r);
            std::vector<double> row(o.values.size());
            for (std::size_t j = 0; j < row.size(); ++j) row[j] = std::abs(o.values[j]);
            outer_abs.push_back(std::move(row));
            if (nodes.empty()) nodes = o.grid.nodes;
        }
    }

    double operator()(const BlaschkeProduct& b) const {
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < radii.size(); ++i) {
            const std::vector<double>& m = meas->circle(radii[i]);
            for (std::size_t j = 0; j < m.size(); ++j) {
                const double g =
                    outer_abs[i][j] * std::abs(blaschke_eval(b, std::polar(radii[i], nodes[j])));
                const double d = m[j] - g;
                num += d * d;
                den += m[j] * m[j];
            }
        }
        return std::sqrt(num / den);
    }
};

}  // namespace

ReconstructionResult mqmv_retrieve(const ModulusField& measurements, const MinSearchConfig& cfg) {
    OuterFactor outer(circle_samples(measurements, 1.0));
    const std::vector<double> radii =
        cfg.search_radii.empty() ? measurements.interior_radii() : cfg.search_radii;
    if (radii.empty()) throw input_error("no interior circle available");
    InnerModulusField field = inner_modulus_field(measurements, outer, radii);

    const MisfitEval misfit(measurements, outer);
    BlaschkeProduct cur{0, {}};
    std::vector<StageError> stages;
    stages.push_back({0, misfit(cur)});

    // Origin multiplicity from the radial slope of the circle-averaged log
    // field (two smallest circles).  A zero inside the innermost circle is
    // radially indistinguishable from the origin and lands here too.
    int mhat = 0;
    if (field.circles.size() >= 2) {
        auto it = field.circles.begin();
        const auto& [r1, s1] = *it;
        ++it;
        const auto& [r2, s2] = *it;
        double mean1 = 0.0, mean2 = 0.0;
        for (std::size_t j = 0; j < field.n; ++j) {
            mean1 += std::log(std::max(s1.values[j], modulus_floor));
            mean2 += std::log(std::max(s2.values[j], modulus_floor));
        }
        mean1 /= double(field.n);
        mean2 /= double(field.n);
        mhat = int(std::lround((mean2 - mean1) / std::log(r2 / r1)));
        mhat = std::max(0, std::min(mhat, cfg.max_zeros));
    }
    for (int k = 1; k <= mhat; ++k) {
        field = deflate(field, 0.0);
        cur.m = k;
        stages.push_back({k, misfit(cur)});
    }

    double err_prev = stages.back().err;
    std::string stop = "max zeros reached";
    while (cur.m + int(cur.zeros.size()) < cfg.max_zeros) {
        const auto cand = find_min_zero(field, cfg);
        if (!cand) {
            stop = "no sub-threshold minimum";
            break;
        }
        BlaschkeProduct tent = cur;
        if (*cand == 0.0)
            tent.m += 1;
        else
            tent.zeros.push_back(*cand);
        const double err_new = misfit(tent);
        if (err_new >= err_prev) {
            stop = "error stopped decreasing";
            break;
        }
        field = deflate(field, *cand);
        cur = std::move(tent);
        stages.push_back({cur.m + int(cur.zeros.size()), err_new});
        err_prev = err_new;
    }

    std::vector<double> recon_radii;
    for (double r : measurements.radii)
        if (r <= outer_rim_limit || r == 1.0) recon_radii.push_back(r);
    return ReconstructionResult{outer,  cur, cplx(1.0, 0.0), std::move(stages),
                                reconstruct(outer, cur, recon_radii), stop};
}

}  // namespace phaseret
