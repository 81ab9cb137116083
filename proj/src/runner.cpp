#include "phaseret/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>

#include "phaseret/io.hpp"
#include "phaseret/minvalue.hpp"
#include "phaseret/paraconjugate.hpp"
#include "phaseret/sampling.hpp"

namespace phaseret {

namespace {

std::vector<cplx> load_zeros_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open zeros file '" + path + "'");
    std::string line;
    std::getline(in, line);
    if (line.size() && line.back() == '\r') line.pop_back();
    if (line != "re,im") throw input_error("zeros file must start with header re,im");
    std::vector<cplx> zeros;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.size() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos)
            throw input_error("malformed zeros row at line " + std::to_string(lineno));
        auto num = [&](const std::string& tok) {
            char* end = nullptr;
            double v = std::strtod(tok.c_str(), &end);
            if (end == tok.c_str() || *end != '\0' || !std::isfinite(v))
                throw input_error("malformed zeros row at line " + std::to_string(lineno));
            return v;
        };
        zeros.emplace_back(num(line.substr(0, comma)), num(line.substr(comma + 1)));
    }
    return zeros;
}

void store_zeros(const std::vector<cplx>& zeros, std::ostream& out) {
    out << "re,im\n";
    for (const cplx& z : zeros)
        out << format_double(z.real()) << "," << format_double(z.imag()) << "\n";
}

std::ofstream open_out(const std::filesystem::path& p) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw input_error("cannot open output file '" + p.string() + "'");
    return out;
}

nlohmann::json cplx_to_json(const cplx& z) {
    return nlohmann::json::array({z.real(), z.imag()});
}

cplx cplx_from_json(const nlohmann::json& j) {
    return cplx(j.at(0).get<double>(), j.at(1).get<double>());
}

BlaschkeProduct stage_product(int k, int m, const std::vector<cplx>& zeros) {
    BlaschkeProduct b;
    b.m = std::min(k, m);
    int extra = k - b.m;
    if (extra < 0 || std::size_t(extra) > zeros.size())
        throw input_error("stage index inconsistent with the recovered zero list");
    b.zeros.assign(zeros.begin(), zeros.begin() + extra);
    return b;
}

// Minimum-total-cost assignment (potentials formulation); returns, for each
// row, the column it is matched to.  Square matrices only.
std::vector<int> assign_min_cost(const std::vector<std::vector<double>>& cost) {
    int n = int(cost.size());
    if (n == 0) return {};
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            int i0 = p[j0], j1 = -1;
            double delta = inf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) { minv[j] = cur; way[j] = j0; }
                if (minv[j] < delta) { delta = minv[j]; j1 = j; }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) { u[p[j]] += delta; v[j] -= delta; }
                else minv[j] -= delta;
            }
            j0 = j1;
        } while (p[j0] != 0);
        do { int j1 = way[j0]; p[j0] = p[j1]; j0 = j1; } while (j0);
    }
    std::vector<int> row_to_col(n, -1);
    for (int j = 1; j <= n; ++j)
        if (p[j] > 0) row_to_col[p[j] - 1] = j - 1;
    return row_to_col;
}

}  // namespace

nlohmann::json config_to_json(const RunConfig& c) {
    nlohmann::json j;
    j["method"] = c.method;
    j["n"] = c.n;
    j["radii"] = c.radii;
    j["r"] = c.r;
    j["epsilon"] = c.epsilon;
    j["max_zeros"] = c.max_zeros;
    j["refine_iters"] = c.refine_iters;
    j["laurent_order"] = c.laurent_order;
    j["k_max"] = c.k_max;
    j["example"] = c.example;
    j["seed"] = c.seed;
    j["input"] = c.input_path;
    j["zeros_file"] = c.zeros_path;
    j["out"] = c.output_dir;
    return j;
}

RunConfig config_from_json(const nlohmann::json& j) {
    RunConfig c;
    c.method = j.at("method").get<std::string>();
    c.n = j.at("n").get<std::size_t>();
    c.radii = j.at("radii").get<std::vector<double>>();
    c.r = j.at("r").get<double>();
    c.epsilon = j.at("epsilon").get<double>();
    c.max_zeros = j.at("max_zeros").get<int>();
    c.refine_iters = j.at("refine_iters").get<int>();
    c.laurent_order = j.at("laurent_order").get<int>();
    c.k_max = j.at("k_max").get<int>();
    c.example = j.at("example").get<int>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.input_path = j.at("input").get<std::string>();
    c.zeros_path = j.at("zeros_file").get<std::string>();
    c.output_dir = j.at("out").get<std::string>();
    return c;
}

nlohmann::json report_to_json(const RunReport& r) {
    nlohmann::json j;
    j["method"] = r.method;
    j["n"] = r.n;
    j["m"] = r.m;
    nlohmann::json zeros = nlohmann::json::array();
    for (const cplx& z : r.zeros) zeros.push_back(cplx_to_json(z));
    j["zeros"] = std::move(zeros);
    nlohmann::json stages = nlohmann::json::array();
    for (const StageError& s : r.stage_errors) stages.push_back({{"k", s.k}, {"err", s.err}});
    j["stage_errors"] = std::move(stages);
    j["final_error"] = r.final_error;
    j["wall_time_sec"] = r.wall_time_sec;
    j["stop_reason"] = r.stop_reason;
    j["config"] = config_to_json(r.config);
    return j;
}

RunReport report_from_json(const nlohmann::json& j) {
    RunReport r;
    r.method = j.at("method").get<std::string>();
    r.n = j.at("n").get<std::size_t>();
    r.m = j.at("m").get<int>();
    for (const auto& z : j.at("zeros")) r.zeros.push_back(cplx_from_json(z));
    for (const auto& s : j.at("stage_errors"))
        r.stage_errors.push_back({s.at("k").get<int>(), s.at("err").get<double>()});
    r.final_error = j.at("final_error").get<double>();
    r.wall_time_sec = j.at("wall_time_sec").get<double>();
    r.stop_reason = j.at("stop_reason").get<std::string>();
    r.config = config_from_json(j.at("config"));
    return r;
}

RunOutput run(const RunConfig& config) {
    if (config.method != "mqmv" && config.method != "mqpc")
        throw input_error("unknown method '" + config.method + "'");
    if (config.example < 0 || config.example > 2)
        throw input_error("unknown example " + std::to_string(config.example));

    RunOutput out;
    out.report.config = config;
    out.report.method = config.method;

    if (config.example != 0) {
        if (config.n == 0) throw input_error("--n is required with --example");
        std::vector<double> radii = config.radii.empty() ? default_search_radii() : config.radii;
        std::sort(radii.begin(), radii.end());
        if (config.method == "mqpc") {
            bool present = false;
            for (double rho : radii)
                if (std::abs(rho - config.r) <= 1e-12) { present = true; break; }
            if (!present) {
                radii.push_back(config.r);
                std::sort(radii.begin(), radii.end());
            }
        }
        if (config.example == 1) {
            out.truth = gen_example1(config.n, radii);
        } else if (!config.zeros_path.empty()) {
            out.truth = gen_example2(load_zeros_file(config.zeros_path), config.n, radii);
        } else {
            out.truth = gen_example2(config.seed, config.n, radii);
        }
        out.has_truth = true;
        out.measured = out.truth.field;
    } else {
        if (config.input_path.empty()) throw input_error("either --input or --example is required");
        out.measured = load_modulus_field_file(config.input_path);
        if (config.n != 0 && config.n != out.measured.n)
            throw input_error("node count --n does not match the input file");
    }
    out.report.n = out.measured.n;

    auto t0 = std::chrono::steady_clock::now();
    if (config.method == "mqmv") {
        MinSearchConfig cfg;
        cfg.epsilon = config.epsilon;
        cfg.max_zeros = config.max_zeros;
        cfg.refine_iters = config.refine_iters;
        cfg.search_radii = config.radii;  // empty: every measured interior circle
        out.result = mqmv_retrieve(out.measured, cfg);
    } else {
        out.result = mqpc_retrieve(out.measured, config.r, config.laurent_order, config.k_max);
    }
    auto t1 = std::chrono::steady_clock::now();

    out.report.m = out.result.inner.m;
    out.report.zeros = out.result.inner.zeros;
    out.report.stage_errors = out.result.stage_errors;
    out.report.final_error = out.result.stage_errors.back().err;
    out.report.wall_time_sec = std::chrono::duration<double>(t1 - t0).count();
    out.report.stop_reason = out.result.stop_reason;

    if (!config.output_dir.empty()) {
        namespace fs = std::filesystem;
        fs::path dir(config.output_dir);
        fs::create_directories(dir);

        { auto f = open_out(dir / "report.json"); f << report_to_json(out.report).dump(2) << "\n"; }
        { auto f = open_out(dir / "measured.csv"); store_modulus_field(out.measured, f); }
        {
            std::vector<double> radii;
            std::vector<std::vector<cplx>> vals;
            for (const auto& [rho, samples] : out.result.reconstructed) {
                radii.push_back(rho);
                vals.push_back(samples.values);
            }
            auto f = open_out(dir / "reconstructed.csv");
            store_complex_circles(radii, vals, out.measured.n, f);
        }
        {
            auto f = open_out(dir / "plot_modulus.csv");
            f << "rho,j,measured,reconstructed\n";
            for (const auto& [rho, samples] : out.result.reconstructed) {
                const std::vector<double>& meas =
                    (rho == 1.0) ? out.measured.boundary() : out.measured.circle(rho);
                for (std::size_t j = 0; j < out.measured.n; ++j)
                    f << format_double(rho) << "," << j << "," << format_double(meas[j]) << ","
                      << format_double(std::abs(samples.values[j])) << "\n";
            }
        }
        {
            auto f = open_out(dir / "plot_errors.csv");
            f << "k,err\n";
            for (const StageError& s : out.report.stage_errors)
                f << s.k << "," << format_double(s.err) << "\n";
        }
        {
            auto f = open_out(dir / "charts.txt");
            f << "chart 1: modulus overlay\n"
                 "  source: plot_modulus.csv (columns rho, j, measured, reconstructed)\n"
                 "  one panel per circle rho; plot both modulus columns against the node\n"
                 "  angle 2*pi*j/n.  the curves should be indistinguishable on success.\n"
                 "\n"
                 "chart 2: stage error decay\n"
                 "  source: plot_errors.csv (columns k, err)\n"
                 "  err on a log axis against the stage index k; the curve decreases\n"
                 "  monotonically until the run stops.\n";
        }
        if (out.has_truth) {
            { auto f = open_out(dir / "truth_boundary.csv"); store_complex_samples(out.truth.truth_boundary, f); }
            { auto f = open_out(dir / "truth_zeros.csv"); store_zeros(out.truth.true_zeros, f); }
            CompareReport cr = compare_report(out.report, out.truth);
            auto f = open_out(dir / "comparison.json");
            f << compare_to_json(cr).dump(2) << "\n";
        }
    }
    return out;
}

std::vector<double> match_zero_sets(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    if (a.size() != b.size()) throw input_error("zero lists must have equal length");
    std::vector<std::vector<double>> cost(a.size(), std::vector<double>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) cost[i][j] = std::abs(a[i] - b[j]);
    std::vector<int> match = assign_min_cost(cost);
    std::vector<double> dist(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) dist[i] = cost[i][std::size_t(match[i])];
    return dist;
}

CompareReport compare_report(const RunReport& report, const GeneratedExample& truth) {
    CompareReport cr;
    cr.m_true = truth.true_m;
    cr.m_recovered = report.m;
    cr.zeros_true = truth.true_zeros.size();
    cr.zeros_recovered = report.zeros.size();

    std::vector<double> boundary(truth.truth_boundary.values.size());
    for (std::size_t j = 0; j < boundary.size(); ++j)
        boundary[j] = std::abs(truth.truth_boundary.values[j]);
    RealSamples rim;
    rim.grid = truth.truth_boundary.grid;
    rim.values = std::move(boundary);
    OuterFactor outer(rim);
    const ComplexSamples trace = outer.boundary_trace();
    const std::vector<cplx>& otrace = trace.values;

    for (const StageError& s : report.stage_errors) {
        BlaschkeProduct b = stage_product(s.k, report.m, report.zeros);
        std::vector<cplx> recon(otrace.size());
        for (std::size_t j = 0; j < otrace.size(); ++j) {
            cplx w = std::polar(1.0, rim.grid.nodes[j]);
            recon[j] = otrace[j] * blaschke_eval(b, w);
        }
        cr.stage_errors.push_back({s.k, relative_error(truth.truth_boundary.values, recon)});
    }
    cr.final_error = cr.stage_errors.back().err;

    if (cr.zeros_true == cr.zeros_recovered && cr.zeros_true > 0) {
        cr.match_distances = match_zero_sets(truth.true_zeros, report.zeros);
        cr.worst_match = *std::max_element(cr.match_distances.begin(), cr.match_distances.end());
    } else if (cr.zeros_true == cr.zeros_recovered) {
        cr.worst_match = 0.0;
    } else {
        cr.worst_match = std::numeric_limits<double>::infinity();
    }
    return cr;
}

nlohmann::json compare_to_json(const CompareReport& cr) {
    nlohmann::json j;
    nlohmann::json stages = nlohmann::json::array();
    for (const StageError& s : cr.stage_errors) stages.push_back({{"k", s.k}, {"err", s.err}});
    j["stage_errors"] = std::move(stages);
    j["final_error"] = cr.final_error;
    j["m_true"] = cr.m_true;
    j["m_recovered"] = cr.m_recovered;
    j["zeros_true"] = cr.zeros_true;
    j["zeros_recovered"] = cr.zeros_recovered;
    j["counts_match"] = cr.zeros_true == cr.zeros_recovered;
    j["match_distances"] = cr.match_distances;
    if (std::isfinite(cr.worst_match)) j["worst_match"] = cr.worst_match;
    return j;
}

}  // namespace phaseret
