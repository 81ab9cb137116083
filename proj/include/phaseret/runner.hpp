#pragma once

// End-to-end run orchestration shared by the CLI and the bindings: config,
// method dispatch, report serialization, output files, truth comparison.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "phaseret/factorization.hpp"
#include "phaseret/generators.hpp"
#include "phaseret/types.hpp"

namespace phaseret {

struct RunConfig {
    std::string method = "mqmv";  // "mqmv" | "mqpc"
    std::size_t n = 64;
    std::vector<double> radii;    // interior circles; empty -> defaults
    double r = 0.8;               // mqpc extraction circle
    double epsilon = 1e-3;
    int max_zeros = 64;
    int refine_iters = 5;
    int laurent_order = 0;        // 0 -> min(n/2 - 1, 200)
    int k_max = 20;
    int example = 0;              // 0: read input_path
    std::uint64_t seed = 9;
    std::string input_path;
    std::string zeros_path;       // optional explicit zeros for example 2
    std::string output_dir;       // empty: keep everything in memory
};

struct RunReport {
    std::string method;
    std::size_t n = 0;
    int m = 0;
    std::vector<cplx> zeros;      // extraction order
    std::vector<StageError> stage_errors;
    double final_error = 0.0;
    double wall_time_sec = 0.0;
    std::string stop_reason;
    RunConfig config;
};

nlohmann::json config_to_json(const RunConfig& config);
RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json report_to_json(const RunReport& report);
RunReport report_from_json(const nlohmann::json& j);

struct RunOutput {
    RunReport report;
    ReconstructionResult result;
    ModulusField measured;
    bool has_truth = false;
    GeneratedExample truth;
};

RunOutput run(const RunConfig& config);

// Pairwise distances of the total-distance-minimizing assignment between two
// equally sized zero lists, in the order of `a`.
std::vector<double> match_zero_sets(const std::vector<cplx>& a, const std::vector<cplx>& b);

struct CompareReport {
    std::vector<StageError> stage_errors;  // boundary misfit vs truth, per stage
    double final_error = 0.0;
    int m_true = 0;
    int m_recovered = 0;
    std::size_t zeros_true = 0;
    std::size_t zeros_recovered = 0;
    std::vector<double> match_distances;   // empty when the counts differ
    double worst_match = 0.0;              // inf when the counts differ
};

CompareReport compare_report(const RunReport& report, const GeneratedExample& truth);
nlohmann::json compare_to_json(const CompareReport& cr);

}  // namespace phaseret
