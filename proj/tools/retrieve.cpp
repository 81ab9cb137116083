#include <complex>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "phaseret/runner.hpp"
#include "phaseret/types.hpp"

namespace {

int fail(const std::string& type, const std::string& message, int code) {
    nlohmann::json j;
    j["error"] = {{"type", type}, {"message", message}};
    std::cerr << j.dump() << "\n";
    return code;
}

std::vector<double> parse_radii(const std::string& list) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= list.size()) {
        std::size_t comma = list.find(',', pos);
        std::string tok = list.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        char* end = nullptr;
        double v = std::strtod(tok.c_str(), &end);
        if (tok.empty() || end == tok.c_str() || *end != '\0')
            throw phaseret::input_error("malformed --radii list: '" + tok + "'");
        out.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"phase retrieval from modulus samples on concentric circles"};

    phaseret::RunConfig config;
    std::string radii_list;
    bool seed_given = false;

    app.add_option("--method", config.method, "mqmv (minimum-modulus search) or mqpc (para-conjugate poles)")
        ->required()
        ->check(CLI::IsMember({"mqmv", "mqpc"}));
    app.add_option("--n", config.n, "nodes per circle")->required();
    auto* opt_input = app.add_option("--input", config.input_path, "modulus CSV (rho,j,modulus)");
    auto* opt_example = app.add_option("--example", config.example, "built-in example 1 or 2")
        ->check(CLI::IsMember({1, 2}));
    auto* opt_zeros = app.add_option("--zeros", config.zeros_path, "zeros CSV (re,im) for example 2");
    auto* opt_seed = app.add_option("--seed", config.seed, "zero-draw seed for example 2");
    app.add_option("--r", config.r, "extraction circle for mqpc")->capture_default_str();
    app.add_option("--radii", radii_list, "comma-separated interior circle radii");
    app.add_option("--epsilon", config.epsilon, "minimum-modulus acceptance threshold")->capture_default_str();
    app.add_option("--max-zeros", config.max_zeros, "cap on extracted zeros including origin orders")
        ->capture_default_str();
    app.add_option("--laurent-order", config.laurent_order, "coefficient order N (0: automatic)")
        ->capture_default_str();
    app.add_option("--kmax", config.k_max, "pencil size cap")->capture_default_str();
    app.add_option("--refine-iters", config.refine_iters, "local refinement iterations per zero")
        ->capture_default_str();
    app.add_option("--out", config.output_dir, "output directory")->required();

    opt_input->excludes(opt_example);
    opt_zeros->excludes(opt_seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("input", e.what(), 2);
    }

    try {
        if (opt_input->count() == 0 && opt_example->count() == 0)
            throw phaseret::input_error("exactly one of --input or --example is required");
        if (opt_zeros->count() > 0 && config.example != 2)
            throw phaseret::input_error("--zeros applies only to --example 2");
        seed_given = opt_seed->count() > 0;
        if (seed_given && config.example != 2)
            throw phaseret::input_error("--seed applies only to --example 2");
        if (!radii_list.empty()) config.radii = parse_radii(radii_list);

        phaseret::RunOutput out = phaseret::run(config);

        std::cout << "method=" << out.report.method << " n=" << out.report.n
                  << " m=" << out.report.m << " zeros=" << out.report.zeros.size()
                  << " final_error=" << out.report.final_error
                  << " stop=\"" << out.report.stop_reason << "\"\n"
                  << "report: " << config.output_dir << "/report.json\n";
        return 0;
    } catch (const phaseret::input_error& e) {
        return fail("input", e.what(), 2);
    } catch (const phaseret::numeric_error& e) {
        return fail("numeric", e.what(), 3);
    } catch (const std::exception& e) {
        return fail("internal", e.what(), 3);
    }
}
