#include "fiedler/cli.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "fiedler/closedform.hpp"
#include "fiedler/graph.hpp"
#include "fiedler/optimize.hpp"
#include "fiedler/report.hpp"
#include "fiedler/resistance.hpp"
#include "fiedler/spectral.hpp"
#include "fiedler/symmetry.hpp"

namespace fiedler::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void print_report(const Report& report, const std::string& format, std::ostream& out) {
    out << (format == "kv" ? report.to_kv() : report.to_text());
}

void add_weights(Report& report, const std::vector<double>& weights) {
    for (std::size_t k = 0; k < weights.size(); ++k)
        report.add("weight_" + std::to_string(k + 1), weights[k]);
}

Report run_spectrum(const std::string& path) {
    const WeightedGraph g = parse_graph(read_file(path));
    const SpectralDecomposition dec = eigendecompose(laplacian(g));

    Report report("spectrum");
    report.add("file", path);
    report.add("vertices", g.vertex_count());
    report.add("edges", g.edge_count());
    report.add("connected", g.connected());
    for (int k = 0; k < dec.n(); ++k)
        report.add("eigenvalue_" + std::to_string(k + 1), dec.eigenvalues[k]);
    report.add("lambda2", dec.eigenvalues[1]);
    if (g.connected()) {
        const FiedlerPair fied = fiedler(dec);
        report.add("spectral_gap", fied.gap);
        report.add("degenerate", fied.degenerate);
        for (std::size_t i = 0; i < fied.vector.size(); ++i)
            report.add("fiedler_" + std::to_string(i + 1), fied.vector[i]);
    }
    return report;
}

Report run_resistance(const std::string& path) {
    const WeightedGraph g = parse_graph(read_file(path));
    if (!g.connected())
        throw std::invalid_argument("resistance requires a connected graph");
    const ResistanceProfile profile = resistance_profile(g);
    const double kirchhoff = kirchhoff_total(eigendecompose(laplacian(g)));

    Report report("resistance");
    report.add("file", path);
    report.add("vertices", g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j = i + 1; j < g.vertex_count(); ++j)
            report.add("r_" + std::to_string(i + 1) + "_" + std::to_string(j + 1),
                       profile.pairwise(i, j));
    report.add("total", profile.total);
    report.add("kirchhoff_total", kirchhoff);
    report.add("difference", profile.total - kirchhoff);
    return report;
}

void add_closed_form_reference(Report& report, const WeightedGraph& g,
                               const OptimizationResult& result) {
    if (!is_path(g)) return;
    if (g.vertex_count() == 3) {
        report.add("reference_lambda2", 1.0);
        report.add("lambda2_deviation", result.lambda2 - 1.0);
    } else if (g.vertex_count() == 4) {
        const P4Optimum opt = p4_optimum();
        report.add("reference_lambda2", opt.lambda2);
        report.add("reference_r0", opt.r0);
        report.add("lambda2_deviation", result.lambda2 - opt.lambda2);
        report.add("r1_deviation", 1.0 / result.weights[0] - opt.r0);
    }
}

Report run_optimize(const std::string& path, const OptimizerConfig& config, bool allow_partial,
                    int& exit_code) {
    const WeightedGraph g = parse_graph(read_file(path));
    const OptimizationResult result = maximize_connectivity(g, config);

    Report report("optimize");
    report.add("file", path);
    report.add("vertices", g.vertex_count());
    report.add("edges", g.edge_count());
    add_weights(report, result.weights);
    report.add("lambda2", result.lambda2);
    report.add("total_resistance", result.total_resistance);
    report.add("product", result.product);
    report.add("iterations", result.iterations);
    report.add("converged", result.converged);
    report.add("degenerate_fiedler", result.degenerate_fiedler);
    for (std::size_t s = 0; s < result.restart_products.size(); ++s)
        report.add("start_" + std::to_string(s) + "_product", result.restart_products[s]);
    add_closed_form_reference(report, g, result);

    exit_code = result.converged || allow_partial ? kExitOk : kExitNumerical;
    return report;
}

Report run_conjecture(const std::string& path, const OptimizerConfig& config,
                      double invariance_tol, int& exit_code) {
    const WeightedGraph g = parse_graph(read_file(path));
    const AutomorphismGroup group = automorphisms(g, /*ignore_weights=*/true);
    const OptimizationResult result = maximize_connectivity(g, config);
    const ConjectureVerdict verdict = check_conjecture(g, result, invariance_tol);

    Report report("conjecture");
    report.add("file", path);
    report.add("vertices", g.vertex_count());
    report.add("edges", g.edge_count());
    report.add("group_order", group.order());
    report.add("edge_orbits", static_cast<long long>(group.edge_orbits.size()));
    add_weights(report, result.weights);
    report.add("lambda2", result.lambda2);
    report.add("product", result.product);
    report.add("converged", result.converged);
    report.add("degenerate_fiedler", result.degenerate_fiedler);
    report.add("invariant", verdict.invariant);
    report.add("max_orbit_spread", verdict.max_orbit_spread);
    report.add("lambda2_after_averaging", verdict.lambda2_after_averaging);

    double product_lo = result.restart_products.front();
    double product_hi = product_lo;
    for (double p : result.restart_products) {
        product_lo = std::min(product_lo, p);
        product_hi = std::max(product_hi, p);
    }
    report.add("starts", static_cast<long long>(result.restart_products.size()));
    for (std::size_t s = 0; s < result.restart_products.size(); ++s)
        report.add("start_" + std::to_string(s) + "_product", result.restart_products[s]);
    report.add("restart_product_spread", (product_hi - product_lo) / product_hi);

    exit_code = result.converged ? kExitOk : kExitNumerical;
    return report;
}

Report run_sweep(const std::string& family, int steps, const std::string& out_path) {
    const SweepFamily fam = family == "p3" ? SweepFamily::p3 : SweepFamily::p4_symmetric;
    const std::vector<SweepSample> samples = sweep_curve(fam, steps);

    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot write file: " + out_path);
    out << "r,lambda2_closed,lambda2_numeric,delta\n";
    double max_lambda2 = -1.0, max_r = 0.0, max_delta = 0.0;
    for (const SweepSample& s : samples) {
        const double delta = s.lambda2_closed - s.lambda2_numeric;
        out << Report::format_double(s.r) << "," << Report::format_double(s.lambda2_closed)
            << "," << Report::format_double(s.lambda2_numeric) << ","
            << Report::format_double(delta) << "\n";
        if (s.lambda2_closed > max_lambda2) {
            max_lambda2 = s.lambda2_closed;
            max_r = s.r;
        }
        max_delta = std::max(max_delta, std::fabs(delta));
    }
    out.flush();
    if (!out) throw std::ios_base::failure("write failed: " + out_path);

    Report report("sweep");
    report.add("family", family);
    report.add("steps", steps);
    report.add("out", out_path);
    report.add("max_r", max_r);
    report.add("max_lambda2", max_lambda2);
    report.add("max_abs_delta", max_delta);
    return report;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Algebraic connectivity and effective resistance of weighted graphs"};
    app.name("fiedler");
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"text", "kv"}))
        ->capture_default_str();

    std::string spectrum_file;
    CLI::App* spectrum = app.add_subcommand("spectrum", "Eigenvalues and Fiedler vector");
    spectrum->add_option("file", spectrum_file, "Graph file")->required();

    std::string resistance_file;
    CLI::App* resistance = app.add_subcommand("resistance", "Effective-resistance profile");
    resistance->add_option("file", resistance_file, "Graph file")->required();

    std::string optimize_file;
    OptimizerConfig opt_config;
    bool allow_partial = false;
    CLI::App* optimize = app.add_subcommand(
        "optimize", "Maximize algebraic connectivity at fixed total effective resistance");
    optimize->add_option("file", optimize_file, "Graph file")->required();
    optimize->add_option("--tolerance", opt_config.tolerance, "Projected-gradient tolerance")
        ->capture_default_str();
    optimize->add_option("--max-iterations", opt_config.max_iterations, "Ascent iteration cap")
        ->capture_default_str();
    optimize->add_option("--restarts", opt_config.restarts, "Extra random starts")
        ->capture_default_str();
    optimize->add_option("--seed", opt_config.seed, "Restart RNG seed")->capture_default_str();
    optimize
        ->add_option("--degeneracy-threshold", opt_config.degeneracy_threshold,
                     "Fiedler-gap cutoff relative to lambda_n")
        ->capture_default_str();
    optimize->add_flag("--allow-partial", allow_partial,
                       "Exit 0 even when the optimizer did not converge");

    std::string conjecture_file;
    OptimizerConfig conj_config;
    conj_config.restarts = 4;
    double invariance_tol = 1e-5;
    CLI::App* conjecture = app.add_subcommand(
        "conjecture", "Check automorphism invariance of optimal weights");
    conjecture->add_option("file", conjecture_file, "Graph file")->required();
    conjecture->add_option("--restarts", conj_config.restarts, "Extra random starts")
        ->capture_default_str();
    conjecture->add_option("--seed", conj_config.seed, "Restart RNG seed")->capture_default_str();
    conjecture->add_option("--invariance-tol", invariance_tol, "Relative orbit-spread tolerance")
        ->capture_default_str();

    std::string sweep_family;
    int sweep_steps = 0;
    std::string sweep_out;
    CLI::App* sweep = app.add_subcommand("sweep", "CSV curve of lambda2 against edge resistance");
    sweep->add_option("family", sweep_family, "p3 or p4-symmetric")
        ->required()
        ->check(CLI::IsMember({"p3", "p4-symmetric"}));
    sweep->add_option("--steps", sweep_steps, "Grid size")->required()
        ->check(CLI::Range(2, 100000000));
    sweep->add_option("--out", sweep_out, "Output CSV path")->required();

    std::vector<const char*> argv;
    argv.push_back("fiedler");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        int exit_code = kExitOk;
        Report report("none");
        if (spectrum->parsed())
            report = run_spectrum(spectrum_file);
        else if (resistance->parsed())
            report = run_resistance(resistance_file);
        else if (optimize->parsed())
            report = run_optimize(optimize_file, opt_config, allow_partial, exit_code);
        else if (conjecture->parsed())
            report = run_conjecture(conjecture_file, conj_config, invariance_tol, exit_code);
        else
            report = run_sweep(sweep_family, sweep_steps, sweep_out);
        print_report(report, format, out);
        return exit_code;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::ios_base::failure& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}

}  // namespace fiedler::cli
