#pragma once

#include <cstdint>
#include <vector>

#include "fiedler/graph.hpp"
#include "fiedler/spectral.hpp"

namespace fiedler {

struct OptimizerConfig {
    double tolerance = 1e-9;            // projected-gradient stationarity
    int max_iterations = 20000;         // ascent-iteration cap per start
    int restarts = 0;                   // random starts beyond the unweighted one
    std::uint64_t seed = 1;             // RNG seed for restarts
    double degeneracy_threshold = 1e-8; // Fiedler gap cutoff, relative to lambda_n
};

struct OptimizationResult {
    std::vector<double> weights;   // optimal weights, rescaled to the unweighted budget
    double lambda2 = 0.0;          // algebraic connectivity at those weights
    double total_resistance = 0.0;
    double product = 0.0;          // lambda2 * total_resistance (scale invariant)
    int iterations = 0;            // objective evaluations spent on the winning start
    bool converged = false;
    bool degenerate_fiedler = false;  // Nelder-Mead fallback was triggered by a degenerate lambda2

    /// Product reached from each start (index 0 = unweighted start), for
    /// restart-agreement diagnostics.
    std::vector<double> restart_products;
};

/// lambda2(G;w) * R(G;w). Invariant under uniform weight scaling.
double product_objective(const WeightedGraph& g);

/// d lambda2 / d w_ij = (u_i - u_j)^2 per edge, for a simple Fiedler value
/// with unit eigenvector u. Throws when the Fiedler pair is degenerate.
std::vector<double> gradient_lambda2(const WeightedGraph& g, const FiedlerPair& fied);

/// d R / d w_ij = -n ||Lp (chi_i - chi_j)||^2 per edge. Always negative for
/// connected graphs.
std::vector<double> gradient_total_resistance(const WeightedGraph& g, const PseudoInverse& lp);

/// Maximizes lambda2 subject to R(G;w) = R(G) via the scale-invariant
/// product objective on log-weights: gradient ascent with backtracking,
/// a Newton polish on the stationarity system once the ascent reaches the
/// noise floor, and a Nelder-Mead fallback when lambda2 goes degenerate.
/// The returned weights are rescaled so the total effective resistance
/// equals that of the unweighted graph; `lambda2` is then the estimate of
/// the constrained maximum. Deterministic given config.
OptimizationResult maximize_connectivity(const WeightedGraph& g, const OptimizerConfig& config = {});

enum class SweepFamily { p3, p4_symmetric };

/// One sweep grid point: closed form and eigensolver routes to lambda2.
/// lambda3_closed is NaN for the P4 family.
struct SweepSample {
    double r;
    double lambda2_closed;
    double lambda2_numeric;
    double lambda3_closed;
};

/// Uniform grid of `steps` samples over the open parameter domain
/// ((0,2) for P3, (0,5/3) for symmetric P4), endpoints excluded:
/// r_k = k * (hi - lo) / (steps + 1), k = 1..steps.
std::vector<SweepSample> sweep_curve(SweepFamily family, int steps);

}  // namespace fiedler
