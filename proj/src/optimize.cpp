#include "fiedler/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "fiedler/closedform.hpp"
#include "fiedler/resistance.hpp"

namespace fiedler {

double product_objective(const WeightedGraph& g) {
    if (!g.connected()) throw std::invalid_argument("product_objective: graph is disconnected");
    const SpectralDecomposition dec = eigendecompose(laplacian(g));
    return dec.eigenvalues[1] * kirchhoff_total(dec);
}

std::vector<double> gradient_lambda2(const WeightedGraph& g, const FiedlerPair& fied) {
    if (fied.degenerate)
        throw std::runtime_error("gradient_lambda2: degenerate Fiedler value");
    if (static_cast<int>(fied.vector.size()) != g.vertex_count())
        throw std::invalid_argument("gradient_lambda2: vector size mismatch");
    if (std::fabs(norm2(fied.vector) - 1.0) > 1e-9)
        throw std::invalid_argument("gradient_lambda2: Fiedler vector is not unit norm");

    std::vector<double> grad;
    grad.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
        const double d = fied.vector[e.u] - fied.vector[e.v];
        grad.push_back(d * d);
    }
    return grad;
}

std::vector<double> gradient_total_resistance(const WeightedGraph& g, const PseudoInverse& lp) {
    if (!g.connected())
        throw std::invalid_argument("gradient_total_resistance: graph is disconnected");
    const int n = g.vertex_count();
    if (lp.matrix.size() != n)
        throw std::invalid_argument("gradient_total_resistance: size mismatch");

    std::vector<double> grad;
    grad.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
        double s = 0.0;
        for (int k = 0; k < n; ++k) {
            const double d = lp.matrix(k, e.u) - lp.matrix(k, e.v);
            s += d * d;
        }
        grad.push_back(-n * s);
    }
    return grad;
}

namespace {

// State of the log-product objective F(theta) = log lambda2 + log R at
// theta = log weights. The gradient is projected onto the complement of the
// scale direction (it is orthogonal to it analytically; the projection
// removes rounding residue).
struct Evaluation {
    double objective = 0.0;
    std::vector<double> gradient;  // empty when degenerate
    double gradient_norm = 0.0;
    bool degenerate = false;
};

class ProductProblem {
public:
    ProductProblem(const WeightedGraph& g, double degeneracy_threshold)
        : graph_(g), degeneracy_threshold_(degeneracy_threshold) {}

    int dimensions() const { return graph_.edge_count(); }

    Evaluation evaluate(const std::vector<double>& theta, bool want_gradient) const {
        std::vector<double> w(theta.size());
        for (std::size_t i = 0; i < theta.size(); ++i) w[i] = std::exp(theta[i]);
        const WeightedGraph gw = graph_.with_weights(w);
        const SpectralDecomposition dec = eigendecompose(laplacian(gw));
        const double lambda2 = dec.eigenvalues[1];
        const double total = kirchhoff_total(dec);
        const double lambda_n = dec.eigenvalues.back();
        const double gap = dec.n() >= 3 ? dec.eigenvalues[2] - lambda2
                                        : std::numeric_limits<double>::infinity();

        Evaluation ev;
        ev.objective = std::log(lambda2) + std::log(total);
        ev.degenerate = gap < degeneracy_threshold_ * std::max(1.0, lambda_n);
        if (!want_gradient || ev.degenerate) return ev;

        const FiedlerPair fied = fiedler(dec);
        const PseudoInverse lp = pseudo_inverse(dec);
        const std::vector<double> gl = gradient_lambda2(gw, fied);
        const std::vector<double> gr = gradient_total_resistance(gw, lp);
        ev.gradient.resize(theta.size());
        double mean = 0.0;
        for (std::size_t e = 0; e < theta.size(); ++e) {
            ev.gradient[e] = w[e] * (gl[e] / lambda2 + gr[e] / total);
            mean += ev.gradient[e];
        }
        mean /= static_cast<double>(theta.size());
        for (double& gv : ev.gradient) gv -= mean;
        ev.gradient_norm = norm2(ev.gradient);
        return ev;
    }

    double objective_only(const std::vector<double>& theta) const {
        return evaluate(theta, false).objective;
    }

private:
    const WeightedGraph& graph_;
    double degeneracy_threshold_;
};

struct StartOutcome {
    std::vector<double> theta;
    double objective = -std::numeric_limits<double>::infinity();
    int evaluations = 0;
    bool converged = false;
    bool hit_degenerate = false;
};

std::vector<double> add_scaled(const std::vector<double>& a, double s,
                               const std::vector<double>& b) {
    std::vector<double> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + s * b[i];
    return r;
}

// Nelder-Mead on F over log-weights, used when the Fiedler value goes
// degenerate (the gradient formula fails there) or the smooth phases stall.
// Simplex starts at 5% weight perturbations; budget 5000 evaluations;
// collapse declared at objective spread <= 1e-12.
struct NelderMeadOutcome {
    std::vector<double> theta;
    double objective;
    int evaluations;
    bool collapsed;
};

NelderMeadOutcome nelder_mead_max(const ProductProblem& problem, std::vector<double> start) {
    constexpr int kMaxEvaluations = 5000;
    constexpr double kSpreadTol = 1e-12;
    const int m = static_cast<int>(start.size());
    const double step = std::log(1.05);

    std::vector<std::vector<double>> xs;
    std::vector<double> fs;
    xs.push_back(start);
    fs.push_back(problem.objective_only(start));
    for (int j = 0; j < m; ++j) {
        std::vector<double> x = start;
        x[j] += step;
        xs.push_back(std::move(x));
        fs.push_back(problem.objective_only(xs.back()));
    }
    int evals = m + 1;

    auto order = [&] {
        std::vector<int> idx(xs.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return fs[a] > fs[b]; });
        std::vector<std::vector<double>> xs2;
        std::vector<double> fs2;
        for (int i : idx) {
            xs2.push_back(std::move(xs[i]));
            fs2.push_back(fs[i]);
        }
        xs = std::move(xs2);
        fs = std::move(fs2);
    };

    bool collapsed = false;
    while (evals < kMaxEvaluations) {
        order();
        if (fs.front() - fs.back() <= kSpreadTol) {
            collapsed = true;
            break;
        }
        std::vector<double> centroid(m, 0.0);
        for (int j = 0; j <= m; ++j) {
            if (j == m) continue;  // exclude worst (last after ordering)
            for (int i = 0; i < m; ++i) centroid[i] += xs[j][i];
        }
        for (double& c : centroid) c /= m;

        const std::vector<double>& worst = xs.back();
        std::vector<double> reflected = add_scaled(centroid, 1.0, add_scaled(centroid, -1.0, worst));
        double fr = problem.objective_only(reflected);
        ++evals;

        if (fr > fs.front()) {
            std::vector<double> expanded = add_scaled(centroid, 2.0, add_scaled(reflected, -1.0, centroid));
            double fe = problem.objective_only(expanded);
            ++evals;
            if (fe > fr) {
                xs.back() = std::move(expanded);
                fs.back() = fe;
            } else {
                xs.back() = std::move(reflected);
                fs.back() = fr;
            }
        } else if (fr > fs[fs.size() - 2]) {
            xs.back() = std::move(reflected);
            fs.back() = fr;
        } else {
            const bool outside = fr > fs.back();
            std::vector<double> contracted =
                outside ? add_scaled(centroid, 0.5, add_scaled(reflected, -1.0, centroid))
                        : add_scaled(centroid, 0.5, add_scaled(worst, -1.0, centroid));
            double fc = problem.objective_only(contracted);
            ++evals;
            if (fc > (outside ? fr : fs.back())) {
                xs.back() = std::move(contracted);
                fs.back() = fc;
            } else {
                for (std::size_t j = 1; j < xs.size() && evals < kMaxEvaluations; ++j) {
                    xs[j] = add_scaled(xs[0], 0.5, add_scaled(xs[j], -1.0, xs[0]));
                    fs[j] = problem.objective_only(xs[j]);
                    ++evals;
                }
            }
        }
    }
    order();
    return {xs.front(), fs.front(), evals, collapsed};
}

// Newton iteration on the stationarity system grad F = 0, with the Hessian
// from central differences of the analytic gradient. The backtracked Armijo
// ascent cannot certify stationarity below ~sqrt(eps) because objective
// differences drop under the rounding noise of F; the gradient itself stays
// accurate, so polishing on it reaches the 1e-9 tolerance.
bool newton_polish(const ProductProblem& problem, std::vector<double>& theta, Evaluation& ev,
                   double tolerance, int& evals, bool& degenerate) {
    const int m = problem.dimensions();
    constexpr double kStepH = 1e-5;
    constexpr int kMaxNewton = 60;

    for (int iter = 0; iter < kMaxNewton; ++iter) {
        if (ev.gradient_norm <= tolerance) return true;

        Matrix hess(m);
        for (int j = 0; j < m; ++j) {
            std::vector<double> tp = theta, tm = theta;
            tp[j] += kStepH;
            tm[j] -= kStepH;
            const Evaluation ep = problem.evaluate(tp, true);
            const Evaluation em = problem.evaluate(tm, true);
            evals += 2;
            if (ep.degenerate || em.degenerate) {
                degenerate = true;
                return false;
            }
            for (int i = 0; i < m; ++i)
                hess(i, j) = (ep.gradient[i] - em.gradient[i]) / (2.0 * kStepH);
        }
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                const double s = 0.5 * (hess(i, j) + hess(j, i));
                hess(i, j) = s;
                hess(j, i) = s;
            }

        // The scale direction is an exact null direction of the Hessian;
        // shifting it by -1 on span(1) makes the system solvable and leaves
        // the solution in the complement (the gradient lives there).
        Matrix k = hess;
        const double shift = 1.0 / m;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) k(i, j) -= shift;

        std::vector<double> rhs(m);
        for (int i = 0; i < m; ++i) rhs[i] = -ev.gradient[i];
        std::vector<double> dir;
        try {
            dir = solve_linear(k, rhs);
        } catch (const std::runtime_error&) {
            return false;
        }
        double mean = std::accumulate(dir.begin(), dir.end(), 0.0) / m;
        for (double& d : dir) d -= mean;

        bool accepted = false;
        double scale = 1.0;
        for (int h = 0; h <= 40; ++h) {
            const std::vector<double> cand = add_scaled(theta, scale, dir);
            const Evaluation ec = problem.evaluate(cand, true);
            ++evals;
            if (ec.degenerate) {
                degenerate = true;
                return false;
            }
            // Keep the ascent property (no objective drop beyond noise) and
            // demand actual stationarity progress.
            if (ec.objective >= ev.objective - 1e-12 && ec.gradient_norm < ev.gradient_norm) {
                theta = cand;
                ev = ec;
                accepted = true;
                break;
            }
            scale *= 0.5;
        }
        if (!accepted) return false;
    }
    return ev.gradient_norm <= tolerance;
}

StartOutcome run_single_start(const ProductProblem& problem, std::vector<double> theta,
                              const OptimizerConfig& config) {
    StartOutcome out;
    constexpr double kArmijo = 1e-4;
    constexpr double kPolishEntry = 1e-6;

    Evaluation ev = problem.evaluate(theta, true);
    ++out.evaluations;
    bool stalled = false;

    if (!ev.degenerate) {
        for (int iter = 0; iter < config.max_iterations; ++iter) {
            if (ev.gradient_norm <= config.tolerance || ev.gradient_norm <= kPolishEntry) break;

            double step = 1.0;
            bool accepted = false;
            for (int h = 0; h <= 40; ++h) {
                const std::vector<double> cand = add_scaled(theta, step, ev.gradient);
                const Evaluation ec = problem.evaluate(cand, true);
                ++out.evaluations;
                if (ec.objective >= ev.objective + kArmijo * step * ev.gradient_norm * ev.gradient_norm) {
                    theta = cand;
                    ev = ec;
                    accepted = true;
                    break;
                }
                step *= 0.5;
            }
            if (ev.degenerate) break;
            if (!accepted) {
                stalled = true;
                break;
            }
        }
        if (!ev.degenerate && ev.gradient_norm > config.tolerance) {
            bool degenerate_in_polish = false;
            const bool polished = newton_polish(problem, theta, ev, config.tolerance,
                                                out.evaluations, degenerate_in_polish);
            if (degenerate_in_polish) ev.degenerate = true;
            stalled = !polished && !ev.degenerate;
        }
    }

    if (ev.degenerate || stalled) {
        // Degenerate lambda2 (or a stall on a non-smooth ridge): the
        // gradient formula no longer applies, switch to Nelder-Mead.
        if (ev.degenerate) out.hit_degenerate = true;
        const NelderMeadOutcome nm = nelder_mead_max(problem, theta);
        theta = nm.theta;
        out.evaluations += nm.evaluations;
        ev = problem.evaluate(theta, true);
        ++out.evaluations;
        if (ev.degenerate) {
            out.hit_degenerate = true;
            out.converged = nm.collapsed;
        } else {
            // Smooth at the Nelder-Mead endpoint: certify by the gradient,
            // polishing once more if needed.
            if (ev.gradient_norm > config.tolerance) {
                bool degenerate_in_polish = false;
                newton_polish(problem, theta, ev, config.tolerance, out.evaluations,
                              degenerate_in_polish);
                if (degenerate_in_polish) {
                    out.hit_degenerate = true;
                    out.converged = nm.collapsed;
                } else {
                    out.converged = ev.gradient_norm <= config.tolerance;
                }
            } else {
                out.converged = true;
            }
        }
    } else {
        out.converged = ev.gradient_norm <= config.tolerance;
    }

    out.theta = std::move(theta);
    out.objective = ev.objective;
    return out;
}

}  // namespace

OptimizationResult maximize_connectivity(const WeightedGraph& g, const OptimizerConfig& config) {
    if (!g.connected())
        throw std::invalid_argument("maximize_connectivity: graph is disconnected");
    if (config.restarts < 0) throw std::invalid_argument("maximize_connectivity: restarts < 0");
    const int m = g.edge_count();

    const ProductProblem problem(g, config.degeneracy_threshold);

    // Budget of the constraint: total effective resistance of the
    // unweighted graph.
    const WeightedGraph unweighted = g.with_weights(std::vector<double>(m, 1.0));
    const double budget = kirchhoff_total(eigendecompose(laplacian(unweighted)));

    std::vector<std::vector<double>> starts;
    starts.emplace_back(m, 0.0);  // all weights 1
    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> log_weight(-2.0, 2.0);
    for (int r = 0; r < config.restarts; ++r) {
        std::vector<double> theta(m);
        for (double& t : theta) t = log_weight(rng);
        starts.push_back(std::move(theta));
    }

    OptimizationResult result;
    StartOutcome best;
    bool have_best = false;
    for (const std::vector<double>& start : starts) {
        StartOutcome outcome = run_single_start(problem, start, config);
        result.restart_products.push_back(std::exp(outcome.objective));
        // Near-ties go to the converged start.
        constexpr double kTie = 1e-12;
        const bool better = !have_best || outcome.objective > best.objective + kTie ||
                            (outcome.objective > best.objective - kTie && outcome.converged &&
                             !best.converged);
        if (better) {
            best = std::move(outcome);
            have_best = true;
        }
    }

    std::vector<double> weights(m);
    for (int e = 0; e < m; ++e) weights[e] = std::exp(best.theta[e]);

    // Rescale onto the budget surface: R(c w) = R(w)/c.
    const double r_current =
        kirchhoff_total(eigendecompose(laplacian(g.with_weights(weights))));
    const double scale = r_current / budget;
    for (double& w : weights) w *= scale;

    const SpectralDecomposition dec = eigendecompose(laplacian(g.with_weights(weights)));
    result.weights = std::move(weights);
    result.lambda2 = dec.eigenvalues[1];
    result.total_resistance = kirchhoff_total(dec);
    result.product = result.lambda2 * result.total_resistance;
    result.iterations = best.evaluations;
    result.converged = best.converged;
    result.degenerate_fiedler = best.hit_degenerate;
    return result;
}

std::vector<SweepSample> sweep_curve(SweepFamily family, int steps) {
    if (steps < 2) throw std::invalid_argument("sweep_curve: need at least 2 steps");

    const double hi = family == SweepFamily::p3 ? 2.0 : 5.0 / 3.0;
    std::vector<SweepSample> samples;
    samples.reserve(steps);
    for (int k = 1; k <= steps; ++k) {
        const double r = k * hi / (steps + 1);
        SweepSample s{};
        s.r = r;
        if (family == SweepFamily::p3) {
            s.lambda2_closed = p3_lambda2(r);
            s.lambda3_closed = p3_lambda3(r);
            const WeightedGraph g = path_graph(3, {1.0 / r, 1.0 / (2.0 - r)});
            s.lambda2_numeric = eigendecompose(laplacian(g)).eigenvalues[1];
        } else {
            s.lambda2_closed = p4_lambda2_symmetric(r);
            s.lambda3_closed = std::numeric_limits<double>::quiet_NaN();
            const double d = 1.0 / r;
            const double c = 2.0 / (5.0 - 3.0 * r);
            const WeightedGraph g = path_graph(4, {d, c, d});
            s.lambda2_numeric = eigendecompose(laplacian(g)).eigenvalues[1];
        }
        samples.push_back(s);
    }
    return samples;
}

}  // namespace fiedler
