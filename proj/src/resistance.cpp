#include "fiedler/resistance.hpp"

#include <cmath>
#include <stdexcept>

namespace fiedler {

std::vector<double> harmonic_extension(const WeightedGraph& g,
                                       const std::map<int, double>& boundary) {
    const int n = g.vertex_count();
    if (!g.connected()) throw std::invalid_argument("harmonic_extension: graph is disconnected");
    if (boundary.empty()) throw std::invalid_argument("harmonic_extension: empty boundary set");
    for (const auto& [v, value] : boundary) {
        (void)value;
        if (v < 0 || v >= n) throw std::invalid_argument("harmonic_extension: vertex out of range");
    }

    std::vector<int> interior;
    std::vector<int> slot(n, -1);
    for (int v = 0; v < n; ++v)
        if (!boundary.contains(v)) {
            slot[v] = static_cast<int>(interior.size());
            interior.push_back(v);
        }

    std::vector<double> x(n, 0.0);
    for (const auto& [v, value] : boundary) x[v] = value;
    if (interior.empty()) return x;

    const Matrix lap = laplacian(g);
    const int m = static_cast<int>(interior.size());
    Matrix a(m);
    std::vector<double> b(m, 0.0);
    for (int r = 0; r < m; ++r) {
        const int v = interior[r];
        for (int w = 0; w < n; ++w) {
            if (slot[w] >= 0)
                a(r, slot[w]) = lap(v, w);
            else
                b[r] -= lap(v, w) * x[w];
        }
    }

    const std::vector<double> sol = solve_linear(std::move(a), std::move(b));
    for (int r = 0; r < m; ++r) x[interior[r]] = sol[r];
    return x;
}

double resistance_harmonic(const WeightedGraph& g, int i, int j) {
    const int n = g.vertex_count();
    if (i < 0 || i >= n || j < 0 || j >= n)
        throw std::invalid_argument("resistance_harmonic: vertex out of range");
    if (i == j) return 0.0;
    if (!g.connected()) throw std::invalid_argument("resistance_harmonic: graph is disconnected");

    const std::vector<double> h = harmonic_extension(g, {{i, 1.0}, {j, 0.0}});
    double energy = 0.0;
    for (const Edge& e : g.edges()) {
        const double d = h[e.u] - h[e.v];
        energy += e.weight * d * d;
    }
    return 1.0 / energy;
}

double resistance_pseudoinverse(const PseudoInverse& lp, int i, int j) {
    const int n = lp.matrix.size();
    if (i < 0 || i >= n || j < 0 || j >= n)
        throw std::invalid_argument("resistance_pseudoinverse: vertex out of range");
    if (i == j) return 0.0;
    return lp.matrix(i, i) + lp.matrix(j, j) - 2.0 * lp.matrix(i, j);
}

ResistanceProfile resistance_profile(const WeightedGraph& g) {
    if (!g.connected()) throw std::invalid_argument("resistance_profile: graph is disconnected");
    const int n = g.vertex_count();
    const PseudoInverse lp = pseudo_inverse(eigendecompose(laplacian(g)));

    ResistanceProfile profile{Matrix(n), 0.0};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double r = resistance_pseudoinverse(lp, i, j);
            profile.pairwise(i, j) = r;
            profile.pairwise(j, i) = r;
            profile.total += r;
        }
    return profile;
}

double kirchhoff_total(const SpectralDecomposition& dec) {
    if (dec.zero_count() != 1)
        throw std::invalid_argument("kirchhoff_total: spectrum is not that of a connected graph");
    double sum = 0.0;
    for (double lambda : dec.eigenvalues)
        if (lambda >= dec.zero_threshold) sum += 1.0 / lambda;
    return dec.n() * sum;
}

double path_pair_resistance(const WeightedGraph& g, int i, int j) {
    const std::vector<double> c = path_weights(g);
    if (i < 0 || j >= g.vertex_count() || i >= j)
        throw std::invalid_argument("path_pair_resistance: need 0 <= i < j < n");
    double r = 0.0;
    for (int k = i; k < j; ++k) r += 1.0 / c[k];
    return r;
}

double path_total_resistance(const WeightedGraph& g) {
    const std::vector<double> c = path_weights(g);
    const int n = g.vertex_count();
    double total = 0.0;
    for (int k = 1; k <= n - 1; ++k) total += static_cast<double>(k) * (n - k) / c[k - 1];
    return total;
}

}  // namespace fiedler
