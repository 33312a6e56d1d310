#pragma once

// Test-only helpers. Everything here is independent of the library's
// eigensolver and resistance paths so it can serve as an oracle for them.

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "fiedler/graph.hpp"
#include "fiedler/matrix.hpp"

namespace oracles {

/// det(a - x I) by Gaussian elimination with partial pivoting.
inline double charpoly(fiedler::Matrix a, double x) {
    const int n = a.size();
    for (int i = 0; i < n; ++i) a(i, i) -= x;
    double det = 1.0;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (std::fabs(a(i, k)) > std::fabs(a(piv, k))) piv = i;
        if (a(piv, k) == 0.0) return 0.0;
        if (piv != k) {
            for (int j = k; j < n; ++j) std::swap(a(k, j), a(piv, j));
            det = -det;
        }
        det *= a(k, k);
        for (int i = k + 1; i < n; ++i) {
            const double f = a(i, k) / a(k, k);
            for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return det;
}

/// Confirms that `roots` (sorted ascending, pairwise distinct) is exactly the
/// spectrum of the symmetric matrix `a`: the characteristic polynomial must
/// vanish at each root and change sign across it. With n roots bracketed
/// this accounts for the whole spectrum.
inline bool confirms_simple_spectrum(const fiedler::Matrix& a, const std::vector<double>& roots,
                                     double tol = 1e-9) {
    const int n = a.size();
    if (static_cast<int>(roots.size()) != n) return false;

    double scale = std::max(1.0, a.max_abs());
    double root_tol = tol * std::pow(scale, n);
    for (double r : roots)
        if (std::fabs(charpoly(a, r)) > root_tol) return false;

    // Probe points strictly between/outside the roots; signs must alternate.
    std::vector<double> probes;
    const double pad = std::max(1.0, std::fabs(roots.front()) + std::fabs(roots.back()));
    probes.push_back(roots.front() - pad);
    for (int i = 0; i + 1 < n; ++i) probes.push_back(0.5 * (roots[i] + roots[i + 1]));
    probes.push_back(roots.back() + pad);

    int prev_sign = 0;
    for (double x : probes) {
        const double v = charpoly(a, x);
        const int sign = v > 0.0 ? 1 : v < 0.0 ? -1 : 0;
        if (sign == 0) return false;
        if (prev_sign != 0 && sign == prev_sign) return false;
        prev_sign = sign;
    }
    return true;
}

inline double central_difference(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

inline std::vector<double> random_weights(std::mt19937_64& rng, int count,
                                          double lo = 0.1, double hi = 10.0) {
    std::uniform_real_distribution<double> logw(std::log(lo), std::log(hi));
    std::vector<double> w(count);
    for (double& x : w) x = std::exp(logw(rng));
    return w;
}

/// Random connected graph: a random spanning tree plus extra edges, with
/// log-uniform weights.
inline fiedler::WeightedGraph random_connected_graph(std::mt19937_64& rng, int n,
                                                     double extra_edge_prob = 0.3,
                                                     double lo = 0.1, double hi = 10.0) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> logw(std::log(lo), std::log(hi));
    std::vector<fiedler::Edge> edges;
    std::set<std::pair<int, int>> seen;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        const int u = pick(rng);
        edges.push_back({u, v, std::exp(logw(rng))});
        seen.insert({u, v});
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!seen.contains({u, v}) && unit(rng) < extra_edge_prob)
                edges.push_back({u, v, std::exp(logw(rng))});
    return fiedler::WeightedGraph(n, std::move(edges));
}

/// Every adjacency-preserving permutation, by trying all n! of them.
inline std::vector<std::vector<int>> brute_force_automorphisms(const fiedler::WeightedGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const fiedler::Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;

    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::vector<std::vector<int>> found;
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                if (adj[i][j] != adj[perm[i]][perm[j]]) ok = false;
        if (ok) found.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return found;
}

/// Glues two graphs at a single shared vertex: g2's vertex `cut2` becomes
/// g1's vertex `cut1`, the rest of g2 gets fresh indices after g1's.
inline fiedler::WeightedGraph glue_at_vertex(const fiedler::WeightedGraph& g1, int cut1,
                                             const fiedler::WeightedGraph& g2, int cut2) {
    const int n1 = g1.vertex_count();
    std::vector<int> map2(g2.vertex_count());
    int next = n1;
    for (int v = 0; v < g2.vertex_count(); ++v) map2[v] = v == cut2 ? cut1 : next++;

    std::vector<fiedler::Edge> edges = g1.edges();
    for (const fiedler::Edge& e : g2.edges()) edges.push_back({map2[e.u], map2[e.v], e.weight});
    return fiedler::WeightedGraph(n1 + g2.vertex_count() - 1, std::move(edges));
}

}  // namespace oracles
