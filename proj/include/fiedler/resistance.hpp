#pragma once

#include <map>
#include <vector>

#include "fiedler/graph.hpp"
#include "fiedler/matrix.hpp"
#include "fiedler/spectral.hpp"

namespace fiedler {

/// Pairwise effective resistances r(v_i, v_j) and their sum over unordered
/// pairs (the total effective resistance / Kirchhoff index).
struct ResistanceProfile {
    Matrix pairwise;
    double total;
};

/// Unique extension of the boundary values that is harmonic ((Lx)_v = 0) at
/// every interior vertex. `boundary` maps 0-based vertex indices to values.
/// Throws on a disconnected graph or empty boundary.
std::vector<double> harmonic_extension(const WeightedGraph& g,
                                       const std::map<int, double>& boundary);

/// Effective resistance via the harmonic-extension route:
/// h extends {h_i = 1, h_j = 0} and r = 1/<Lh,h>. Returns 0 when i == j.
double resistance_harmonic(const WeightedGraph& g, int i, int j);

/// Effective resistance via the pseudo-inverse quadratic form:
/// r = Lp_ii + Lp_jj - 2 Lp_ij. Returns 0 when i == j.
double resistance_pseudoinverse(const PseudoInverse& lp, int i, int j);

/// Full pairwise matrix (pseudo-inverse route) and total over unordered pairs.
ResistanceProfile resistance_profile(const WeightedGraph& g);

/// Total effective resistance from the spectrum: n * sum_{k>=2} 1/lambda_k.
/// Throws when the decomposition is not that of a connected graph.
double kirchhoff_total(const SpectralDecomposition& dec);

/// Series rule on paths: r(v_i, v_j) = sum of 1/c_k over the edges between
/// them. Requires a path and i < j in path order (0-based).
double path_pair_resistance(const WeightedGraph& g, int i, int j);

/// Total effective resistance of a path: edge k (1-based) lies on k(n-k)
/// vertex pairs, so the total is sum_k k(n-k)/c_k.
double path_total_resistance(const WeightedGraph& g);

}  // namespace fiedler
