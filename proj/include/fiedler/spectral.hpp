#pragma once

#include <vector>

#include "fiedler/graph.hpp"
#include "fiedler/matrix.hpp"

namespace fiedler {

/// Full symmetric eigendecomposition with eigenvalues sorted non-decreasing.
/// Column k of `eigenvectors` pairs with eigenvalues[k]; columns are
/// orthonormal. `zero_threshold` is the cutoff below which an eigenvalue
/// counts as zero (1e-10 * max(1, lambda_n)).
struct SpectralDecomposition {
    std::vector<double> eigenvalues;
    Matrix eigenvectors;
    double zero_threshold;

    int n() const { return static_cast<int>(eigenvalues.size()); }
    int zero_count() const;
};

/// Fiedler value and vector. The vector has unit norm with its first entry
/// of magnitude > 1e-12 made negative. `gap` is lambda3 - lambda2
/// (+infinity when n == 2); `degenerate` flags gap < 1e-8 * max(1, lambda_n).
struct FiedlerPair {
    double value;
    std::vector<double> vector;
    double gap;
    bool degenerate;
};

struct PseudoInverse {
    Matrix matrix;
};

/// Cyclic Jacobi eigensolver. Deterministic for identical input; sweeps
/// until the off-diagonal Frobenius norm falls below 1e-14 * ||m||_F, with
/// a 100-sweep cap. Throws on non-symmetric input or non-convergence.
SpectralDecomposition eigendecompose(const Matrix& m);

/// Throws when lambda2 is below the zero threshold (disconnected graph).
FiedlerPair fiedler(const SpectralDecomposition& dec);

/// <Lx,x>/<x,x>; throws on the zero vector.
double rayleigh(const Matrix& lap, const std::vector<double>& x);

/// Moore-Penrose pseudo-inverse via the eigen-expansion over nonzero
/// eigenvalues: sum over lambda_k > threshold of (1/lambda_k) u_k u_k^T.
PseudoInverse pseudo_inverse(const SpectralDecomposition& dec);

/// True iff u, read in path vertex order, is weakly monotone.
/// Throws when g is not a path or sizes mismatch.
bool check_path_monotonicity(const WeightedGraph& g, const std::vector<double>& u);

/// True iff max_j |u_j + u_{n+1-j}| <= 1e-8 * ||u||. Requires mirror-symmetric
/// path weights (c_i = c_{n-i}, relative tolerance 1e-12); throws otherwise.
bool check_path_antisymmetry(const WeightedGraph& g, const std::vector<double>& u);

}  // namespace fiedler
