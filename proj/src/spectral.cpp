#include "fiedler/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace fiedler {

namespace {

double off_diagonal_norm(const Matrix& a) {
    const int n = a.size();
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

void apply_sign_convention(std::vector<double>& v) {
    for (double x : v) {
        if (std::fabs(x) > 1e-12) {
            if (x > 0.0)
                for (double& y : v) y = -y;
            return;
        }
    }
}

}  // namespace

int SpectralDecomposition::zero_count() const {
    int c = 0;
    for (double v : eigenvalues)
        if (v < zero_threshold) ++c;
    return c;
}

SpectralDecomposition eigendecompose(const Matrix& m) {
    const int n = m.size();
    if (n < 1) throw std::invalid_argument("eigendecompose: empty matrix");

    const double sym_tol = 1e-12 * std::max(1.0, m.max_abs());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::fabs(m(i, j) - m(j, i)) > sym_tol)
                throw std::invalid_argument("eigendecompose: matrix is not symmetric");

    Matrix a = m;
    Matrix v = Matrix::identity(n);
    const double target = 1e-14 * m.frobenius_norm();
    constexpr int kMaxSweeps = 100;

    bool converged = off_diagonal_norm(a) <= target;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                const double app = a(p, p), aqq = a(q, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r != p && r != q) {
                        const double arp = a(r, p), arq = a(r, q);
                        a(r, p) = arp - s * (arq + tau * arp);
                        a(p, r) = a(r, p);
                        a(r, q) = arq + s * (arp - tau * arq);
                        a(q, r) = a(r, q);
                    }
                    const double vrp = v(r, p), vrq = v(r, q);
                    v(r, p) = vrp - s * (vrq + tau * vrp);
                    v(r, q) = vrq + s * (vrp - tau * vrq);
                }
            }
        }
        converged = off_diagonal_norm(a) <= target;
    }
    if (!converged)
        throw std::runtime_error("eigendecompose: Jacobi sweeps did not converge");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&a](int i, int j) { return a(i, i) < a(j, j); });

    SpectralDecomposition dec;
    dec.eigenvalues.resize(n);
    dec.eigenvectors = Matrix(n);
    for (int k = 0; k < n; ++k) {
        dec.eigenvalues[k] = a(order[k], order[k]);
        std::vector<double> col = v.column(order[k]);
        apply_sign_convention(col);
        for (int i = 0; i < n; ++i) dec.eigenvectors(i, k) = col[i];
    }
    dec.zero_threshold = 1e-10 * std::max(1.0, dec.eigenvalues.back());
    return dec;
}

FiedlerPair fiedler(const SpectralDecomposition& dec) {
    const int n = dec.n();
    if (n < 2) throw std::invalid_argument("fiedler: need at least 2 vertices");
    const double lambda2 = dec.eigenvalues[1];
    if (lambda2 < dec.zero_threshold)
        throw std::runtime_error("fiedler: lambda2 is zero (graph disconnected)");

    FiedlerPair f;
    f.value = lambda2;
    f.vector = dec.eigenvectors.column(1);
    const double nrm = norm2(f.vector);
    for (double& x : f.vector) x /= nrm;
    apply_sign_convention(f.vector);
    f.gap = n >= 3 ? dec.eigenvalues[2] - lambda2 : std::numeric_limits<double>::infinity();
    f.degenerate = f.gap < 1e-8 * std::max(1.0, dec.eigenvalues.back());
    return f;
}

double rayleigh(const Matrix& lap, const std::vector<double>& x) {
    const double xx = dot(x, x);
    if (xx == 0.0) throw std::invalid_argument("rayleigh: zero vector");
    return dot(multiply(lap, x), x) / xx;
}

PseudoInverse pseudo_inverse(const SpectralDecomposition& dec) {
    const int n = dec.n();
    Matrix p(n);
    for (int k = 0; k < n; ++k) {
        const double lambda = dec.eigenvalues[k];
        if (lambda < dec.zero_threshold) continue;
        const double inv = 1.0 / lambda;
        for (int i = 0; i < n; ++i) {
            const double uik = dec.eigenvectors(i, k);
            if (uik == 0.0) continue;
            for (int j = 0; j < n; ++j) p(i, j) += inv * uik * dec.eigenvectors(j, k);
        }
    }
    return PseudoInverse{std::move(p)};
}

bool check_path_monotonicity(const WeightedGraph& g, const std::vector<double>& u) {
    if (!is_path(g)) throw std::invalid_argument("check_path_monotonicity: graph is not a path");
    if (static_cast<int>(u.size()) != g.vertex_count())
        throw std::invalid_argument("check_path_monotonicity: vector size mismatch");
    const double slack = 1e-12 * std::max(1.0, norm_inf(u));
    bool up = true, down = true;
    for (std::size_t j = 0; j + 1 < u.size(); ++j) {
        const double d = u[j + 1] - u[j];
        if (d < -slack) up = false;
        if (d > slack) down = false;
    }
    return up || down;
}

bool check_path_antisymmetry(const WeightedGraph& g, const std::vector<double>& u) {
    const std::vector<double> c = path_weights(g);
    const std::size_t m = c.size();
    for (std::size_t i = 0; i < m; ++i) {
        const double a = c[i], b = c[m - 1 - i];
        if (std::fabs(a - b) > 1e-12 * std::max(std::fabs(a), std::fabs(b)))
            throw std::invalid_argument("check_path_antisymmetry: weights are not symmetric");
    }
    if (static_cast<int>(u.size()) != g.vertex_count())
        throw std::invalid_argument("check_path_antisymmetry: vector size mismatch");
    const std::size_t n = u.size();
    double worst = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        worst = std::max(worst, std::fabs(u[j] + u[n - 1 - j]));
    return worst <= 1e-8 * norm2(u);
}

}  // namespace fiedler
