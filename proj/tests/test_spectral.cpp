#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "fiedler/graph.hpp"
#include "fiedler/spectral.hpp"
#include "oracles.hpp"

using namespace fiedler;

namespace {

std::vector<double> random_unit_perp_to_ones(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    while (true) {
        std::vector<double> x(n);
        double mean = 0.0;
        for (double& v : x) {
            v = coord(rng);
            mean += v;
        }
        mean /= n;
        for (double& v : x) v -= mean;
        const double nrm = norm2(x);
        if (nrm < 1e-3) continue;
        for (double& v : x) v /= nrm;
        return x;
    }
}

}  // namespace

TEST_SUITE("spectral") {
    TEST_CASE("unweighted P3 spectrum is {0, 1, 3}") {
        const Matrix lap = laplacian(path_graph(3, {1.0, 1.0}));
        // Characteristic polynomial det(L - x I) = -x(x-1)(x-3); confirm the
        // roots independently of the Jacobi path before asserting them.
        REQUIRE(oracles::confirms_simple_spectrum(lap, {0.0, 1.0, 3.0}));

        const SpectralDecomposition dec = eigendecompose(lap);
        CHECK(dec.eigenvalues[0] == doctest::Approx(0.0).epsilon(0.0).scale(1e-12));
        CHECK(dec.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(dec.eigenvalues[2] == doctest::Approx(3.0).epsilon(1e-12));
        CHECK(dec.zero_count() == 1);
    }

    TEST_CASE("unweighted P4 spectrum is {0, 2-sqrt2, 2, 2+sqrt2}") {
        const Matrix lap = laplacian(path_graph(4, {1.0, 1.0, 1.0}));
        const double s2 = std::sqrt(2.0);
        REQUIRE(oracles::confirms_simple_spectrum(lap, {0.0, 2.0 - s2, 2.0, 2.0 + s2}));

        const SpectralDecomposition dec = eigendecompose(lap);
        CHECK(dec.eigenvalues[1] == doctest::Approx(2.0 - s2).epsilon(1e-12));
        CHECK(dec.eigenvalues[2] == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(dec.eigenvalues[3] == doctest::Approx(2.0 + s2).epsilon(1e-12));
    }

    TEST_CASE("single edge spectrum is {0, 2w}") {
        const double w = 5.0;
        const Matrix lap = laplacian(path_graph(2, {w}));
        REQUIRE(oracles::confirms_simple_spectrum(lap, {0.0, 2.0 * w}));
        const SpectralDecomposition dec = eigendecompose(lap);
        CHECK(dec.eigenvalues[1] == doctest::Approx(2.0 * w).epsilon(1e-12));
    }

    TEST_CASE("decomposition invariants on random graphs") {
        std::mt19937_64 rng(21);
        for (int trial = 0; trial < 50; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 8);
            const WeightedGraph g = oracles::random_connected_graph(rng, n, 0.4);
            const Matrix lap = laplacian(g);
            const SpectralDecomposition dec = eigendecompose(lap);
            const double scale = std::max(1.0, dec.eigenvalues.back());

            for (int k = 0; k + 1 < n; ++k) CHECK(dec.eigenvalues[k] <= dec.eigenvalues[k + 1]);
            CHECK(dec.zero_count() == 1);

            // Residuals ||L u - lambda u||.
            for (int k = 0; k < n; ++k) {
                const std::vector<double> u = dec.eigenvectors.column(k);
                const std::vector<double> lu = multiply(lap, u);
                double res = 0.0;
                for (int i = 0; i < n; ++i) {
                    const double d = lu[i] - dec.eigenvalues[k] * u[i];
                    res += d * d;
                }
                CHECK(std::sqrt(res) <= 1e-9 * scale);
            }

            // Orthonormal eigenvector matrix.
            for (int a = 0; a < n; ++a)
                for (int b = a; b < n; ++b) {
                    const double d = dot(dec.eigenvectors.column(a), dec.eigenvectors.column(b));
                    CHECK(std::fabs(d - (a == b ? 1.0 : 0.0)) <= 1e-9);
                }

            // Reconstruction sum lambda_k u_k u_k^T == L.
            Matrix rec(n);
            for (int k = 0; k < n; ++k)
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        rec(i, j) += dec.eigenvalues[k] * dec.eigenvectors(i, k) *
                                     dec.eigenvectors(j, k);
            double worst = 0.0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    worst = std::max(worst, std::fabs(rec(i, j) - lap(i, j)));
            CHECK(worst <= 1e-9 * scale);
        }
    }

    TEST_CASE("eigendecompose is deterministic") {
        const Matrix lap = laplacian(path_graph(5, {0.3, 2.0, 1.7, 0.9}));
        const SpectralDecomposition a = eigendecompose(lap);
        const SpectralDecomposition b = eigendecompose(lap);
        CHECK(a.eigenvalues == b.eigenvalues);
        CHECK(a.eigenvectors == b.eigenvectors);
    }

    TEST_CASE("eigendecompose rejects non-symmetric input") {
        Matrix m(2);
        m(0, 1) = 1.0;
        m(1, 0) = 1.0 + 1e-6;
        CHECK_THROWS_AS(eigendecompose(m), std::invalid_argument);
    }

    TEST_CASE("fiedler pair of unweighted P3") {
        const SpectralDecomposition dec = eigendecompose(laplacian(path_graph(3, {1.0, 1.0})));
        const FiedlerPair f = fiedler(dec);
        CHECK(f.value == doctest::Approx(1.0).epsilon(1e-12));
        // Proportional to (1, 0, -1); the sign convention makes the first entry negative.
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        CHECK(f.vector[0] == doctest::Approx(-inv_sqrt2).epsilon(1e-10));
        CHECK(f.vector[1] == doctest::Approx(0.0).epsilon(0.0).scale(1e-10));
        CHECK(f.vector[2] == doctest::Approx(inv_sqrt2).epsilon(1e-10));
        CHECK(f.gap == doctest::Approx(2.0).epsilon(1e-12));
        CHECK_FALSE(f.degenerate);
    }

    TEST_CASE("fiedler value of unweighted P4") {
        const SpectralDecomposition dec = eigendecompose(laplacian(path_graph(4, {1, 1, 1})));
        CHECK(fiedler(dec).value == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-12));
    }

    TEST_CASE("symmetric-weight P4 Fiedler vector has the (-1,-a,a,1) shape") {
        const WeightedGraph g = path_graph(4, {1.7, 0.6, 1.7});
        const FiedlerPair f = fiedler(eigendecompose(laplacian(g)));
        const double u1 = f.vector[0];
        REQUIRE(u1 < 0.0);
        const double a = f.vector[1] / u1;  // scale so the first entry reads -1
        CHECK(a > 0.0);
        CHECK(a < 1.0);
        CHECK(f.vector[2] == doctest::Approx(-u1 * a).epsilon(1e-9));
        CHECK(f.vector[3] == doctest::Approx(-u1).epsilon(1e-9));
    }

    TEST_CASE("fiedler rejects disconnected graphs") {
        const WeightedGraph g(4, {{0, 1, 1.0}, {2, 3, 1.0}});
        const SpectralDecomposition dec = eigendecompose(laplacian(g));
        CHECK_THROWS_AS(fiedler(dec), std::runtime_error);
    }

    TEST_CASE("rayleigh quotient") {
        const Matrix lap3 = laplacian(path_graph(3, {1.0, 1.0}));
        CHECK(rayleigh(lap3, {1.0, 0.0, -1.0}) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(rayleigh(lap3, {1.0, 1.0, 1.0}) == doctest::Approx(0.0).epsilon(0.0).scale(1e-12));
        const Matrix lap2 = laplacian(path_graph(2, {3.0}));
        CHECK(rayleigh(lap2, {1.0, -1.0}) == doctest::Approx(6.0).epsilon(1e-12));
        CHECK_THROWS_AS((rayleigh(lap2, {0.0, 0.0})), std::invalid_argument);
    }

    TEST_CASE("courant-fischer: lambda2 minimizes the rayleigh quotient over J-perp") {
        std::mt19937_64 rng(22);
        for (int trial = 0; trial < 10; ++trial) {
            const int n = 3 + static_cast<int>(rng() % 6);
            const WeightedGraph g = oracles::random_connected_graph(rng, n, 0.4);
            const Matrix lap = laplacian(g);
            const double lambda2 = eigendecompose(lap).eigenvalues[1];
            for (int k = 0; k < 200; ++k) {
                const std::vector<double> x = random_unit_perp_to_ones(rng, n);
                CHECK(rayleigh(lap, x) >= lambda2 - 1e-9);
            }
        }
    }

    TEST_CASE("pseudo-inverse of a single edge") {
        const double w = 2.5;
        const SpectralDecomposition dec = eigendecompose(laplacian(path_graph(2, {w})));
        const PseudoInverse lp = pseudo_inverse(dec);
        // Hand computation: eigenvalue 2w with unit eigenvector (1,-1)/sqrt(2)
        // gives (1/(4w)) [[1,-1],[-1,1]].
        const double q = 1.0 / (4.0 * w);
        CHECK(lp.matrix(0, 0) == doctest::Approx(q).epsilon(1e-12));
        CHECK(lp.matrix(0, 1) == doctest::Approx(-q).epsilon(1e-12));
        CHECK(lp.matrix(1, 1) == doctest::Approx(q).epsilon(1e-12));
    }

    TEST_CASE("pseudo-inverse trace of unweighted P3 is 4/3") {
        const PseudoInverse lp = pseudo_inverse(eigendecompose(laplacian(path_graph(3, {1, 1}))));
        const double trace = lp.matrix(0, 0) + lp.matrix(1, 1) + lp.matrix(2, 2);
        CHECK(trace == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
    }

    TEST_CASE("pseudo-inverse invariants on random graphs") {
        std::mt19937_64 rng(23);
        for (int trial = 0; trial < 30; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 7);
            const WeightedGraph g = oracles::random_connected_graph(rng, n, 0.4);
            const Matrix lap = laplacian(g);
            const PseudoInverse lp = pseudo_inverse(eigendecompose(lap));

            const std::vector<double> ones(n, 1.0);
            CHECK(norm_inf(multiply(lp.matrix, ones)) <= 1e-9);

            // Lp L = L Lp = projection onto the complement of J.
            const Matrix left = multiply(lp.matrix, lap);
            const Matrix right = multiply(lap, lp.matrix);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    const double expected = (i == j ? 1.0 : 0.0) - 1.0 / n;
                    CHECK(std::fabs(left(i, j) - expected) <= 1e-9);
                    CHECK(std::fabs(right(i, j) - expected) <= 1e-9);
                }
        }
    }

    TEST_CASE("path eigenvalues are simple for random positive weights") {
        std::mt19937_64 rng(24);
        for (int trial = 0; trial < 200; ++trial) {
            const int n = 3 + static_cast<int>(rng() % 7);
            const WeightedGraph g = path_graph(n, oracles::random_weights(rng, n - 1));
            const SpectralDecomposition dec = eigendecompose(laplacian(g));
            for (int k = 0; k + 1 < n; ++k)
                CHECK(dec.eigenvalues[k + 1] - dec.eigenvalues[k] > 0.0);
        }
    }

    TEST_CASE("monotonicity check on explicit vectors") {
        const WeightedGraph p3 = path_graph(3, {1.0, 1.0});
        CHECK(check_path_monotonicity(p3, {1.0, 0.0, -1.0}));
        CHECK_FALSE(check_path_monotonicity(p3, {1.0, -1.0, 1.0}));

        const WeightedGraph p4 = path_graph(4, {1, 1, 1});
        CHECK(check_path_monotonicity(p4, fiedler(eigendecompose(laplacian(p4))).vector));

        const WeightedGraph triangle(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});
        CHECK_THROWS_AS((check_path_monotonicity(triangle, {1.0, 0.0, -1.0})),
                        std::invalid_argument);
    }

    TEST_CASE("antisymmetry check on explicit paths") {
        const WeightedGraph p4 = path_graph(4, {1, 1, 1});
        CHECK(check_path_antisymmetry(p4, fiedler(eigendecompose(laplacian(p4))).vector));

        const WeightedGraph p3 = path_graph(3, {1, 1});
        CHECK(check_path_antisymmetry(p3, fiedler(eigendecompose(laplacian(p3))).vector));

        const WeightedGraph asym = path_graph(4, {1.0, 1.0, 2.0});
        CHECK_THROWS_AS((check_path_antisymmetry(asym, {1.0, 0.0, 0.0, -1.0})),
                        std::invalid_argument);
    }

    TEST_CASE("fiedler vectors of random paths are monotone") {
        std::mt19937_64 rng(25);
        for (int trial = 0; trial < 500; ++trial) {
            const int n = 3 + static_cast<int>(rng() % 7);
            const WeightedGraph g = path_graph(n, oracles::random_weights(rng, n - 1));
            const FiedlerPair f = fiedler(eigendecompose(laplacian(g)));
            CHECK(check_path_monotonicity(g, f.vector));
        }
    }

    TEST_CASE("fiedler vectors of random symmetric paths are antisymmetric") {
        std::mt19937_64 rng(26);
        for (int trial = 0; trial < 500; ++trial) {
            const int n = 3 + static_cast<int>(rng() % 7);
            std::vector<double> w = oracles::random_weights(rng, n - 1);
            for (int i = 0; i < n - 1; ++i) w[n - 2 - i] = w[i];  // mirror
            const WeightedGraph g = path_graph(n, w);
            const FiedlerPair f = fiedler(eigendecompose(laplacian(g)));
            CHECK(check_path_antisymmetry(g, f.vector));
            CHECK(check_path_monotonicity(g, f.vector));
        }
    }
}
