#pragma once

#include <array>

namespace fiedler {

/// One point of an algebraic-connectivity-vs-resistance curve.
/// `lambda3` is meaningful for the P3 family only (NaN otherwise).
struct CurveSample {
    double r;
    double lambda2;
    double lambda3;
};

/// Exact optimum of lambda2 over P4 weightings with total resistance 10.
struct P4Optimum {
    double r0;                      // (5/13)(3 + 1/sqrt(3))
    double lambda2;                 // 2 - 4 sqrt(3)/5
    std::array<double, 3> weights;  // {1/r0, 2/(5 - 3 r0), 1/r0}
};

/// lambda2 of P3 with edge resistances {r, 2-r}: 3/(2 + sqrt(3r^2 - 6r + 4)).
/// Domain (0, 2); throws at or beyond the endpoints.
double p3_lambda2(double r);

/// lambda3 of the same family: 3/(2 - sqrt(3r^2 - 6r + 4)). Satisfies
/// 1/lambda2 + 1/lambda3 = 4/3 identically.
double p3_lambda3(double r);

/// lambda2 of P4 with symmetric weights {1/r, 2/(5-3r), 1/r} (total
/// resistance 10): (5 - r - sqrt(13r^2 - 30r + 25)) / (r(5-3r)).
/// Domain (0, 5/3).
double p4_lambda2_symmetric(double r);

P4Optimum p4_optimum();

/// Replaces the outer weights of a P4 triple by the harmonic mean
/// d = 2 c1 c3 / (c1 + c3). Preserves the total effective resistance and
/// never decreases lambda2.
std::array<double, 3> symmetrize_harmonic(double c1, double c2, double c3);

}  // namespace fiedler
