#include "fiedler/closedform.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fiedler {

namespace {

void require_open_interval(double r, double lo, double hi, const char* who) {
    if (!(r > lo) || !(r < hi))
        throw std::invalid_argument(std::string(who) + ": r outside the open domain");
}

}  // namespace

double p3_lambda2(double r) {
    require_open_interval(r, 0.0, 2.0, "p3_lambda2");
    return 3.0 / (2.0 + std::sqrt(3.0 * r * r - 6.0 * r + 4.0));
}

double p3_lambda3(double r) {
    require_open_interval(r, 0.0, 2.0, "p3_lambda3");
    return 3.0 / (2.0 - std::sqrt(3.0 * r * r - 6.0 * r + 4.0));
}

double p4_lambda2_symmetric(double r) {
    require_open_interval(r, 0.0, 5.0 / 3.0, "p4_lambda2_symmetric");
    return (5.0 - r - std::sqrt(13.0 * r * r - 30.0 * r + 25.0)) / (r * (5.0 - 3.0 * r));
}

P4Optimum p4_optimum() {
    const double r0 = (5.0 / 13.0) * (3.0 + 1.0 / std::sqrt(3.0));
    const double d = 1.0 / r0;
    const double c = 2.0 / (5.0 - 3.0 * r0);
    return P4Optimum{r0, 2.0 - 4.0 * std::sqrt(3.0) / 5.0, {d, c, d}};
}

std::array<double, 3> symmetrize_harmonic(double c1, double c2, double c3) {
    if (!(c1 > 0.0) || !(c2 > 0.0) || !(c3 > 0.0))
        throw std::invalid_argument("symmetrize_harmonic: weights must be positive");
    const double d = 2.0 * c1 * c3 / (c1 + c3);
    return {d, c2, d};
}

}  // namespace fiedler
