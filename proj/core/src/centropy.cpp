#include "qcent/centropy.hpp"

#include <cmath>
#include <numbers>

#include "qcent/errors.hpp"
#include "qcent/parallel.hpp"

namespace qcent {

PhaseSpaceHistogram bin_snapshot(std::span<const double> xs,
                                 std::span<const double> ps, const Grid1D& grid,
                                 WorkerPool& pool, double pixel_scale) {
    if (xs.empty()) {
        throw ValidationError("centropy.empty", "cannot bin an empty snapshot");
    }
    PhaseSpaceHistogram h(grid, pixel_scale);
    h.accumulate(xs, ps, pool);
    return h;
}

double classical_linear_entropy(const PhaseSpaceHistogram& h, double hbar) {
    // sum rho^2 dx dp = sum c^2 / (n^2 dx dp); summed in fixed pixel order on
    // one thread so the result does not depend on the worker count.
    const double n = static_cast<double>(h.total());
    double sum_sq = 0.0;
    for (const std::int64_t c : h.counts()) {
        const double cd = static_cast<double>(c);
        sum_sq += cd * cd;
    }
    return 1.0 -
           2.0 * std::numbers::pi * hbar * sum_sq / (n * n * h.pixel_area());
}

double classical_von_neumann_entropy(const PhaseSpaceHistogram& h,
                                     double hbar) {
    // Each occupied pixel contributes -(c/n) ln(2 pi hbar c / (n dx dp)).
    const double n = static_cast<double>(h.total());
    const double scale = 2.0 * std::numbers::pi * hbar / (n * h.pixel_area());
    double s = 0.0;
    for (const std::int64_t c : h.counts()) {
        if (c == 0) continue;
        const double cd = static_cast<double>(c);
        s -= cd / n * std::log(scale * cd);
    }
    return s;
}

}  // namespace qcent
