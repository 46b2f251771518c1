#include "qcent/model.hpp"

#include <cmath>
#include <limits>

#include "qcent/errors.hpp"

namespace qcent {

void ModelParams::validate() const {
    if (!(mass > 0.0)) throw ValidationError("model.mass", "mass must be positive");
    if (!(hbar > 0.0)) throw ValidationError("model.hbar", "hbar must be positive");
    if (!(beta > 0.0)) throw ValidationError("model.beta", "beta must be positive");
    if (alpha < 0.0) throw ValidationError("model.alpha", "alpha must be non-negative");
    if (!(sigma2 > 0.0)) throw ValidationError("model.sigma2", "sigma2 must be positive");
}

double hyp2f1_series(double a, double b, double c, double z) {
    if (z < 0.0 || z > 1.0)
        throw ValidationError("model.hyp2f1", "series argument outside [0, 1]");
    if (z == 1.0) {
        // Gauss summation; the series at z = 1 converges but with a k^(-1-(c-a-b))
        // tail that cannot reach 1e-12 within the term cap.
        return std::tgamma(c) * std::tgamma(c - a - b) /
               (std::tgamma(c - a) * std::tgamma(c - b));
    }
    double term = 1.0;
    double sum = 1.0;
    for (std::size_t k = 0; k < 100000; ++k) {
        const double kd = static_cast<double>(k);
        term *= (a + kd) * (b + kd) / ((c + kd) * (kd + 1.0)) * z;
        sum += term;
        if (std::abs(term) < 1e-12) break;
    }
    return sum;
}

double turning_point_diagonal(const ModelParams& p, double e0) {
    if (!(e0 > 0.0)) throw ValidationError("model.energy", "energy must be positive");
    // V(x, x) = ((beta + alpha)/2) x^4 = e0
    return std::pow(2.0 * e0 / (p.beta + p.alpha), 0.25);
}

double turning_point_channel(const ModelParams& p, double e0) {
    if (!(e0 > 0.0)) throw ValidationError("model.energy", "energy must be positive");
    // V(x, 0) = (beta/4) x^4 = e0
    return std::pow(4.0 * e0 / p.beta, 0.25);
}

namespace {

// Half period of 1d motion in (g/4) u^4 from u = -u0 to u0 at energy e0:
//   tau = 2 u0 / sqrt(2 e0 / mu) * F,  F = 2F1(1/4, 1/2; 5/4; 1)
// with u0 the turning point and mu the effective mass along the orbit.
double quartic_half_period(double mu, double g, double e0) {
    const double u0 = std::pow(4.0 * e0 / g, 0.25);
    const double f1 = hyp2f1_series(0.25, 0.5, 1.25, 1.0);
    return 2.0 * u0 / std::sqrt(2.0 * e0 / mu) * f1;
}

}  // namespace

double half_period_diagonal(const ModelParams& p, double e0) {
    if (!(e0 > 0.0)) throw ValidationError("model.energy", "energy must be positive");
    // Projected on x, the diagonal orbit x = y carries kinetic energy m xdot^2
    // (both axes move), so it is a 1d quartic with mu = 2m, g = 2(beta+alpha).
    return quartic_half_period(2.0 * p.mass, 2.0 * (p.beta + p.alpha), e0);
}

double half_period_channel(const ModelParams& p, double e0) {
    if (!(e0 > 0.0)) throw ValidationError("model.energy", "energy must be positive");
    return quartic_half_period(p.mass, p.beta, e0);
}

double spreading_extent(const ModelParams& p, double e0) {
    if (!(e0 > 0.0)) throw ValidationError("model.energy", "energy must be positive");
    return 2.0 * std::pow(2.0 * p.mass * e0 / (p.beta + p.alpha), 0.25);
}

double free_spreading_width(const ModelParams& p, double t) {
    const double s2 = p.sigma2;
    const double r = p.hbar * t / (2.0 * p.mass * s2);
    return std::sqrt(s2) * std::sqrt(1.0 + r * r);
}

double free_spreading_time(const ModelParams& p, double w) {
    const double sigma = std::sqrt(p.sigma2);
    if (w < sigma)
        throw ValidationError("model.spreading", "target width below initial width");
    const double r = w / sigma;
    return 2.0 * p.mass * p.sigma2 / p.hbar * std::sqrt(r * r - 1.0);
}

}  // namespace qcent
