#pragma once

#include <cstddef>

namespace qcent {

// Two quartic oscillators with a biquadratic coupling:
//   H = (px^2 + py^2)/2m + (beta/4)(x^4 + y^4) + (alpha/2) x^2 y^2
// alpha/beta ~ 3 gives near-integrable motion, alpha/beta ~ 100 strong chaos.
struct ModelParams {
    double mass = 1.0;
    double hbar = 1.0;
    double alpha = 0.03;
    double beta = 0.01;
    double sigma2 = 0.5;  // position variance of the reference wavepacket

    void validate() const;  // throws ValidationError on nonphysical values
};

struct PhasePoint {
    double x = 0.0;
    double y = 0.0;
    double px = 0.0;
    double py = 0.0;
};

inline double potential(const ModelParams& p, double x, double y) {
    const double x2 = x * x;
    const double y2 = y * y;
    return 0.25 * p.beta * (x2 * x2 + y2 * y2) + 0.5 * p.alpha * x2 * y2;
}

inline double hamiltonian(const ModelParams& p, const PhasePoint& s) {
    return (s.px * s.px + s.py * s.py) / (2.0 * p.mass) + potential(p, s.x, s.y);
}

struct Force {
    double fx = 0.0;  // -dV/dx
    double fy = 0.0;  // -dV/dy
};

// Odd in each coordinate exactly: sign flips commute with the floating-point
// evaluation, which the mirror-symmetry guarantees rely on.
inline Force force(const ModelParams& p, double x, double y) {
    const double x2 = x * x;
    const double y2 = y * y;
    return {-(p.beta * x2 * x + p.alpha * x * y2),
            -(p.beta * y2 * y + p.alpha * y * x2)};
}

// Gauss series sum_k (a)_k (b)_k / (c)_k z^k / k! for 0 <= z <= 1.
// Terms are added until below 1e-12 or 1e5 terms; at z = 1 the series tail
// decays too slowly for that, so the closed form G(c)G(c-a-b)/(G(c-a)G(c-b))
// is used instead (valid here since c-a-b > 0).
double hyp2f1_series(double a, double b, double c, double z);

// Classical turning point on the diagonal x = y at energy e0: V(x,x) = e0.
double turning_point_diagonal(const ModelParams& p, double e0);
// Turning point for motion along one axis (other coordinate at rest).
double turning_point_channel(const ModelParams& p, double e0);

// Half period of the orbit launched from the origin along the diagonal
// with energy e0.  Exact quadrature value; within 1% of
// 3.12 [m^2 (beta+alpha) e0]^(-1/4).
double half_period_diagonal(const ModelParams& p, double e0);

// Half period of the one-dimensional orbit along a coordinate axis.
// Independent of alpha; within 1% of 2.62 (m^2 beta e0)^(-1/4).
double half_period_channel(const ModelParams& p, double e0);

// Width of the classically allowed strip crossed by a diagonal orbit,
// measured transverse to the direction of motion: 2 (2 m e0/(beta+alpha))^(1/4).
double spreading_extent(const ModelParams& p, double e0);

// Free-particle dispersion of a Gaussian of initial width sigma = sqrt(sigma2):
// sigma(t) = sigma sqrt(1 + (hbar t / 2 m sigma^2)^2).
double free_spreading_width(const ModelParams& p, double t);

// Time at which free dispersion reaches width w (>= sqrt(sigma2)).
double free_spreading_time(const ModelParams& p, double w);

}  // namespace qcent
