#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qcent/grid.hpp"
#include "qcent/model.hpp"
#include "qcent/parallel.hpp"

namespace qcent {

// Minimum-uncertainty packet exp(-(x-x0)^2/4s^2 + i px0 x / hbar) per axis.
struct GaussianSpec {
    double x0 = 0.0, y0 = 0.0;
    double px0 = 0.0, py0 = 0.0;
    double sigma2 = 0.5;
};

// Superposition of two packets in x sharing one y packet:
//   psi = A (g1(x) + g2(x)) h(y) / sqrt(2)
struct CatSpec {
    double x1 = 0.0, px1 = 0.0;
    double x2 = 0.0, px2 = 0.0;
    double y0 = 0.0, py0 = 0.0;
    double sigma2 = 0.5;
};

// Two-term entangled pair:  psi = A (g1(x) h1(y) + g2(x) h2(y)) / sqrt(2)
struct BellSpec {
    double x1 = 0.0, px1 = 0.0;
    double x2 = 0.0, px2 = 0.0;
    double y1 = 0.0, py1 = 0.0;
    double y2 = 0.0, py2 = 0.0;
    double sigma2 = 0.5;
};

// Default pairing: the y factors swap the two x centers, so tracing either
// subsystem sees the same pair of packets.
BellSpec make_paired_bell(double x1, double px1, double x2, double px2, double sigma2);

ComplexField2D build_gaussian(const GaussianSpec& s, const Grid1D& gx, const Grid1D& gy);
ComplexField2D build_cat(const CatSpec& s, const Grid1D& gx, const Grid1D& gy);
ComplexField2D build_bell(const BellSpec& s, const Grid1D& gx, const Grid1D& gy);

// <g1|g2> for packets (x1,p1), (x2,p2) of common width:
//   exp(-dx^2/8s^2 - s^2 dp^2/2hbar^2) * exp(i dp xbar / hbar), dp = p2-p1.
std::complex<double> packet_overlap(double x1, double p1, double x2, double p2,
                                    double sigma2, double hbar);

// Normalization A in the conventions above; 1/sqrt(2) when the two branches
// coincide, 1 when they are far separated.
double cat_norm_constant(const CatSpec& s, double hbar);
double bell_norm_constant(const BellSpec& s, double hbar);

// Schmidt weights of the two-term pair at t = 0 from the 2x2 overlap algebra
// (no grid involved).  Far separated -> {1/2, 1/2}; coincident -> {1, 0}.
std::pair<double, double> bell_initial_spectrum(const BellSpec& s, double hbar);
double bell_initial_purity(const BellSpec& s, double hbar);

// Weighted Gaussian mixture in (x, y, px, py): the quantum state's Wigner
// function with interference terms dropped and weights renormalized.
struct ClassicalComponent {
    double weight = 1.0;
    double x = 0.0, y = 0.0, px = 0.0, py = 0.0;
    double var_pos = 0.5;  // sigma2
    double var_mom = 0.5;  // hbar^2 / 4 sigma2
};

struct ClassicalDensitySpec {
    std::vector<ClassicalComponent> components;
};

ClassicalDensitySpec classical_analog(const GaussianSpec& s, double hbar);
// Coincident branches collapse to a single unit-weight component.
ClassicalDensitySpec classical_analog(const CatSpec& s, double hbar);
ClassicalDensitySpec classical_analog(const BellSpec& s, double hbar);

struct TrajectoryEnsemble {
    std::vector<double> x, y, px, py;
    std::uint64_t seed = 0;
    std::size_t size() const { return x.size(); }
};

// One independent splitmix64 stream per trajectory index: draws depend only
// on (seed, index), so results are identical for any worker count.
TrajectoryEnsemble sample_ensemble(const ClassicalDensitySpec& d, std::size_t n,
                                   std::uint64_t seed, WorkerPool& pool);

// Closed-form Wigner density of the x subsystem at t = 0, for validation
// against binned samples and the classical-analog construction.
double analytic_reduced_wigner(const GaussianSpec& s, double hbar, double x, double px);
double analytic_reduced_wigner(const CatSpec& s, double hbar, double x, double px);
double analytic_reduced_wigner(const BellSpec& s, double hbar, double x, double px);

}  // namespace qcent
