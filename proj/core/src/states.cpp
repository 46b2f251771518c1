#include "qcent/states.hpp"

#include <cmath>
#include <numbers>

#include "qcent/errors.hpp"
#include "qcent/rng.hpp"

namespace qcent {

namespace {

constexpr double kCoverSigmas = 5.0;

void check_axis_coverage(const Grid1D& g, double center, double momentum,
                         double sigma2, const char* axis) {
    const double sx = std::sqrt(sigma2);
    const double sp = g.hbar / (2.0 * sx);
    if (center - kCoverSigmas * sx < g.x_min || center + kCoverSigmas * sx > g.x_max())
        throw ValidationError("states.coverage",
                              std::string("grid does not cover 5 sigma around the ") +
                                  axis + " center");
    if (std::abs(momentum) + kCoverSigmas * sp > g.p_abs_max())
        throw ValidationError("states.coverage",
                              std::string("momentum lattice does not cover the ") + axis +
                                  " packet");
}

// exp(-(x-c)^2/4s^2 + i p x / hbar) sampled on the lattice.
std::vector<std::complex<double>> packet_axis(const Grid1D& g, double c, double p,
                                              double sigma2) {
    std::vector<std::complex<double>> a(g.n);
    const double inv4s2 = 1.0 / (4.0 * sigma2);
    for (int i = 0; i < g.n; ++i) {
        const double dx = g.x[i] - c;
        const double ph = p * g.x[i] / g.hbar;
        a[i] = std::exp(-dx * dx * inv4s2) * std::complex<double>(std::cos(ph), std::sin(ph));
    }
    return a;
}

}  // namespace

BellSpec make_paired_bell(double x1, double px1, double x2, double px2, double sigma2) {
    BellSpec s;
    s.x1 = x1;
    s.px1 = px1;
    s.x2 = x2;
    s.px2 = px2;
    s.y1 = x2;
    s.py1 = px2;
    s.y2 = x1;
    s.py2 = px1;
    s.sigma2 = sigma2;
    return s;
}

ComplexField2D build_gaussian(const GaussianSpec& s, const Grid1D& gx, const Grid1D& gy) {
    if (!(s.sigma2 > 0.0)) throw ValidationError("states.sigma2", "sigma2 must be positive");
    check_axis_coverage(gx, s.x0, s.px0, s.sigma2, "x");
    check_axis_coverage(gy, s.y0, s.py0, s.sigma2, "y");
    const auto ax = packet_axis(gx, s.x0, s.px0, s.sigma2);
    const auto ay = packet_axis(gy, s.y0, s.py0, s.sigma2);
    ComplexField2D f(gx, gy);
    for (int i = 0; i < gx.n; ++i)
        for (int j = 0; j < gy.n; ++j) f.at(i, j) = ax[i] * ay[j];
    f.normalize();
    return f;
}

ComplexField2D build_cat(const CatSpec& s, const Grid1D& gx, const Grid1D& gy) {
    if (!(s.sigma2 > 0.0)) throw ValidationError("states.sigma2", "sigma2 must be positive");
    check_axis_coverage(gx, s.x1, s.px1, s.sigma2, "x");
    check_axis_coverage(gx, s.x2, s.px2, s.sigma2, "x");
    check_axis_coverage(gy, s.y0, s.py0, s.sigma2, "y");
    const auto a1 = packet_axis(gx, s.x1, s.px1, s.sigma2);
    const auto a2 = packet_axis(gx, s.x2, s.px2, s.sigma2);
    const auto ay = packet_axis(gy, s.y0, s.py0, s.sigma2);
    ComplexField2D f(gx, gy);
    for (int i = 0; i < gx.n; ++i) {
        const std::complex<double> ax = a1[i] + a2[i];
        for (int j = 0; j < gy.n; ++j) f.at(i, j) = ax * ay[j];
    }
    f.normalize();
    return f;
}

ComplexField2D build_bell(const BellSpec& s, const Grid1D& gx, const Grid1D& gy) {
    if (!(s.sigma2 > 0.0)) throw ValidationError("states.sigma2", "sigma2 must be positive");
    check_axis_coverage(gx, s.x1, s.px1, s.sigma2, "x");
    check_axis_coverage(gx, s.x2, s.px2, s.sigma2, "x");
    check_axis_coverage(gy, s.y1, s.py1, s.sigma2, "y");
    check_axis_coverage(gy, s.y2, s.py2, s.sigma2, "y");
    const auto a1 = packet_axis(gx, s.x1, s.px1, s.sigma2);
    const auto a2 = packet_axis(gx, s.x2, s.px2, s.sigma2);
    const auto b1 = packet_axis(gy, s.y1, s.py1, s.sigma2);
    const auto b2 = packet_axis(gy, s.y2, s.py2, s.sigma2);
    ComplexField2D f(gx, gy);
    for (int i = 0; i < gx.n; ++i)
        for (int j = 0; j < gy.n; ++j) f.at(i, j) = a1[i] * b1[j] + a2[i] * b2[j];
    f.normalize();
    return f;
}

std::complex<double> packet_overlap(double x1, double p1, double x2, double p2,
                                    double sigma2, double hbar) {
    const double dx = x1 - x2;
    const double dp = p2 - p1;
    const double xbar = 0.5 * (x1 + x2);
    const double mag =
        std::exp(-dx * dx / (8.0 * sigma2) - sigma2 * dp * dp / (2.0 * hbar * hbar));
    const double ph = dp * xbar / hbar;
    return mag * std::complex<double>(std::cos(ph), std::sin(ph));
}

double cat_norm_constant(const CatSpec& s, double hbar) {
    const auto ov = packet_overlap(s.x1, s.px1, s.x2, s.px2, s.sigma2, hbar);
    return 1.0 / std::sqrt(1.0 + ov.real());
}

namespace {

// Coefficient and Gram matrices of the two-term pair in the packet basis.
struct PairAlgebra {
    std::complex<double> s;  // <g1|g2>
    std::complex<double> t;  // <h1|h2>
    double a2;               // A^2
};

PairAlgebra pair_algebra(const BellSpec& sp, double hbar) {
    PairAlgebra pa;
    pa.s = packet_overlap(sp.x1, sp.px1, sp.x2, sp.px2, sp.sigma2, hbar);
    pa.t = packet_overlap(sp.y1, sp.py1, sp.y2, sp.py2, sp.sigma2, hbar);
    pa.a2 = 1.0 / (1.0 + (pa.s * pa.t).real());
    return pa;
}

}  // namespace

double bell_norm_constant(const BellSpec& s, double hbar) {
    return std::sqrt(pair_algebra(s, hbar).a2);
}

std::pair<double, double> bell_initial_spectrum(const BellSpec& sp, double hbar) {
    const PairAlgebra pa = pair_algebra(sp, hbar);
    // rho_X acts on span{g1,g2} as the matrix (C G) with
    // C = A^2/2 [[1, t*],[t, 1]] and G = [[1, s],[s*, 1]]; its eigenvalues
    // are the two Schmidt weights.
    const std::complex<double> m11 = 1.0 + std::conj(pa.t) * std::conj(pa.s);
    const std::complex<double> m12 = pa.s + std::conj(pa.t);
    const std::complex<double> m21 = pa.t + std::conj(pa.s);
    const std::complex<double> m22 = pa.t * pa.s + 1.0;
    const double half = 0.5 * pa.a2;
    const std::complex<double> tr = half * (m11 + m22);
    const std::complex<double> det = half * half * (m11 * m22 - m12 * m21);
    const std::complex<double> disc = std::sqrt(tr * tr - 4.0 * det);
    const double l1 = 0.5 * (tr + disc).real();
    const double l2 = 0.5 * (tr - disc).real();
    return {std::max(l1, l2), std::min(l1, l2)};
}

double bell_initial_purity(const BellSpec& sp, double hbar) {
    const auto [l1, l2] = bell_initial_spectrum(sp, hbar);
    return l1 * l1 + l2 * l2;
}

ClassicalDensitySpec classical_analog(const GaussianSpec& s, double hbar) {
    ClassicalComponent c;
    c.weight = 1.0;
    c.x = s.x0;
    c.y = s.y0;
    c.px = s.px0;
    c.py = s.py0;
    c.var_pos = s.sigma2;
    c.var_mom = hbar * hbar / (4.0 * s.sigma2);
    return {{c}};
}

ClassicalDensitySpec classical_analog(const CatSpec& s, double hbar) {
    const double var_mom = hbar * hbar / (4.0 * s.sigma2);
    if (s.x1 == s.x2 && s.px1 == s.px2) {
        ClassicalComponent c{1.0, s.x1, s.y0, s.px1, s.py0, s.sigma2, var_mom};
        return {{c}};
    }
    ClassicalComponent c1{0.5, s.x1, s.y0, s.px1, s.py0, s.sigma2, var_mom};
    ClassicalComponent c2{0.5, s.x2, s.y0, s.px2, s.py0, s.sigma2, var_mom};
    return {{c1, c2}};
}

ClassicalDensitySpec classical_analog(const BellSpec& s, double hbar) {
    const double var_mom = hbar * hbar / (4.0 * s.sigma2);
    if (s.x1 == s.x2 && s.px1 == s.px2 && s.y1 == s.y2 && s.py1 == s.py2) {
        ClassicalComponent c{1.0, s.x1, s.y1, s.px1, s.py1, s.sigma2, var_mom};
        return {{c}};
    }
    ClassicalComponent c1{0.5, s.x1, s.y1, s.px1, s.py1, s.sigma2, var_mom};
    ClassicalComponent c2{0.5, s.x2, s.y2, s.px2, s.py2, s.sigma2, var_mom};
    return {{c1, c2}};
}

TrajectoryEnsemble sample_ensemble(const ClassicalDensitySpec& d, std::size_t n,
                                   std::uint64_t seed, WorkerPool& pool) {
    if (d.components.empty())
        throw ValidationError("states.density", "density has no components");
    double wsum = 0.0;
    for (const auto& c : d.components) {
        if (c.weight < 0.0 || !(c.var_pos > 0.0) || !(c.var_mom > 0.0))
            throw ValidationError("states.density", "invalid component");
        wsum += c.weight;
    }
    if (std::abs(wsum - 1.0) > 1e-9)
        throw ValidationError("states.density", "component weights must sum to 1");

    std::vector<double> cum(d.components.size());
    double acc = 0.0;
    for (std::size_t c = 0; c < d.components.size(); ++c) {
        acc += d.components[c].weight;
        cum[c] = acc;
    }
    cum.back() = 1.0;

    TrajectoryEnsemble e;
    e.seed = seed;
    e.x.resize(n);
    e.y.resize(n);
    e.px.resize(n);
    e.py.resize(n);

    pool.run_blocks(n, [&](int, std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            SplitMix64 rng(substream_seed(seed, i));
            const double u = rng.uniform01();
            std::size_t ci = 0;
            while (ci + 1 < cum.size() && u >= cum[ci]) ++ci;
            const ClassicalComponent& c = d.components[ci];
            const double sx = std::sqrt(c.var_pos);
            const double sp = std::sqrt(c.var_mom);
            double z0, z1, z2, z3;
            rng.normal_pair(z0, z1);
            rng.normal_pair(z2, z3);
            e.x[i] = c.x + sx * z0;
            e.y[i] = c.y + sx * z1;
            e.px[i] = c.px + sp * z2;
            e.py[i] = c.py + sp * z3;
        }
    });
    return e;
}

double analytic_reduced_wigner(const GaussianSpec& s, double hbar, double x, double px) {
    const double dx = x - s.x0;
    const double dp = px - s.px0;
    return std::exp(-dx * dx / (2.0 * s.sigma2) -
                    2.0 * s.sigma2 * dp * dp / (hbar * hbar)) /
           (std::numbers::pi * hbar);
}

namespace {

double packet_wigner(double sigma2, double hbar, double x, double px) {
    return std::exp(-x * x / (2.0 * sigma2) - 2.0 * sigma2 * px * px / (hbar * hbar)) /
           (std::numbers::pi * hbar);
}

// Two-branch reduced Wigner: diagonal packets plus one oscillatory ridge at
// the midpoint, attenuated by the y-overlap factor t.
double two_branch_wigner(double x1, double p1, double x2, double p2, double sigma2,
                         double a2, std::complex<double> t, double hbar, double x,
                         double px) {
    const double xbar = 0.5 * (x1 + x2), pbar = 0.5 * (p1 + p2);
    const double diag = 0.5 * (packet_wigner(sigma2, hbar, x - x1, px - p1) +
                               packet_wigner(sigma2, hbar, x - x2, px - p2));
    const double phase =
        ((p2 - p1) * x + (x1 - x2) * (px - pbar)) / hbar - std::arg(t);
    const double ridge = std::abs(t) * packet_wigner(sigma2, hbar, x - xbar, px - pbar) *
                         std::cos(phase);
    return a2 * (diag + ridge);
}

}  // namespace

double analytic_reduced_wigner(const CatSpec& s, double hbar, double x, double px) {
    const double a = cat_norm_constant(s, hbar);
    return two_branch_wigner(s.x1, s.px1, s.x2, s.px2, s.sigma2, a * a, {1.0, 0.0}, hbar,
                             x, px);
}

double analytic_reduced_wigner(const BellSpec& s, double hbar, double x, double px) {
    const PairAlgebra pa = pair_algebra(s, hbar);
    return two_branch_wigner(s.x1, s.px1, s.x2, s.px2, s.sigma2, pa.a2, pa.t, hbar, x,
                             px);
}

}  // namespace qcent
