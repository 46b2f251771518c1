#include "qcent/cdyn.hpp"

#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "qcent/errors.hpp"
#include "qcent/grid.hpp"

using namespace qcent;

namespace {

ModelParams params(double alpha) {
    ModelParams p;
    p.alpha = alpha;
    return p;
}

TrajectoryEnsemble single(const PhasePoint& s) {
    TrajectoryEnsemble e;
    e.x = {s.x};
    e.y = {s.y};
    e.px = {s.px};
    e.py = {s.py};
    return e;
}

}  // namespace

TEST_CASE("verlet matches the RK4 oracle on a regular orbit") {
    const ModelParams p = params(0.03);
    PhasePoint v{0.0, 0.0, std::sqrt(15.0), std::sqrt(15.0)};
    PhasePoint r = v;
    for (int s = 0; s < 2500; ++s) v = verlet_step(p, v, 0.002);
    for (int s = 0; s < 50000; ++s) r = oracle::rk4_step(p, r, 1e-4);
    CHECK(std::abs(v.x - r.x) < 1e-2);
    CHECK(std::abs(v.y - r.y) < 1e-2);
    CHECK(std::abs(v.px - r.px) < 1e-2);
    CHECK(std::abs(v.py - r.py) < 1e-2);
}

TEST_CASE("diagonal orbit returns to the origin after a full period") {
    const ModelParams p = params(0.03);
    const double e0 = 1.5;
    const double period = 2.0 * half_period_diagonal(p, e0);  // 12.60
    CHECK(period == doctest::Approx(12.6006).epsilon(1e-4));

    const double dt = 0.002;
    PhasePoint s{0.0, 0.0, std::sqrt(p.mass * e0), std::sqrt(p.mass * e0)};
    const PhasePoint start = s;
    double best_dist = 1e9, best_t = 0.0;
    double t = 0.0;
    while (t < 1.05 * period) {
        s = verlet_step(p, s, dt);
        t += dt;
        if (t > 0.95 * period) {
            const double d = std::hypot(s.x - start.x, s.y - start.y);
            if (d < best_dist) {
                best_dist = d;
                best_t = t;
            }
        }
    }
    // The discrete trajectory can only approach the start point to within
    // one step of arc length, |v| dt at the origin crossing.
    const double step_arc = std::sqrt(2.0 * e0 / p.mass) * dt;
    CHECK(best_dist < step_arc);
    CHECK(best_t == doctest::Approx(period).epsilon(0.005));
}

TEST_CASE("ensemble propagation conserves energy per trajectory") {
    // Strong coupling needs dt = 5e-4 to hold the 1e-5 drift contract: the
    // x^2 y^2 wall makes sampled tail trajectories far stiffer than the mean,
    // and Verlet truncation error at dt = 2e-3 measures ~2.5e-5 for them.
    const ModelParams p = params(1.0);
    const auto d = classical_analog(
        GaussianSpec{0.0, 0.0, std::sqrt(15.0), std::sqrt(15.0), 0.5}, 1.0);
    WorkerPool pool(1);
    TrajectoryEnsemble e = sample_ensemble(d, 5000, 11, pool);
    const auto report = propagate_ensemble(p, e, 10000, 1000, 0.0005, pool);
    CHECK(report.steps == 10000);
    CHECK(report.energy_rel_drift < 1e-5);
}

TEST_CASE("momentum reversal retraces the ensemble") {
    const ModelParams p = params(1.0);
    const auto d = classical_analog(
        GaussianSpec{0.0, 0.0, std::sqrt(15.0), std::sqrt(15.0), 0.5}, 1.0);
    WorkerPool pool(1);
    TrajectoryEnsemble e = sample_ensemble(d, 500, 3, pool);
    const TrajectoryEnsemble start = e;
    propagate_ensemble(p, e, 4000, 4000, 0.0005, pool);
    for (auto& v : e.px) v = -v;
    for (auto& v : e.py) v = -v;
    propagate_ensemble(p, e, 4000, 4000, 0.0005, pool);
    double max_err = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        max_err = std::max(max_err, std::abs(e.x[i] - start.x[i]));
        max_err = std::max(max_err, std::abs(e.y[i] - start.y[i]));
        max_err = std::max(max_err, std::abs(-e.px[i] - start.px[i]));
        max_err = std::max(max_err, std::abs(-e.py[i] - start.py[i]));
    }
    CHECK(max_err < 1e-8);
}

TEST_CASE("quartic scaling equivariance of the integrator") {
    const ModelParams p = params(0.03);
    const double lambda = 2.0;
    PhasePoint a{0.0, 0.0, std::sqrt(1.5), std::sqrt(1.5)};
    PhasePoint b{0.0, 0.0, lambda * lambda * a.px, lambda * lambda * a.py};
    const double dt = 0.002;
    for (int s = 0; s < 4000; ++s) a = verlet_step(p, a, dt);
    for (int s = 0; s < 4000; ++s) b = verlet_step(p, b, dt / lambda);
    CHECK(b.x == doctest::Approx(lambda * a.x).epsilon(1e-6));
    CHECK(b.y == doctest::Approx(lambda * a.y).epsilon(1e-6));
    CHECK(b.px == doctest::Approx(lambda * lambda * a.px).epsilon(1e-6));
    CHECK(b.py == doctest::Approx(lambda * lambda * a.py).epsilon(1e-6));
}

TEST_CASE("mirrored initial data stays exactly mirrored, including histograms") {
    // The two branches of a symmetric superposition launch mirrored
    // sub-ensembles; the force is exactly odd, so (x,px) -> (-x,-px) with y
    // untouched commutes with the integrator bit for bit.
    const ModelParams p = params(1.0);
    ClassicalDensitySpec one;
    one.components.push_back({1.0, -2.5, 0.0, 5.46, 0.0, 0.5, 0.5});
    WorkerPool pool(1);
    TrajectoryEnsemble a = sample_ensemble(one, 100000, 17, pool);
    TrajectoryEnsemble b = a;
    for (auto& v : b.x) v = -v;
    for (auto& v : b.px) v = -v;

    propagate_ensemble(p, a, 1000, 1000, 0.0005, pool);
    propagate_ensemble(p, b, 1000, 1000, 0.0005, pool);
    for (std::size_t i = 0; i < a.size(); i += 311) {
        REQUIRE(b.x[i] == -a.x[i]);
        REQUIRE(b.px[i] == -a.px[i]);
        REQUIRE(b.y[i] == a.y[i]);
        REQUIRE(b.py[i] == a.py[i]);
    }

    const Grid1D g = make_grid(256, -16.0, 16.0, 1.0);
    PhaseSpaceHistogram ha(g), hb(g);
    ha.accumulate(a.x, a.px, pool);
    hb.accumulate(b.x, b.px, pool);
    // L1 distance between one histogram and the mirror of the other,
    // normalized by sample count; exact mirroring leaves only edge ties
    double l1 = 0.0;
    for (int i = 0; i < ha.nx(); ++i)
        for (int j = 0; j < ha.np(); ++j)
            l1 += std::abs(static_cast<double>(
                ha.count(i, j) - hb.count(ha.nx() - 1 - i, ha.np() - 1 - j)));
    CHECK(l1 / static_cast<double>(a.size()) <= 0.02);
}

TEST_CASE("ensemble stepping is bit-identical for any worker count") {
    const ModelParams p = params(1.0);
    const auto d = classical_analog(
        GaussianSpec{0.0, 0.0, std::sqrt(15.0), std::sqrt(15.0), 0.5}, 1.0);
    WorkerPool p1(1);
    TrajectoryEnsemble ref = sample_ensemble(d, 5000, 23, p1);
    propagate_ensemble(p, ref, 100, 50, 0.0005, p1);
    for (const int w : {3, 8}) {
        WorkerPool pw(w);
        TrajectoryEnsemble e = sample_ensemble(d, 5000, 23, pw);
        propagate_ensemble(p, e, 100, 50, 0.0005, pw);
        for (std::size_t i = 0; i < e.size(); ++i) {
            REQUIRE(e.x[i] == ref.x[i]);
            REQUIRE(e.y[i] == ref.y[i]);
            REQUIRE(e.px[i] == ref.px[i]);
            REQUIRE(e.py[i] == ref.py[i]);
        }
    }
}

TEST_CASE("divergent trajectories abort with an index") {
    const ModelParams p = params(1.0);
    TrajectoryEnsemble e = single({0.0, 0.0, 1.0, 1.0});
    e.x.push_back(std::nan(""));
    e.y.push_back(0.0);
    e.px.push_back(0.0);
    e.py.push_back(0.0);
    WorkerPool pool(1);
    CHECK_THROWS_AS(propagate_ensemble(p, e, 10, 5, 0.002, pool), IntegrityError);

    // absurd dt violates the energy budget instead of diverging silently
    TrajectoryEnsemble e2 = single({0.0, 0.0, std::sqrt(30.0), 0.0});
    CHECK_THROWS_AS(propagate_ensemble(p, e2, 100, 10, 0.5, pool), IntegrityError);
}
