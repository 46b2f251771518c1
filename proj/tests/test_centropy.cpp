#include "qcent/centropy.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "qcent/errors.hpp"
#include "qcent/parallel.hpp"
#include "qcent/states.hpp"

using namespace qcent;

namespace {

// 256 pixels on [-16,16) with hbar=1; pixel area is 2*pi/256, far below one
// hbar cell, so single-pixel concentrations go strongly sub-Planck.
Grid1D anchor_grid() { return make_grid(256, -16.0, 16.0, 1.0); }

}  // namespace

TEST_CASE("empty snapshots are rejected") {
    WorkerPool pool(1);
    const Grid1D g = anchor_grid();
    std::vector<double> none;
    CHECK_THROWS_AS(bin_snapshot(none, none, g, pool), ValidationError);
}

TEST_CASE("single occupied pixel reproduces the closed forms") {
    WorkerPool pool(1);
    const Grid1D g = anchor_grid();
    // Pixel centers cannot land on an edge, so every sample hits one bin.
    const double xc = g.x_min + 10.5 * g.dx;
    const double pc = -3.5 * g.dp;
    std::vector<double> xs(1000, xc), ps(1000, pc);
    const PhaseSpaceHistogram h = bin_snapshot(xs, ps, g, pool);
    CHECK(h.total() == 1000);
    CHECK(h.out_of_range() == 0);

    const double cell = h.pixel_area();
    const double sl = classical_linear_entropy(h, 1.0);
    const double sv = classical_von_neumann_entropy(h, 1.0);
    CHECK(sl == doctest::Approx(1.0 - 2.0 * std::numbers::pi / cell)
                    .epsilon(1e-12));
    CHECK(sv == doctest::Approx(std::log(cell / (2.0 * std::numbers::pi)))
                    .epsilon(1e-12));
    // dx dp n = 2 pi hbar makes these exactly 1 - n and -ln n.
    CHECK(sl == doctest::Approx(1.0 - 256.0).epsilon(1e-9));
    CHECK(sv == doctest::Approx(-std::log(256.0)).epsilon(1e-9));
    CHECK(sub_planck_concentration(sl));
}

TEST_CASE("uniform density over k pixels gives ln of the area in hbar cells") {
    WorkerPool pool(1);
    const Grid1D g = anchor_grid();
    // 12 x 9 block of pixels, 7 samples dropped on each center.
    std::vector<double> xs, ps;
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 9; ++j)
            for (int r = 0; r < 7; ++r) {
                xs.push_back(g.x_min + (40.5 + i) * g.dx);
                ps.push_back((-20.5 + j) * g.dp);
            }
    const PhaseSpaceHistogram h = bin_snapshot(xs, ps, g, pool);
    const double area = 12.0 * 9.0 * h.pixel_area();
    const double two_pi = 2.0 * std::numbers::pi;
    CHECK(classical_von_neumann_entropy(h, 1.0) ==
          doctest::Approx(std::log(area / two_pi)).epsilon(1e-12));
    CHECK(classical_linear_entropy(h, 1.0) ==
          doctest::Approx(1.0 - two_pi / area).epsilon(1e-12));
}

TEST_CASE("sampled Gaussian cloud lands on the analytic entropies") {
    // For sigma_x sigma_p = hbar/2 the exact values are S_L = 0 and
    // S_V = 1 - ln 2; box counting has to approach them as n grows.
    WorkerPool pool(1);
    const Grid1D g = anchor_grid();
    const auto d = classical_analog(GaussianSpec{0.0, 0.0, 0.0, 0.0, 0.5}, 1.0);
    const double sv_exact = 1.0 - std::log(2.0);

    TrajectoryEnsemble small = sample_ensemble(d, 10000, 5, pool);
    PhaseSpaceHistogram hs = bin_snapshot(small.x, small.px, g, pool);
    CHECK(classical_linear_entropy(hs, 1.0) == doctest::Approx(0.0).scale(1.0).epsilon(0.05));
    CHECK(classical_von_neumann_entropy(hs, 1.0) ==
          doctest::Approx(sv_exact).scale(1.0).epsilon(0.05));

    TrajectoryEnsemble big = sample_ensemble(d, 100000, 5, pool);
    PhaseSpaceHistogram hb = bin_snapshot(big.x, big.px, g, pool);
    const double sl = classical_linear_entropy(hb, 1.0);
    const double sv = classical_von_neumann_entropy(hb, 1.0);
    CHECK(sl == doctest::Approx(0.0).scale(1.0).epsilon(0.02));
    CHECK(sv == doctest::Approx(sv_exact).scale(1.0).epsilon(0.02));
    CHECK_FALSE(sub_planck_concentration(sv));
}

TEST_CASE("far-separated two-branch mixture adds ln 2") {
    WorkerPool pool(1);
    const Grid1D g = anchor_grid();
    CatSpec cat;
    cat.x1 = -8.0;
    cat.x2 = 8.0;
    cat.px1 = cat.px2 = 0.0;
    cat.sigma2 = 0.5;
    const auto d = classical_analog(cat, 1.0);
    TrajectoryEnsemble e = sample_ensemble(d, 100000, 9, pool);
    const PhaseSpaceHistogram h = bin_snapshot(e.x, e.px, g, pool);
    CHECK(classical_linear_entropy(h, 1.0) ==
          doctest::Approx(0.5).scale(1.0).epsilon(0.02));
    CHECK(classical_von_neumann_entropy(h, 1.0) ==
          doctest::Approx(1.0).scale(1.0).epsilon(0.03));
}

TEST_CASE("coarser pixels keep the Gaussian anchor within tolerance") {
    // pixel_scale=2 doubles both pixel edges; the anchor values should move
    // only by the (characterized) coarse-graining bias, not jump.
    WorkerPool pool(1);
    const Grid1D g = anchor_grid();
    const auto d = classical_analog(GaussianSpec{0.0, 0.0, 0.0, 0.0, 0.5}, 1.0);
    TrajectoryEnsemble e = sample_ensemble(d, 100000, 5, pool);
    const PhaseSpaceHistogram h = bin_snapshot(e.x, e.px, g, pool, 2.0);
    CHECK(classical_von_neumann_entropy(h, 1.0) ==
          doctest::Approx(1.0 - std::log(2.0)).scale(1.0).epsilon(0.03));
}
