#include "qcent/cdyn.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "qcent/errors.hpp"

namespace qcent {

// Mirrors the arithmetic of the ensemble loop exactly (same expressions,
// same order), so single-trajectory and ensemble paths agree bit for bit.
PhasePoint verlet_step(const ModelParams& p, const PhasePoint& s, double dt) {
    const double half = 0.5 * dt;
    const double inv_m = 1.0 / p.mass;
    const auto f0 = force(p, s.x, s.y);
    PhasePoint out;
    const double hx = s.px + half * f0.fx;
    const double hy = s.py + half * f0.fy;
    out.x = s.x + dt * hx * inv_m;
    out.y = s.y + dt * hy * inv_m;
    const auto f1 = force(p, out.x, out.y);
    out.px = hx + half * f1.fx;
    out.py = hy + half * f1.fy;
    return out;
}

ClassicalReport propagate_ensemble(const ModelParams& p, TrajectoryEnsemble& e,
                                   std::size_t n_steps, std::size_t sample_every,
                                   double dt, WorkerPool& pool,
                                   const EnsembleObserver& observer,
                                   double energy_limit) {
    if (sample_every == 0)
        throw ValidationError("cdyn.sample_every", "sample_every must be >= 1");
    if (dt == 0.0) throw ValidationError("cdyn.dt", "dt must be nonzero");

    const std::size_t n = e.size();
    const double half = 0.5 * dt;
    const double inv_m = 1.0 / p.mass;

    // Cached forces make each step one force pass instead of two.
    std::vector<double> fx(n), fy(n), h0(n);
    pool.run_blocks(n, [&](int, std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const auto f = force(p, e.x[i], e.y[i]);
            fx[i] = f.fx;
            fy[i] = f.fy;
            h0[i] = hamiltonian(p, {e.x[i], e.y[i], e.px[i], e.py[i]});
        }
    });

    ClassicalReport report;
    const auto check_sample = [&](std::size_t step) {
        std::vector<double> block_max(pool.workers(), 0.0);
        std::vector<std::size_t> block_bad(pool.workers(), n);
        pool.run_blocks(n, [&](int b, std::size_t lo, std::size_t hi) {
            double worst = 0.0;
            std::size_t bad = n;
            for (std::size_t i = lo; i < hi; ++i) {
                const double h = hamiltonian(p, {e.x[i], e.y[i], e.px[i], e.py[i]});
                const double rel =
                    std::abs(h - h0[i]) / std::max(std::abs(h0[i]), 1e-6);
                if (!std::isfinite(rel)) {
                    bad = i;
                    worst = rel;
                    break;
                }
                if (rel > worst) worst = rel;
            }
            block_max[b] = worst;
            block_bad[b] = bad;
        });
        for (int b = 0; b < pool.workers(); ++b) {
            if (block_bad[b] != n)
                throw IntegrityError("cdyn.nan", "trajectory " +
                                                     std::to_string(block_bad[b]) +
                                                     " diverged at step " +
                                                     std::to_string(step));
            report.energy_rel_drift = std::max(report.energy_rel_drift, block_max[b]);
        }
        if (report.energy_rel_drift > energy_limit)
            throw IntegrityError(
                "cdyn.energy", "classical energy drift " +
                                   std::to_string(report.energy_rel_drift) +
                                   " at step " + std::to_string(step));
    };

    check_sample(0);
    if (observer) observer(0, 0.0, e);

    std::size_t sample = 0;
    for (std::size_t s = 1; s <= n_steps; ++s) {
        pool.run_blocks(n, [&](int, std::size_t lo, std::size_t hi) {
            for (std::size_t i = lo; i < hi; ++i) {
                const double hx = e.px[i] + half * fx[i];
                const double hy = e.py[i] + half * fy[i];
                const double x = e.x[i] + dt * hx * inv_m;
                const double y = e.y[i] + dt * hy * inv_m;
                const auto f = force(p, x, y);
                e.x[i] = x;
                e.y[i] = y;
                e.px[i] = hx + half * f.fx;
                e.py[i] = hy + half * f.fy;
                fx[i] = f.fx;
                fy[i] = f.fy;
            }
        });
        if (s % sample_every == 0 || s == n_steps) {
            check_sample(s);
            if (observer) observer(++sample, s * dt, e);
        }
    }
    report.steps = n_steps;
    return report;
}

}  // namespace qcent
