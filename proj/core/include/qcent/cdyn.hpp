#pragma once

#include <functional>

#include "qcent/model.hpp"
#include "qcent/parallel.hpp"
#include "qcent/states.hpp"

namespace qcent {

// One velocity-Verlet step; symplectic, time-reversible, and exactly
// equivariant under the quartic scaling (x, p, t) -> (l x, l^2 p, t / l).
PhasePoint verlet_step(const ModelParams& p, const PhasePoint& s, double dt);

struct ClassicalReport {
    std::size_t steps = 0;
    // max over sample points and trajectories of |H(t)-H(0)| / max(|H(0)|, 1e-6)
    double energy_rel_drift = 0.0;
};

using EnsembleObserver =
    std::function<void(std::size_t sample, double t, const TrajectoryEnsemble&)>;

// Advances the whole ensemble, invoking the observer at t = 0 and after
// every sample_every steps (and at the final step if off cadence).  Energy
// conservation is checked per trajectory at each sample point; a violation
// of energy_limit or a non-finite coordinate aborts with the trajectory
// index.  Trajectories are data-parallel and worker-count invariant.
ClassicalReport propagate_ensemble(const ModelParams& p, TrajectoryEnsemble& e,
                                   std::size_t n_steps, std::size_t sample_every,
                                   double dt, WorkerPool& pool,
                                   const EnsembleObserver& observer = {},
                                   double energy_limit = 1e-5);

}  // namespace qcent
