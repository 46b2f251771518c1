#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "qcent/grid.hpp"
#include "qcent/model.hpp"
#include "qcent/parallel.hpp"

namespace qcent {

struct EnergyBreakdown {
    double kinetic = 0.0;
    double potential = 0.0;
    double total() const { return kinetic + potential; }
};

// Strang splitting exp(-iV dt/2) F^-1 exp(-iT dt) F exp(-iV dt/2).
// Phase tables are precomputed with unit modulus; the unnormalized-FFT scale
// is folded into the kinetic pass.  Norm is conserved to roundoff per step
// and the map is exactly reversible under dt -> -dt.
//
// Parameter validation is the caller's concern: the plan accepts any
// potential, including the free case beta = alpha = 0 used for dispersion
// checks.
class PropagatorPlan {
  public:
    PropagatorPlan(const ModelParams& params, const Grid1D& gx, const Grid1D& gy,
                   double dt);

    double dt() const { return dt_; }
    const ModelParams& params() const { return params_; }
    const std::vector<std::complex<double>>& half_potential_phase() const {
        return vhalf_;
    }
    const std::vector<std::complex<double>>& kinetic_phase() const { return kin_; }

    void step(ComplexField2D& f, WorkerPool& pool) const;

    // <T> in momentum space, <V> in position space.
    EnergyBreakdown expectation_energy(const ComplexField2D& f, WorkerPool& pool) const;

  private:
    ModelParams params_;
    double dt_;
    SpectralTransform st_;
    std::vector<std::complex<double>> vhalf_, kin_;
    std::vector<double> kinetic_;  // T(p) table for energy evaluation
    std::vector<double> potential_;
};

// Abort thresholds checked at every sample point during propagation.
struct IntegrityLimits {
    double norm_drift = 1e-8;
    double energy_rel_drift = 1e-3;
    std::size_t nan_check_stride = 100;
};

struct PropagationReport {
    std::size_t steps = 0;
    double norm_drift = 0.0;       // max |norm - 1| seen at samples
    double energy_rel_drift = 0.0; // max |<H>(t)/<H>(0) - 1| seen at samples
};

using FieldObserver =
    std::function<void(std::size_t sample, double t, const ComplexField2D&)>;

// Advances n_steps, invoking the observer at t = 0 and after every
// sample_every steps (and at the final step if it is not on the cadence).
// Throws IntegrityError on NaN, norm loss, or energy drift past the limits.
PropagationReport propagate(const PropagatorPlan& plan, ComplexField2D& f,
                            std::size_t n_steps, std::size_t sample_every,
                            WorkerPool& pool, const FieldObserver& observer = {},
                            const IntegrityLimits& limits = {});

}  // namespace qcent
