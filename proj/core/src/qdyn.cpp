#include "qcent/qdyn.hpp"

#include <cmath>
#include <string>

#include "qcent/errors.hpp"

namespace qcent {

PropagatorPlan::PropagatorPlan(const ModelParams& params, const Grid1D& gx,
                               const Grid1D& gy, double dt)
    : params_(params), dt_(dt), st_(gx.n, gy.n) {
    if (dt == 0.0) throw ValidationError("qdyn.dt", "dt must be nonzero");
    if (gx.hbar != params.hbar || gy.hbar != params.hbar)
        throw ValidationError("qdyn.hbar", "grid and model hbar differ");

    const std::size_t n = static_cast<std::size_t>(gx.n) * gy.n;
    vhalf_.resize(n);
    kin_.resize(n);
    kinetic_.resize(n);
    potential_.resize(n);
    const double hbar = params.hbar;
    for (int i = 0; i < gx.n; ++i) {
        for (int j = 0; j < gy.n; ++j) {
            const std::size_t k = static_cast<std::size_t>(i) * gy.n + j;
            const double v = potential(params, gx.x[i], gy.x[j]);
            const double t =
                (gx.p[i] * gx.p[i] + gy.p[j] * gy.p[j]) / (2.0 * params.mass);
            potential_[k] = v;
            kinetic_[k] = t;
            const double pv = -0.5 * v * dt / hbar;
            const double pt = -t * dt / hbar;
            vhalf_[k] = {std::cos(pv), std::sin(pv)};
            kin_[k] = {std::cos(pt), std::sin(pt)};
        }
    }
}

void PropagatorPlan::step(ComplexField2D& f, WorkerPool& pool) const {
    auto* d = f.data();
    const std::size_t n = f.size();
    if (n != vhalf_.size())
        throw ValidationError("qdyn.mismatch", "field does not match plan size");

    const auto* vh = vhalf_.data();
    pool.run_blocks(n, [&](int, std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) d[i] *= vh[i];
    });
    st_.forward_raw(f, pool);
    const auto* kn = kin_.data();
    const double inv = 1.0 / static_cast<double>(n);
    pool.run_blocks(n, [&](int, std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) d[i] *= kn[i] * inv;
    });
    st_.inverse_raw(f, pool);
    pool.run_blocks(n, [&](int, std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) d[i] *= vh[i];
    });
}

EnergyBreakdown PropagatorPlan::expectation_energy(const ComplexField2D& f,
                                                   WorkerPool& pool) const {
    if (f.size() != potential_.size())
        throw ValidationError("qdyn.mismatch", "field does not match plan size");
    EnergyBreakdown e;
    const auto* d = f.data();
    double v = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) v += potential_[i] * std::norm(d[i]);
    e.potential = v * f.cell_area();

    ComplexField2D hat = f;
    st_.forward(hat, pool);
    const auto* h = hat.data();
    double t = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) t += kinetic_[i] * std::norm(h[i]);
    e.kinetic = t * f.cell_area();
    return e;
}

PropagationReport propagate(const PropagatorPlan& plan, ComplexField2D& f,
                            std::size_t n_steps, std::size_t sample_every,
                            WorkerPool& pool, const FieldObserver& observer,
                            const IntegrityLimits& limits) {
    if (sample_every == 0)
        throw ValidationError("qdyn.sample_every", "sample_every must be >= 1");

    PropagationReport report;
    double e0 = 0.0;

    const auto check_sample = [&](std::size_t step) {
        const double nrm = f.norm();
        if (std::isnan(nrm))
            throw IntegrityError("qdyn.nan",
                                 "NaN norm at step " + std::to_string(step));
        report.norm_drift = std::max(report.norm_drift, std::abs(nrm - 1.0));
        if (report.norm_drift > limits.norm_drift)
            throw IntegrityError("qdyn.norm",
                                 "norm drift " + std::to_string(report.norm_drift) +
                                     " at step " + std::to_string(step));
        const double e = plan.expectation_energy(f, pool).total();
        if (step == 0) {
            e0 = e;
        } else if (e0 != 0.0) {
            const double rel = std::abs(e / e0 - 1.0);
            report.energy_rel_drift = std::max(report.energy_rel_drift, rel);
            if (report.energy_rel_drift > limits.energy_rel_drift)
                throw IntegrityError(
                    "qdyn.energy", "energy drift " + std::to_string(rel) + " at step " +
                                       std::to_string(step));
        }
    };

    check_sample(0);
    if (observer) observer(0, 0.0, f);

    std::size_t sample = 0;
    for (std::size_t s = 1; s <= n_steps; ++s) {
        plan.step(f, pool);
        if (limits.nan_check_stride != 0 && s % limits.nan_check_stride == 0) {
            const auto probe = f.data()[f.size() / 2];
            if (std::isnan(probe.real()) || std::isnan(probe.imag()))
                throw IntegrityError("qdyn.nan",
                                     "NaN amplitude at step " + std::to_string(s));
        }
        if (s % sample_every == 0 || s == n_steps) {
            check_sample(s);
            if (observer) observer(++sample, s * plan.dt(), f);
        }
    }
    report.steps = n_steps;
    return report;
}

}  // namespace qcent
