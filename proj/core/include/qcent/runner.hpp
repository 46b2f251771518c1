#pragma once
// Scenario orchestration: one config describes a paired quantum/classical run
// on a shared sample clock; the result is a row-aligned entropy series.

#include <cstdint>
#include <string>
#include <vector>

#include "qcent/grid.hpp"
#include "qcent/model.hpp"
#include "qcent/states.hpp"

namespace qcent {

class WorkerPool;

enum class StateKind {
    gaussian_diagonal,
    gaussian_channel_x,
    gaussian_channel_y,
    cat_channel,
    bell,
};

std::string to_string(StateKind k);
// Throws ValidationError("config.state_kind") for unknown names.
StateKind state_kind_from_string(const std::string& s);

// Zeroed or negative fields marked "auto" are filled by resolved() from the
// scenario energy and coupling before validation.
struct ScenarioConfig {
    std::string name = "scenario";
    double alpha = 0.03;
    double e0 = 15.0;
    StateKind state_kind = StateKind::gaussian_diagonal;
    // Packet displacement along the occupied axis; enters the launch momentum
    // through E' = E0 - beta x0^4 / 4.
    double offset_x = 0.0;
    double offset_y = 0.0;
    int momentum_sign = 1;
    double sigma2 = 0.5;
    std::size_t n_traj = 100000;
    std::uint64_t seed = 1;
    int grid_n = 0;             // auto: 256 up to E0 = 15, 512 above
    double grid_extent = 0.0;   // auto: 1.6 x the channel turning point
    double dt_quantum = 0.0;    // auto: 0.002 up to E0 = 15, 0.001 above
    double dt_classical = 0.0;  // auto: 2e-3 weak coupling, 5e-4 strong
    double t_final = -1.0;      // auto: 100 up to E0 = 15, 60 above
    double sample_interval = 0.25;
    double pixel_scale = 1.0;   // box-counting pixel override
    std::string csv_path;       // when set, run_scenario writes the CSV
    bool plot = true;           // with csv_path: also write the SVG next to it
};

// Fills the auto fields; idempotent.
ScenarioConfig resolved(ScenarioConfig c);

// Model parameters implied by a config (m = 1, hbar = 1, beta = 0.01).
ModelParams scenario_params(const ScenarioConfig& c);

// Validates a resolved config.  Machine-readable failure codes:
//   config.name, config.alpha, config.e0, config.sigma2, config.state_kind,
//   config.momentum_sign, config.n_traj, config.grid_n, config.grid_extent,
//   config.dt, config.t_final, config.sample_interval, config.sample_clock,
//   config.eprime, config.pixel_scale
void validate(const ScenarioConfig& c);

// Initial-state helpers shared by both branches of a run.
ComplexField2D build_initial_field(const ScenarioConfig& c, const Grid1D& gx,
                                   const Grid1D& gy);
ClassicalDensitySpec initial_analog(const ScenarioConfig& c);

// Row-aligned curves; row i sits at t = i * sample_interval for both
// branches.  The two energy-drift columns stay separate in memory; the CSV
// emits their pointwise maximum as the single energy_drift column.
struct EntropySeries {
    std::vector<double> times;
    std::vector<double> sl_quantum, sv_quantum;
    std::vector<double> sl_classical, sv_classical;
    std::vector<double> norm_drift;              // quantum |norm - 1|
    std::vector<double> energy_drift_quantum;    // |<H>(t)/<H>(0) - 1|
    std::vector<double> energy_drift_classical;  // max per-trajectory drift
    std::vector<double> oor_fraction;            // classical off-grid share
    // Max over samples of |sum lambda^2 - Frobenius purity| of the reduced
    // density matrix; the two purity routes must stay glued together.
    double purity_disagreement = 0.0;

    std::size_t size() const { return times.size(); }
};

// Runs both branches at the configured resolution and assembles the series.
// Writes CSV/plot files only when cfg.csv_path is set.  Integrity failures
// in either branch propagate as IntegrityError.
EntropySeries run_scenario(const ScenarioConfig& cfg, WorkerPool& pool);

// Flat key=value config format; '#' starts a comment.  A 'preset' key seeds
// the config before the remaining keys override individual fields.
ScenarioConfig parse_config_text(const std::string& text);
ScenarioConfig load_config_file(const std::string& path);

// Canonical key=value dump of a resolved config (stable field order); used
// for reproducibility records and cache keys.
std::string serialize_config(const ScenarioConfig& c);

}  // namespace qcent
