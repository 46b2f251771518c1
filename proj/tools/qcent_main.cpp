// Command-line front end: scenario runs, preset listing, config validation,
// and a numerical self-check.  Exit codes: 0 ok, 1 validation, 2 numerical
// integrity, 3 I/O.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qcent/cdyn.hpp"
#include "qcent/centropy.hpp"
#include "qcent/emit.hpp"
#include "qcent/errors.hpp"
#include "qcent/parallel.hpp"
#include "qcent/presets.hpp"
#include "qcent/qdyn.hpp"
#include "qcent/rdm.hpp"
#include "qcent/runner.hpp"
#include "qcent/states.hpp"

namespace {

using namespace qcent;

int workers_from_env() {
    const char* env = std::getenv("QCENT_WORKERS");
    if (env == nullptr) return 1;
    try {
        const int w = std::stoi(env);
        if (w >= 1) return w;
    } catch (const std::exception&) {
    }
    throw ValidationError("cli.workers",
                          std::string("QCENT_WORKERS must be a positive "
                                      "integer, got '") +
                              env + "'");
}

int run_command(const std::string& preset_name, const std::string& config_path,
                bool seed_set, std::uint64_t seed, std::uint64_t ntraj,
                const std::string& out_dir, int workers, bool no_plot) {
    if (preset_name.empty() == config_path.empty())
        throw ValidationError("cli.source",
                              "pass exactly one of --preset or --config");
    ScenarioConfig cfg = preset_name.empty() ? load_config_file(config_path)
                                             : preset(preset_name);
    if (seed_set) cfg.seed = seed;
    if (ntraj != 0) cfg.n_traj = ntraj;
    if (no_plot) cfg.plot = false;
    if (cfg.csv_path.empty() || !out_dir.empty()) {
        const std::string dir = out_dir.empty() ? "." : out_dir;
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec)
            throw IoError("cli.outdir",
                          "cannot create " + dir + ": " + ec.message());
        cfg.csv_path = dir + "/" + cfg.name + ".csv";
    }

    WorkerPool pool(workers);
    const EntropySeries series = run_scenario(cfg, pool);

    std::size_t sub_planck_rows = 0;
    double max_oor = 0.0;
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (sub_planck_concentration(series.sl_classical[i])) ++sub_planck_rows;
        max_oor = std::max(max_oor, series.oor_fraction[i]);
    }
    if (sub_planck_rows > 0)
        std::cerr << "warning: classical density below one hbar cell in "
                  << sub_planck_rows
                  << " rows (raw negative S_L_cl reported)\n";
    if (max_oor > 0.0)
        std::cerr << "warning: up to " << format_double(max_oor)
                  << " of trajectories left the grid window\n";

    std::cout << cfg.name << ": " << series.size() << " samples to t="
              << format_double(series.times.back()) << "\n"
              << "  final S_L_q=" << format_double(series.sl_quantum.back())
              << " S_V_q=" << format_double(series.sv_quantum.back())
              << " S_L_cl=" << format_double(series.sl_classical.back())
              << " S_V_cl=" << format_double(series.sv_classical.back()) << "\n"
              << "wrote " << cfg.csv_path << "\n";
    if (cfg.plot) {
        std::string plot_path = cfg.csv_path;
        plot_path.replace(plot_path.rfind('.'), std::string::npos, ".svg");
        std::cout << "wrote " << plot_path << "\n";
    }
    return 0;
}

int validate_command(const std::string& config_path) {
    const ScenarioConfig cfg = resolved(load_config_file(config_path));
    validate(cfg);
    std::cout << "ok\n" << serialize_config(cfg);
    return 0;
}

int list_command() {
    for (const auto& name : preset_names())
        std::cout << preset_summary(name) << "\n";
    return 0;
}

// The anchor and convergence suites: every check prints one line; any
// failure turns the exit code into 2 (numerical integrity).
int selfcheck_command(int workers) {
    WorkerPool pool(workers);
    bool all_ok = true;
    const auto report = [&all_ok](const std::string& name, double value,
                                  double limit) {
        const bool ok = value <= limit;
        all_ok = all_ok && ok;
        std::cout << (ok ? "ok   " : "FAIL ") << name << " = "
                  << format_double(value) << " (limit " << format_double(limit)
                  << ")\n";
    };

    ModelParams params;
    const Grid1D g = make_grid(256, -16.0, 16.0, params.hbar);

    // t=0 anchors: pure product packet and far-separated superpositions.
    {
        const ComplexField2D f =
            build_gaussian({0.0, 0.0, std::sqrt(15.0), 0.0, 0.5}, g, g);
        const auto rdm = ReducedDensityMatrix::reduce_x(f);
        report("gaussian S_L(0)", std::abs(rdm.linear_entropy()), 1e-6);
        report("gaussian S_V(0)", std::abs(rdm.von_neumann_entropy()), 1e-4);

        const auto d = classical_analog(
            GaussianSpec{0.0, 0.0, std::sqrt(15.0), 0.0, 0.5}, params.hbar);
        const TrajectoryEnsemble e = sample_ensemble(d, 100000, 1, pool);
        const PhaseSpaceHistogram h = bin_snapshot(e.x, e.px, g, pool);
        report("gaussian S_L_cl(0) error",
               std::abs(classical_linear_entropy(h, params.hbar)), 0.02);
        report("gaussian S_V_cl(0) error",
               std::abs(classical_von_neumann_entropy(h, params.hbar) -
                        (1.0 - std::log(2.0))),
               0.02);
    }
    {
        CatSpec cat;
        cat.x1 = -2.5;
        cat.px1 = 5.46;
        cat.x2 = 2.5;
        cat.px2 = -5.46;
        const TrajectoryEnsemble e = sample_ensemble(
            classical_analog(cat, params.hbar), 100000, 1, pool);
        const PhaseSpaceHistogram h = bin_snapshot(e.x, e.px, g, pool);
        report("cat S_L_cl(0) error",
               std::abs(classical_linear_entropy(h, params.hbar) - 0.5), 0.02);
        report("cat S_V_cl(0) error",
               std::abs(classical_von_neumann_entropy(h, params.hbar) - 1.0),
               0.03);
    }
    {
        const BellSpec bell = make_paired_bell(2.5, -5.46, 0.0, 0.0, 0.5);
        const ComplexField2D f = build_bell(bell, g, g);
        const auto rdm = ReducedDensityMatrix::reduce_x(f);
        report("bell S_L(0) error", std::abs(rdm.linear_entropy() - 0.5), 1e-4);
        report("bell S_V(0) error",
               std::abs(rdm.von_neumann_entropy() - std::log(2.0)), 1e-4);
    }

    // Convergence: halving the quantum step moves the entropy curves by
    // less than 1e-3 on a short diagonal scenario.
    {
        ScenarioConfig c;
        c.name = "selfcheck";
        c.e0 = 15.0;
        c.t_final = 10.0;
        c.n_traj = 20000;
        const EntropySeries coarse = run_scenario(c, pool);
        c.dt_quantum = 0.001;
        const EntropySeries fine = run_scenario(c, pool);
        double dmax = 0.0;
        for (std::size_t i = 0; i < coarse.size(); ++i) {
            dmax = std::max(dmax, std::abs(coarse.sl_quantum[i] -
                                           fine.sl_quantum[i]));
            dmax = std::max(dmax, std::abs(coarse.sv_quantum[i] -
                                           fine.sv_quantum[i]));
        }
        report("dt-halving entropy shift", dmax, 1e-3);
    }

    // Reversal: forward then backward propagation returns to the start.
    {
        ScenarioConfig c;
        c.e0 = 15.0;
        const ScenarioConfig rc = resolved(c);
        const Grid1D rg = make_grid(rc.grid_n, -rc.grid_extent, rc.grid_extent,
                                    params.hbar);
        ComplexField2D f = build_initial_field(rc, rg, rg);
        const ComplexField2D start = f;
        const ModelParams p = scenario_params(rc);
        const PropagatorPlan fwd(p, rg, rg, rc.dt_quantum);
        const PropagatorPlan bwd(p, rg, rg, -rc.dt_quantum);
        propagate(fwd, f, 2500, 2500, pool);
        propagate(bwd, f, 2500, 2500, pool);
        double dmax = 0.0;
        for (std::size_t i = 0; i < f.size(); ++i)
            dmax = std::max(dmax, std::abs(f.data()[i] - start.data()[i]));
        report("time-reversal recovery", dmax, 1e-8);
    }

    std::cout << (all_ok ? "selfcheck passed\n" : "selfcheck FAILED\n");
    return all_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Quantum and classical entropy production for two nonlinearly "
        "coupled quartic oscillators"};
    app.set_version_flag("--version", "qcent 0.1.0");
    app.require_subcommand(1);

    std::string preset_name, config_path, out_dir;
    std::uint64_t seed = 0, ntraj = 0;
    int workers = 0;
    bool no_plot = false;

    CLI::App* run = app.add_subcommand("run", "run one scenario");
    run->add_option("--preset", preset_name, "preset name (see list-presets)");
    run->add_option("--config", config_path, "key=value config file");
    CLI::Option* seed_opt =
        run->add_option("--seed", seed, "override the sampling seed");
    run->add_option("--ntraj", ntraj, "override the trajectory count");
    run->add_option("--out", out_dir, "output directory (default .)");
    run->add_option("--workers", workers,
                    "worker threads (default $QCENT_WORKERS or 1)");
    run->add_flag("--no-plot", no_plot, "skip the SVG plot");

    CLI::App* list = app.add_subcommand("list-presets", "list scenario presets");

    std::string validate_path;
    CLI::App* val = app.add_subcommand("validate", "validate a config file");
    val->add_option("--config", validate_path, "key=value config file")
        ->required();

    CLI::App* self =
        app.add_subcommand("selfcheck", "run the anchor and convergence suites");
    self->add_option("--workers", workers,
                     "worker threads (default $QCENT_WORKERS or 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (workers == 0) workers = workers_from_env();
        if (workers < 1)
            throw ValidationError("cli.workers", "workers must be >= 1");
        if (run->parsed())
            return run_command(preset_name, config_path, seed_opt->count() > 0,
                               seed, ntraj, out_dir, workers, no_plot);
        if (list->parsed()) return list_command();
        if (val->parsed()) return validate_command(validate_path);
        if (self->parsed()) return selfcheck_command(workers);
    } catch (const qcent::Error& e) {
        std::cerr << "error [" << e.code() << "] " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error [unexpected] " << e.what() << "\n";
        return 2;
    }
    return 0;
}
