#include "qcent/runner.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qcent/cdyn.hpp"
#include "qcent/centropy.hpp"
#include "qcent/emit.hpp"
#include "qcent/errors.hpp"
#include "qcent/parallel.hpp"
#include "qcent/presets.hpp"
#include "qcent/qdyn.hpp"
#include "qcent/rdm.hpp"

namespace qcent {

namespace {

bool divides_cleanly(double whole, double part) {
    const double k = std::round(whole / part);
    return std::abs(whole - k * part) <= 1e-9 * std::max(1.0, std::abs(whole));
}

std::size_t steps_of(double span, double dt) {
    return static_cast<std::size_t>(std::llround(span / dt));
}

double eprime(const ScenarioConfig& c, double offset) {
    const ModelParams p = scenario_params(c);
    return c.e0 - p.beta * std::pow(offset, 4) / 4.0;
}

double launch_momentum(const ScenarioConfig& c, double offset) {
    const ModelParams p = scenario_params(c);
    return std::sqrt(2.0 * p.mass * eprime(c, offset));
}

GaussianSpec diagonal_spec(const ScenarioConfig& c) {
    const ModelParams p = scenario_params(c);
    const double pd = c.momentum_sign * std::sqrt(p.mass * c.e0);
    return GaussianSpec{0.0, 0.0, pd, pd, c.sigma2};
}

GaussianSpec channel_x_spec(const ScenarioConfig& c) {
    const double px = c.momentum_sign * launch_momentum(c, c.offset_x);
    return GaussianSpec{c.offset_x, 0.0, px, 0.0, c.sigma2};
}

GaussianSpec channel_y_spec(const ScenarioConfig& c) {
    const double py = c.momentum_sign * launch_momentum(c, c.offset_y);
    return GaussianSpec{0.0, c.offset_y, 0.0, py, c.sigma2};
}

CatSpec cat_spec(const ScenarioConfig& c) {
    const double p = launch_momentum(c, c.offset_x);
    CatSpec s;
    s.x1 = -c.offset_x;
    s.px1 = c.momentum_sign * p;
    s.x2 = c.offset_x;
    s.px2 = -c.momentum_sign * p;
    s.y0 = 0.0;
    s.py0 = 0.0;
    s.sigma2 = c.sigma2;
    return s;
}

BellSpec bell_spec(const ScenarioConfig& c) {
    BellSpec s;
    s.x1 = c.offset_x;
    s.px1 = -c.momentum_sign * launch_momentum(c, c.offset_x);
    s.x2 = 0.0;
    s.px2 = 0.0;
    s.y1 = 0.0;
    s.py1 = 0.0;
    s.y2 = c.offset_y;
    s.py2 = -c.momentum_sign * launch_momentum(c, c.offset_y);
    s.sigma2 = c.sigma2;
    return s;
}

}  // namespace

std::string to_string(StateKind k) {
    switch (k) {
        case StateKind::gaussian_diagonal: return "gaussian_diagonal";
        case StateKind::gaussian_channel_x: return "gaussian_channel_x";
        case StateKind::gaussian_channel_y: return "gaussian_channel_y";
        case StateKind::cat_channel: return "cat_channel";
        case StateKind::bell: return "bell";
    }
    throw ValidationError("config.state_kind", "corrupt state kind");
}

StateKind state_kind_from_string(const std::string& s) {
    if (s == "gaussian_diagonal") return StateKind::gaussian_diagonal;
    if (s == "gaussian_channel_x") return StateKind::gaussian_channel_x;
    if (s == "gaussian_channel_y") return StateKind::gaussian_channel_y;
    if (s == "cat_channel") return StateKind::cat_channel;
    if (s == "bell") return StateKind::bell;
    throw ValidationError(
        "config.state_kind",
        "unknown state kind '" + s +
            "' (gaussian_diagonal, gaussian_channel_x, gaussian_channel_y, "
            "cat_channel, bell)");
}

ScenarioConfig resolved(ScenarioConfig c) {
    if (c.grid_n == 0) c.grid_n = c.e0 > 15.0 ? 512 : 256;
    if (c.grid_extent == 0.0) {
        c.grid_extent = 1.6 * turning_point_channel(scenario_params(c), c.e0);
    }
    if (c.dt_quantum == 0.0) c.dt_quantum = c.e0 > 15.0 ? 0.001 : 0.002;
    if (c.dt_classical == 0.0) c.dt_classical = c.alpha > 0.1 ? 5e-4 : 2e-3;
    if (c.t_final < 0.0) c.t_final = c.e0 > 15.0 ? 60.0 : 100.0;
    return c;
}

ModelParams scenario_params(const ScenarioConfig& c) {
    ModelParams p;
    p.alpha = c.alpha;
    p.sigma2 = c.sigma2;
    return p;
}

void validate(const ScenarioConfig& c) {
    if (c.name.empty())
        throw ValidationError("config.name", "scenario name must be non-empty");
    if (!(c.alpha > 0.0))
        throw ValidationError("config.alpha", "alpha must be positive");
    if (!(c.e0 > 0.0))
        throw ValidationError("config.e0", "E0 must be positive");
    if (!(c.sigma2 > 0.0))
        throw ValidationError("config.sigma2", "sigma^2 must be positive");
    if (c.momentum_sign != 1 && c.momentum_sign != -1)
        throw ValidationError("config.momentum_sign", "momentum_sign must be +-1");
    if (c.n_traj < 1)
        throw ValidationError("config.n_traj", "need at least one trajectory");
    if (c.grid_n < 8 || (c.grid_n & (c.grid_n - 1)) != 0)
        throw ValidationError("config.grid_n",
                              "grid_n must be a power of two >= 8");
    if (!(c.dt_quantum > 0.0) || !(c.dt_classical > 0.0))
        throw ValidationError("config.dt", "time steps must be positive");
    if (c.t_final < 0.0)
        throw ValidationError("config.t_final", "t_final must be >= 0");
    if (!(c.sample_interval > 0.0))
        throw ValidationError("config.sample_interval",
                              "sample_interval must be positive");
    if (!(c.pixel_scale > 0.0))
        throw ValidationError("config.pixel_scale",
                              "pixel_scale must be positive");
    if (!divides_cleanly(c.t_final, c.sample_interval) ||
        !divides_cleanly(c.sample_interval, c.dt_quantum) ||
        !divides_cleanly(c.sample_interval, c.dt_classical))
        throw ValidationError(
            "config.sample_clock",
            "dt_quantum and dt_classical must divide sample_interval, and "
            "sample_interval must divide t_final");

    const ModelParams p = scenario_params(c);
    p.validate();
    // The wall turning point bounds the accessible |x| at E0; the grid must
    // clear it with margin.
    const double reach = turning_point_channel(p, c.e0);
    if (c.grid_extent < 1.5 * reach)
        throw ValidationError(
            "config.grid_extent",
            "grid extent " + std::to_string(c.grid_extent) +
                " is below 1.5x the turning point " + std::to_string(reach));

    const auto check_eprime = [&](double offset) {
        if (eprime(c, offset) < 0.0)
            throw ValidationError(
                "config.eprime",
                "offset " + std::to_string(offset) +
                    " costs more potential energy than E0 provides");
    };
    switch (c.state_kind) {
        case StateKind::gaussian_diagonal: break;
        case StateKind::gaussian_channel_x: check_eprime(c.offset_x); break;
        case StateKind::gaussian_channel_y: check_eprime(c.offset_y); break;
        case StateKind::cat_channel: check_eprime(c.offset_x); break;
        case StateKind::bell:
            check_eprime(c.offset_x);
            check_eprime(c.offset_y);
            break;
    }
}

ComplexField2D build_initial_field(const ScenarioConfig& c, const Grid1D& gx,
                                   const Grid1D& gy) {
    switch (c.state_kind) {
        case StateKind::gaussian_diagonal:
            return build_gaussian(diagonal_spec(c), gx, gy);
        case StateKind::gaussian_channel_x:
            return build_gaussian(channel_x_spec(c), gx, gy);
        case StateKind::gaussian_channel_y:
            return build_gaussian(channel_y_spec(c), gx, gy);
        case StateKind::cat_channel:
            return build_cat(cat_spec(c), gx, gy);
        case StateKind::bell:
            return build_bell(bell_spec(c), gx, gy);
    }
    throw ValidationError("config.state_kind", "corrupt state kind");
}

ClassicalDensitySpec initial_analog(const ScenarioConfig& c) {
    const double hbar = scenario_params(c).hbar;
    switch (c.state_kind) {
        case StateKind::gaussian_diagonal:
            return classical_analog(diagonal_spec(c), hbar);
        case StateKind::gaussian_channel_x:
            return classical_analog(channel_x_spec(c), hbar);
        case StateKind::gaussian_channel_y:
            return classical_analog(channel_y_spec(c), hbar);
        case StateKind::cat_channel:
            return classical_analog(cat_spec(c), hbar);
        case StateKind::bell:
            return classical_analog(bell_spec(c), hbar);
    }
    throw ValidationError("config.state_kind", "corrupt state kind");
}

EntropySeries run_scenario(const ScenarioConfig& cfg_in, WorkerPool& pool) {
    const ScenarioConfig cfg = resolved(cfg_in);
    validate(cfg);
    const ModelParams params = scenario_params(cfg);
    const Grid1D gx =
        make_grid(cfg.grid_n, -cfg.grid_extent, cfg.grid_extent, params.hbar);
    const Grid1D gy = gx;

    const std::size_t expected_rows =
        cfg.t_final > 0.0 ? steps_of(cfg.t_final, cfg.sample_interval) + 1 : 1;

    EntropySeries series;
    series.times.reserve(expected_rows);
    for (std::size_t i = 0; i < expected_rows; ++i)
        series.times.push_back(static_cast<double>(i) * cfg.sample_interval);

    // Quantum branch.
    {
        ComplexField2D field = build_initial_field(cfg, gx, gy);
        const PropagatorPlan plan(params, gx, gy, cfg.dt_quantum);
        double energy0 = 0.0;
        const FieldObserver observer = [&](std::size_t sample, double,
                                           const ComplexField2D& f) {
            const ReducedDensityMatrix rdm = ReducedDensityMatrix::reduce_x(f);
            series.sl_quantum.push_back(rdm.linear_entropy());
            series.sv_quantum.push_back(rdm.von_neumann_entropy());
            series.purity_disagreement =
                std::max(series.purity_disagreement,
                         std::abs(rdm.purity() - rdm.purity_frobenius()));
            series.norm_drift.push_back(std::abs(f.norm() - 1.0));
            const double e = plan.expectation_energy(f, pool).total();
            if (sample == 0) energy0 = e;
            series.energy_drift_quantum.push_back(
                sample == 0 ? 0.0 : std::abs(e / energy0 - 1.0));
        };
        propagate(plan, field, steps_of(cfg.t_final, cfg.dt_quantum),
                  steps_of(cfg.sample_interval, cfg.dt_quantum), pool, observer);
    }

    // Classical branch on the same sample clock.
    {
        TrajectoryEnsemble ensemble =
            sample_ensemble(initial_analog(cfg), cfg.n_traj, cfg.seed, pool);
        std::vector<double> h0;
        const EnsembleObserver observer = [&](std::size_t sample, double,
                                              const TrajectoryEnsemble& e) {
            if (sample == 0) {
                h0.resize(e.size());
                for (std::size_t i = 0; i < e.size(); ++i)
                    h0[i] = hamiltonian(params,
                                        {e.x[i], e.y[i], e.px[i], e.py[i]});
            }
            double drift = 0.0;
            for (std::size_t i = 0; i < e.size(); ++i) {
                const double h = hamiltonian(params,
                                             {e.x[i], e.y[i], e.px[i], e.py[i]});
                drift = std::max(drift, std::abs(h - h0[i]) /
                                            std::max(std::abs(h0[i]), 1e-6));
            }
            series.energy_drift_classical.push_back(drift);
            const PhaseSpaceHistogram h =
                bin_snapshot(e.x, e.px, gx, pool, cfg.pixel_scale);
            series.sl_classical.push_back(
                classical_linear_entropy(h, params.hbar));
            series.sv_classical.push_back(
                classical_von_neumann_entropy(h, params.hbar));
            series.oor_fraction.push_back(h.oor_fraction());
        };
        propagate_ensemble(params, ensemble,
                           steps_of(cfg.t_final, cfg.dt_classical),
                           steps_of(cfg.sample_interval, cfg.dt_classical),
                           cfg.dt_classical, pool, observer);
    }

    if (series.sl_quantum.size() != expected_rows ||
        series.sl_classical.size() != expected_rows)
        throw IntegrityError(
            "runner.series",
            "branches sampled " + std::to_string(series.sl_quantum.size()) +
                " and " + std::to_string(series.sl_classical.size()) +
                " rows, expected " + std::to_string(expected_rows));

    if (!cfg.csv_path.empty()) {
        write_csv(series, cfg.csv_path);
        if (cfg.plot) {
            std::string plot_path = cfg.csv_path;
            const std::size_t dot = plot_path.rfind('.');
            if (dot == std::string::npos)
                plot_path += ".svg";
            else
                plot_path.replace(dot, std::string::npos, ".svg");
            write_plot(series, cfg.name, plot_path);
        }
    }
    return series;
}

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    double out = 0.0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc{} || res.ptr != v.data() + v.size())
        throw ValidationError("config.value",
                              "bad number for '" + key + "': " + v);
    return out;
}

std::uint64_t parse_uint(const std::string& key, const std::string& v) {
    std::uint64_t out = 0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc{} || res.ptr != v.data() + v.size())
        throw ValidationError("config.value",
                              "bad integer for '" + key + "': " + v);
    return out;
}

int parse_int(const std::string& key, const std::string& v) {
    int out = 0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc{} || res.ptr != v.data() + v.size())
        throw ValidationError("config.value",
                              "bad integer for '" + key + "': " + v);
    return out;
}

bool parse_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ValidationError("config.value", "bad boolean for '" + key + "': " + v);
}

}  // namespace

ScenarioConfig parse_config_text(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> pairs;
    std::string preset_name;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ValidationError("config.line",
                                  "expected key=value, got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ValidationError("config.line",
                                  "empty key or value in '" + line + "'");
        if (key == "preset") {
            if (!preset_name.empty())
                throw ValidationError("config.preset",
                                      "preset may appear only once");
            preset_name = value;
        } else {
            pairs.emplace_back(key, value);
        }
    }

    ScenarioConfig c = preset_name.empty() ? ScenarioConfig{} : preset(preset_name);
    for (const auto& [key, value] : pairs) {
        if (key == "name") c.name = value;
        else if (key == "alpha") c.alpha = parse_double(key, value);
        else if (key == "e0") c.e0 = parse_double(key, value);
        else if (key == "state_kind") c.state_kind = state_kind_from_string(value);
        else if (key == "offset_x") c.offset_x = parse_double(key, value);
        else if (key == "offset_y") c.offset_y = parse_double(key, value);
        else if (key == "momentum_sign") c.momentum_sign = parse_int(key, value);
        else if (key == "sigma2") c.sigma2 = parse_double(key, value);
        else if (key == "n_traj") c.n_traj = parse_uint(key, value);
        else if (key == "seed") c.seed = parse_uint(key, value);
        else if (key == "grid_n") c.grid_n = parse_int(key, value);
        else if (key == "grid_extent") c.grid_extent = parse_double(key, value);
        else if (key == "dt_quantum") c.dt_quantum = parse_double(key, value);
        else if (key == "dt_classical") c.dt_classical = parse_double(key, value);
        else if (key == "t_final") c.t_final = parse_double(key, value);
        else if (key == "sample_interval") c.sample_interval = parse_double(key, value);
        else if (key == "pixel_scale") c.pixel_scale = parse_double(key, value);
        else if (key == "csv") c.csv_path = value;
        else if (key == "plot") c.plot = parse_bool(key, value);
        else
            throw ValidationError("config.key", "unknown key '" + key + "'");
    }
    return c;
}

ScenarioConfig load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("config.open", "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

std::string serialize_config(const ScenarioConfig& c) {
    std::string out;
    const auto kv = [&out](const std::string& k, const std::string& v) {
        out += k;
        out += '=';
        out += v;
        out += '\n';
    };
    kv("name", c.name);
    kv("alpha", format_double(c.alpha));
    kv("e0", format_double(c.e0));
    kv("state_kind", to_string(c.state_kind));
    kv("offset_x", format_double(c.offset_x));
    kv("offset_y", format_double(c.offset_y));
    kv("momentum_sign", std::to_string(c.momentum_sign));
    kv("sigma2", format_double(c.sigma2));
    kv("n_traj", std::to_string(c.n_traj));
    kv("seed", std::to_string(c.seed));
    kv("grid_n", std::to_string(c.grid_n));
    kv("grid_extent", format_double(c.grid_extent));
    kv("dt_quantum", format_double(c.dt_quantum));
    kv("dt_classical", format_double(c.dt_classical));
    kv("t_final", format_double(c.t_final));
    kv("sample_interval", format_double(c.sample_interval));
    kv("pixel_scale", format_double(c.pixel_scale));
    return out;
}

}  // namespace qcent
