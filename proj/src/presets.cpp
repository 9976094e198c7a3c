// Copyright 2026 The qnet authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qnet/presets.hpp"

#include "qnet/csv.hpp"
#include "qnet/floquet.hpp"
#include "qnet/metrics.hpp"
#include "qnet/sweep.hpp"

#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace qnet {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kFirstMinimumDrive = 18.0; // rescaled eta_d * omega_d / c
constexpr double kFirstMaximumDrive = 38.8;

struct ManifestBuilder {
    Json root;
    std::vector<std::string> files;

    ManifestBuilder(const std::string& preset, const PresetOptions& opts) {
        root["version"] = kVersion;
        root["preset"] = preset;
        root["threads"] = opts.threads;
        root["runs"] = Json::array();
    }

    void add_run(const std::string& file, const ScenarioConfig& cfg, Json extra = {}) {
        Json run;
        run["file"] = file;
        if (!extra.is_null()) run["parameters"] = std::move(extra);
        run["config"] = Json::parse(emit_config(cfg));
        root["runs"].push_back(std::move(run));
        files.push_back(file);
    }

    std::string write(const std::string& out_dir, const std::string& preset) {
        const std::string path = out_dir + "/" + preset + "_manifest.json";
        std::ofstream(path) << root.dump(2) << "\n";
        files.push_back(path);
        return path;
    }
};

ScenarioConfig preset_base(const PresetOptions& opts) {
    ScenarioConfig cfg = default_config();
    if (opts.dt_override > 0.0) cfg.integrator.dt = opts.dt_override;
    if (opts.horizon_override > 0.0) cfg.horizon = opts.horizon_override;
    return cfg;
}

void set_uniform_dephasing(ScenarioConfig& cfg, double gamma_over_c) {
    const double c = cfg.network.reference_hopping();
    cfg.dissipators.gamma_deph.assign(static_cast<std::size_t>(cfg.network.size()),
                                      gamma_over_c * c);
}

void set_drive_strength(ScenarioConfig& cfg, double rescaled) {
    apply_axis(cfg, "drive_strength", rescaled);
}

// Sweep a single curve over the drive axis and write one CSV per call.
void write_drive_curve(const std::string& path, const ScenarioConfig& base,
                       const std::vector<double>& grid, int threads) {
    ScenarioConfig cfg = base;
    cfg.sweep = {};
    cfg.sweep.drive_strength = grid;
    const auto points = expand_sweep(cfg);
    CsvWriter csv(path, {"drive_strength", "p3", "eta_eff", "status"});
    auto flush = [&](const SweepRow& row) {
        csv.write_row({row.coords[0], row.p3, row.eta_eff}, row.status);
        csv.flush();
    };
    run_points_ordered(points.size(), threads,
                       [&](std::size_t i) { return evaluate_point(points[i]); }, flush);
}

std::vector<std::string> preset_fig2(const PresetOptions& opts) {
    ManifestBuilder manifest("fig2", opts);
    const ScenarioConfig cfg = preset_base(opts);
    const std::vector<double> eta_grid = uniform_grid(0.0, 2.5, 0.025);
    const std::vector<double> dphi_grid = uniform_grid(0.0, 2.0 * M_PI, 2.0 * M_PI / 100.0);

    for (const auto& pair : {std::pair{1, 3}, std::pair{2, 4}}) {
        const RealMatrix map =
            suppression_map(cfg.network, pair.first, pair.second, eta_grid, dphi_grid);
        const std::string path = opts.out_dir + "/fig2_pair" + std::to_string(pair.first) +
                                 std::to_string(pair.second) + ".csv";
        CsvWriter csv(path, {"eta", "dphi", "abs_f"});
        for (std::size_t a = 0; a < eta_grid.size(); ++a) {
            for (std::size_t b = 0; b < dphi_grid.size(); ++b) {
                csv.write_row({eta_grid[a], dphi_grid[b],
                               map(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b))});
            }
        }
        manifest.add_run(path, cfg,
                         Json{{"pair", {pair.first, pair.second}},
                              {"eta_points", eta_grid.size()},
                              {"dphi_points", dphi_grid.size()}});
    }
    manifest.write(opts.out_dir, "fig2");
    return manifest.files;
}

std::vector<std::string> preset_fig3(const PresetOptions& opts) {
    ManifestBuilder manifest("fig3", opts);
    const std::vector<double> grid = uniform_grid(0.0, 60.0, 0.4);
    for (const auto& state :
         {std::pair{"ent", InitialStateKind::Entangled}, std::pair{"mix", InitialStateKind::Mixed}}) {
        for (const auto& gamma : {std::pair{"gamma0", 0.0}, std::pair{"gamma1", 0.1}}) {
            ScenarioConfig cfg = preset_base(opts);
            cfg.initial.kind = state.second;
            set_uniform_dephasing(cfg, gamma.second);
            const std::string path = opts.out_dir + "/fig3_" + state.first + "_" +
                                     gamma.first + ".csv";
            write_drive_curve(path, cfg, grid, opts.threads);
            manifest.add_run(path, cfg,
                             Json{{"initial", state.first}, {"gamma_over_c", gamma.second}});
        }
    }
    manifest.write(opts.out_dir, "fig3");
    return manifest.files;
}

std::vector<std::string> preset_fig3heat(const PresetOptions& opts) {
    ManifestBuilder manifest("fig3heat", opts);
    for (const auto& state :
         {std::pair{"ent", InitialStateKind::Entangled}, std::pair{"mix", InitialStateKind::Mixed}}) {
        ScenarioConfig cfg = preset_base(opts);
        cfg.initial.kind = state.second;
        cfg.sweep = {};
        cfg.sweep.drive_strength = uniform_grid(0.0, 60.0, 0.8);
        cfg.sweep.dephasing = uniform_grid(0.0, 1.0, 0.1);
        const auto points = expand_sweep(cfg);
        const std::string path = opts.out_dir + "/fig3heat_" + state.first + ".csv";
        CsvWriter csv(path, {"drive_strength", "dephasing", "p3", "eta_eff", "status"});
        auto flush = [&](const SweepRow& row) {
            csv.write_row({row.coords[0], row.coords[1], row.p3, row.eta_eff}, row.status);
            csv.flush();
        };
        run_points_ordered(points.size(), opts.threads,
                           [&](std::size_t i) { return evaluate_point(points[i]); }, flush);
        manifest.add_run(path, cfg, Json{{"initial", state.first}});
    }
    manifest.write(opts.out_dir, "fig3heat");
    return manifest.files;
}

std::vector<std::string> preset_fig4(const PresetOptions& opts) {
    ManifestBuilder manifest("fig4", opts);
    for (const auto& drive : {std::pair{"max", kFirstMaximumDrive},
                              std::pair{"min", kFirstMinimumDrive}}) {
        for (const auto& state : {std::pair{"ent", InitialStateKind::Entangled},
                                  std::pair{"mix", InitialStateKind::Mixed}}) {
            for (const auto& gamma : {std::pair{"gamma0", 0.0}, std::pair{"gamma1", 0.1}}) {
                ScenarioConfig cfg = preset_base(opts);
                if (opts.horizon_override <= 0.0) cfg.horizon = 100.0;
                cfg.initial.kind = state.second;
                set_uniform_dephasing(cfg, gamma.second);
                set_drive_strength(cfg, drive.second);
                const Trajectory traj = run_scenario(cfg);
                const std::string path = opts.out_dir + "/fig4_" + drive.first + "_" +
                                         state.first + "_" + gamma.first + ".csv";
                write_trajectory_csv(path, traj);
                manifest.add_run(path, cfg,
                                 Json{{"drive_strength", drive.second},
                                      {"initial", state.first},
                                      {"gamma_over_c", gamma.second}});
            }
        }
    }
    manifest.write(opts.out_dir, "fig4");
    return manifest.files;
}

std::vector<std::string> preset_fig5(const PresetOptions& opts) {
    ManifestBuilder manifest("fig5", opts);
    for (const auto& drive : {std::pair{"max", kFirstMaximumDrive},
                              std::pair{"min", kFirstMinimumDrive}}) {
        ScenarioConfig cfg = preset_base(opts);
        if (opts.horizon_override <= 0.0) cfg.horizon = 100.0;
        cfg.initial.kind = InitialStateKind::Entangled;
        set_uniform_dephasing(cfg, 0.0);
        set_drive_strength(cfg, drive.second);
        cfg.outputs.correlations_stride = 8; // one sample per ct = 0.02
        const Trajectory traj = run_scenario(cfg);
        const auto series = correlation_series(traj, cfg.outputs.correlations_stride);
        const std::string path = opts.out_dir + "/fig5_" + drive.first + ".csv";
        write_correlation_csv(path, series);
        manifest.add_run(path, cfg, Json{{"drive_strength", drive.second}});
    }
    manifest.write(opts.out_dir, "fig5");
    return manifest.files;
}

std::vector<std::string> preset_fig6(const PresetOptions& opts) {
    ManifestBuilder manifest("fig6", opts);
    ScenarioConfig base = preset_base(opts);
    base.initial.kind = InitialStateKind::Entangled;
    set_uniform_dephasing(base, 1.0);
    base.outputs.correlations_stride = 16; // one sample per ct = 0.04

    const std::vector<double> grid = uniform_grid(0.0, 60.0, 0.4);
    const std::string path = opts.out_dir + "/fig6.csv";
    CsvWriter csv(path, {"drive_strength", "avg_eof", "avg_discord2", "avg_discord4",
                         "avg_mutual_info", "status"});

    auto job = [&](std::size_t i) {
        SweepRow row;
        row.coords = {grid[i], 0.0, 0.0, 0.0};
        try {
            ScenarioConfig cfg = base;
            set_drive_strength(cfg, grid[i]);
            const Trajectory traj = run_scenario(cfg);
            const auto series = correlation_series(traj, cfg.outputs.correlations_stride);
            const CorrelationSample avg = time_average(series, cfg.horizon);
            row.coords = {grid[i], avg.eof, avg.discord_2, avg.discord_4};
            row.p3 = avg.mutual_info;
        } catch (const std::exception& e) {
            const double nan = std::numeric_limits<double>::quiet_NaN();
            row.coords = {grid[i], nan, nan, nan};
            row.p3 = nan;
            row.status = std::string("error: ") + e.what();
        }
        return row;
    };
    auto flush = [&](const SweepRow& row) {
        csv.write_row({row.coords[0], row.coords[1], row.coords[2], row.coords[3], row.p3},
                      row.status);
        csv.flush();
    };
    run_points_ordered(grid.size(), opts.threads, job, flush);
    manifest.add_run(path, base, Json{{"drive_points", grid.size()}});
    manifest.write(opts.out_dir, "fig6");
    return manifest.files;
}

std::vector<std::string> preset_gamd(const PresetOptions& opts) {
    ManifestBuilder manifest("gamd", opts);
    const std::vector<double> grid = uniform_grid(0.0, 60.0, 0.4);
    for (const auto& drain : {std::pair{"drain1", 0.01}, std::pair{"drain2", 0.1}}) {
        for (const auto& state : {std::pair{"ent", InitialStateKind::Entangled},
                                  std::pair{"mix", InitialStateKind::Mixed}}) {
            ScenarioConfig cfg = preset_base(opts);
            cfg.initial.kind = state.second;
            set_uniform_dephasing(cfg, 0.1);
            apply_axis(cfg, "drain", drain.second);
            const std::string path = opts.out_dir + "/gamd_" + state.first + "_" +
                                     drain.first + ".csv";
            write_drive_curve(path, cfg, grid, opts.threads);
            manifest.add_run(path, cfg,
                             Json{{"initial", state.first}, {"drain_over_c", drain.second}});
        }
    }
    manifest.write(opts.out_dir, "gamd");
    return manifest.files;
}

std::vector<std::string> preset_entvar(const PresetOptions& opts) {
    ManifestBuilder manifest("entvar", opts);
    ScenarioConfig cfg = preset_base(opts);
    set_drive_strength(cfg, kFirstMaximumDrive);
    cfg.sweep = {};
    cfg.sweep.dephasing = uniform_grid(0.0, 1.0, 0.05);
    cfg.sweep.theta = uniform_grid(0.0, M_PI / 4.0, M_PI / 16.0);
    const auto points = expand_sweep(cfg);
    const std::string path = opts.out_dir + "/entvar.csv";
    CsvWriter csv(path, {"dephasing", "theta", "p3", "eta_eff", "status"});
    auto flush = [&](const SweepRow& row) {
        csv.write_row({row.coords[0], row.coords[1], row.p3, row.eta_eff}, row.status);
        csv.flush();
    };
    run_points_ordered(points.size(), opts.threads,
                       [&](std::size_t i) { return evaluate_point(points[i]); }, flush);
    manifest.add_run(path, cfg, Json{{"drive_strength", kFirstMaximumDrive}});
    manifest.write(opts.out_dir, "entvar");
    return manifest.files;
}

} // namespace

std::vector<double> uniform_grid(double start, double stop, double step) {
    if (step <= 0.0) throw std::invalid_argument("uniform_grid: step must be > 0");
    std::vector<double> grid;
    for (int i = 0;; ++i) {
        const double v = start + i * step;
        if (v > stop + 1e-9 * std::max(1.0, std::abs(stop))) break;
        grid.push_back(v);
    }
    return grid;
}

std::vector<std::string> preset_names() {
    return {"fig2", "fig3", "fig3heat", "fig4", "fig5", "fig6", "gamd", "entvar"};
}

std::vector<std::string> run_preset(const std::string& name, const PresetOptions& opts) {
    std::filesystem::create_directories(opts.out_dir);
    if (name == "fig2") return preset_fig2(opts);
    if (name == "fig3") return preset_fig3(opts);
    if (name == "fig3heat") return preset_fig3heat(opts);
    if (name == "fig4") return preset_fig4(opts);
    if (name == "fig5") return preset_fig5(opts);
    if (name == "fig6") return preset_fig6(opts);
    if (name == "gamd") return preset_gamd(opts);
    if (name == "entvar") return preset_entvar(opts);
    throw std::invalid_argument("unknown preset '" + name + "'");
}

} // namespace qnet
