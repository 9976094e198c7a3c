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

// Command line front end: figure presets, config-driven sweeps and
// suppression maps.

#include "qnet/csv.hpp"
#include "qnet/floquet.hpp"
#include "qnet/presets.hpp"
#include "qnet/scenario.hpp"
#include "qnet/sweep.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <iostream>

namespace {

std::vector<double> parse_grid(const std::string& text) {
    // "start:stop:step"
    const auto first = text.find(':');
    const auto second = text.find(':', first + 1);
    if (first == std::string::npos || second == std::string::npos) {
        throw CLI::ValidationError("grid must be start:stop:step");
    }
    return qnet::uniform_grid(std::stod(text.substr(0, first)),
                              std::stod(text.substr(first + 1, second - first - 1)),
                              std::stod(text.substr(second + 1)));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Driven four-site quantum network transport simulator"};
    app.require_subcommand(1);

    std::string out_dir = "out";
    int threads = 1;
    double dt = 0.0;
    double horizon = 0.0;
    app.add_option("--out", out_dir, "Output directory")->capture_default_str();
    app.add_option("--threads", threads, "Worker threads for sweeps")->capture_default_str();
    app.add_option("--dt", dt, "Fixed-step target (absolute time units)");
    app.add_option("--horizon", horizon, "Observation horizon in ct");

    auto* preset_cmd = app.add_subcommand("preset", "Run a named preset");
    std::string preset_name;
    preset_cmd->add_option("name", preset_name, "One of: fig2 fig3 fig3heat fig4 fig5 fig6 gamd entvar")
        ->required();

    auto* sweep_cmd = app.add_subcommand("sweep", "Run a sweep from a JSON config");
    std::string config_path;
    sweep_cmd->add_option("config", config_path, "Path to the JSON configuration")->required();

    auto* fmap_cmd = app.add_subcommand("fmap", "Export a hopping suppression map");
    std::pair<int, int> pair{1, 3};
    std::string eta_spec = "0:2.5:0.025";
    std::string dphi_spec;
    fmap_cmd->add_option("--pair", pair, "Site pair j k")->delimiter(',');
    fmap_cmd->add_option("--eta", eta_spec, "Drive amplitude grid start:stop:step")
        ->capture_default_str();
    fmap_cmd->add_option("--dphi", dphi_spec, "Phase difference grid start:stop:step "
                                              "(default 0:2pi in 100 steps)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(preset_cmd)) {
            qnet::PresetOptions opts;
            opts.out_dir = out_dir;
            opts.threads = threads;
            opts.dt_override = dt;
            opts.horizon_override = horizon;
            const auto files = qnet::run_preset(preset_name, opts);
            for (const auto& f : files) std::cout << f << "\n";
        } else if (app.got_subcommand(sweep_cmd)) {
            qnet::ScenarioConfig cfg = qnet::load_config(config_path);
            if (dt > 0.0) cfg.integrator.dt = dt;
            if (horizon > 0.0) cfg.horizon = horizon;
            if (!out_dir.empty()) cfg.outputs.directory = out_dir;
            const auto files = qnet::run_sweep(cfg, threads, cfg.outputs.directory);
            for (const auto& f : files) std::cout << f << "\n";
        } else if (app.got_subcommand(fmap_cmd)) {
            const auto eta_grid = parse_grid(eta_spec);
            const auto dphi_grid = dphi_spec.empty()
                                       ? qnet::uniform_grid(0.0, 2.0 * M_PI, 2.0 * M_PI / 100.0)
                                       : parse_grid(dphi_spec);
            const auto net = qnet::four_site_default();
            const auto map =
                qnet::suppression_map(net, pair.first, pair.second, eta_grid, dphi_grid);
            std::filesystem::create_directories(out_dir);
            const std::string path = out_dir + "/fmap_pair" + std::to_string(pair.first) +
                                     std::to_string(pair.second) + ".csv";
            qnet::CsvWriter csv(path, {"eta", "dphi", "abs_f"});
            for (Eigen::Index a = 0; a < map.rows(); ++a) {
                for (Eigen::Index b = 0; b < map.cols(); ++b) {
                    csv.write_row({eta_grid[static_cast<std::size_t>(a)],
                                   dphi_grid[static_cast<std::size_t>(b)], map(a, b)});
                }
            }
            std::cout << path << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
