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

// Parameter sweeps: Cartesian expansion of the configured grids, a worker
// pool over points, and rows flushed in grid order so serial and parallel
// runs produce byte-identical files.

#pragma once

#include "qnet/scenario.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qnet {

struct SweepPoint {
    std::vector<double> coords; // axis values in the fixed axis order
    ScenarioConfig cfg;         // concrete configuration for this point
};

struct SweepRow {
    std::vector<double> coords;
    double p3 = 0.0;
    double eta_eff = 0.0;
    std::string status = "ok";
};

// Names of the non-empty sweep axes in their fixed order:
// drive_strength, dephasing, theta, drain.
std::vector<std::string> sweep_axis_names(const SweepGrids& grids);

// Resolve one axis value into a concrete configuration. Drive strength is the
// rescaled quantity eta_d * omega_d / c; dephasing and drain are in units of
// the reference hopping rate; a drain value also sets the pump to twice it.
void apply_axis(ScenarioConfig& cfg, const std::string& axis, double value);

// Cartesian product of the non-empty grids, lexicographic in the axis order.
std::vector<SweepPoint> expand_sweep(const ScenarioConfig& cfg);

// Run a scenario and reduce it to (P3, eta_eff); integrator failures land in
// the status column instead of aborting.
SweepRow evaluate_point(const SweepPoint& point);

// Evaluate `n` rows with a pool of `threads` workers, flushing completed rows
// in index order.
std::vector<SweepRow> run_points_ordered(std::size_t n, int threads,
                                         const std::function<SweepRow(std::size_t)>& fn,
                                         const std::function<void(const SweepRow&)>& flush);

// Full sweep: expand, evaluate, write <dir>/sweep.csv and a manifest.
// Returns the written file paths.
std::vector<std::string> run_sweep(const ScenarioConfig& cfg, int threads,
                                   const std::string& out_dir);

} // namespace qnet
