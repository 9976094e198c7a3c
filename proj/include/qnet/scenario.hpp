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

// Scenario configuration: initial-state factory, JSON round trip and the
// single-trajectory runner shared by presets and sweeps.
//
// Config files are JSON with one top-level object mirroring the field names
// below in lower_snake_case; unknown keys are rejected.

#pragma once

#include "qnet/correlations.hpp"
#include "qnet/lindblad.hpp"
#include "qnet/network.hpp"
#include "qnet/types.hpp"

#include <string>
#include <vector>

namespace qnet {

enum class InitialStateKind { Entangled, Mixed, ThetaPure, Ground, Custom };

struct InitialStateSpec {
    InitialStateKind kind = InitialStateKind::Entangled;
    double theta = 0.0;   // theta-pure amplitude angle, in [0, pi/2]
    ComplexMatrix custom; // explicit density matrix for kind == Custom
};

struct SweepGrids {
    std::vector<double> drive_strength; // rescaled axis eta_d * omega_d / c
    std::vector<double> dephasing;      // gamma / c, uniform over sites
    std::vector<double> theta;          // initial-state angle
    std::vector<double> drain;          // Gamma_d / c (source follows at 2x)

    bool empty() const {
        return drive_strength.empty() && dephasing.empty() && theta.empty() && drain.empty();
    }
};

struct OutputSpec {
    std::string directory = "out";
    double record_ct = 0.0025;     // spacing of the recorded grid, in ct
    int correlations_stride = 1;   // record stride between correlation samples
};

struct ScenarioConfig {
    NetworkSpec network;
    DissipatorSpec dissipators;
    IntegratorSpec integrator;
    InitialStateSpec initial;
    double horizon = 10.0; // ct units
    SweepGrids sweep;
    OutputSpec outputs;
};

bool operator==(const InitialStateSpec& a, const InitialStateSpec& b);
bool operator==(const SweepGrids& a, const SweepGrids& b);
bool operator==(const OutputSpec& a, const OutputSpec& b);
bool operator==(const ScenarioConfig& a, const ScenarioConfig& b);

// The four-site network with the preset drive/dissipator parameters and an
// entangled pair on the control sites.
ScenarioConfig default_config();

// Density matrix for the configured initial state. The entangled, mixed and
// theta-pure kinds put one excitation on the control sites (2, 4) of a
// four-site register with sites 1 and 3 in the ground state.
ComplexMatrix initial_state(const InitialStateSpec& spec, int n_sites);

// JSON round trip; parse rejects unknown keys.
std::string emit_config(const ScenarioConfig& cfg);
ScenarioConfig parse_config(const std::string& text);
ScenarioConfig load_config(const std::string& path);

// Integrate one scenario. The horizon is converted from ct with the network's
// reference hopping rate (taken as absolute time if all hoppings vanish).
Trajectory run_scenario(const ScenarioConfig& cfg);

// CSV exports (12 significant digits, LF, header row).
void write_trajectory_csv(const std::string& path, const Trajectory& traj);
void write_correlation_csv(const std::string& path,
                           const std::vector<CorrelationSample>& series);

} // namespace qnet
