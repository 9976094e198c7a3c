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

// Canned scenario families, one per figure-style data product. Every preset
// writes deterministic CSV files plus a JSON manifest of the resolved
// parameters.

#pragma once

#include "qnet/scenario.hpp"

#include <string>
#include <vector>

namespace qnet {

struct PresetOptions {
    std::string out_dir = "out";
    int threads = 1;
    double dt_override = 0.0;      // fixed-step target; 0 keeps the derived one
    double horizon_override = 0.0; // ct; 0 keeps the preset value
};

std::vector<std::string> preset_names();

// Runs a preset by name; returns the written file paths.
std::vector<std::string> run_preset(const std::string& name, const PresetOptions& opts);

// Uniform grid helper: start + i * step while start + i * step <= stop + eps.
std::vector<double> uniform_grid(double start, double stop, double step);

} // namespace qnet
