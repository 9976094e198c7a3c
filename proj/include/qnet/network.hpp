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

// Network geometry and the driven Hamiltonian.
//
// Each site is a two-level system at an integer 2-D coordinate. The on-site
// energy carries a static ladder offset plus a cosine drive with site-dependent
// phase; hopping exchanges single excitations between sites. All rates are in
// units of the bare site frequency, hbar = 1.

#pragma once

#include "qnet/types.hpp"

#include <array>
#include <string>
#include <vector>

namespace qnet {

struct SiteSpec {
    int label = 0;                 // 1-based
    std::array<int, 2> coord{0, 0};
    double omega = 1.0;            // bare frequency
};

struct DriveSpec {
    double eta_d = 0.0;       // dimensionless drive amplitude
    double omega_d = 0.0;     // drive frequency
    double phi_x = 0.0;       // site-phase gradients (radians)
    double phi_y = 0.0;
    int r = 1;                // ladder resonance order, delta_omega = r * omega_d
    double delta_omega = 0.0; // ladder step
    int theta1 = 1;           // ladder direction weights
    int theta2 = 0;
};

struct NetworkSpec {
    std::vector<SiteSpec> sites;
    DriveSpec drive;
    RealMatrix hopping; // symmetric, zero diagonal, units of the bare frequency

    int size() const { return static_cast<int>(sites.size()); }
    Eigen::Index dim() const { return Eigen::Index{1} << size(); }

    // Largest off-diagonal hopping rate; the reference rate c for ct reporting.
    double reference_hopping() const;

    // Throws std::invalid_argument on a violated invariant; returns warnings
    // (hopping rates large enough to strain the rotating wave picture).
    std::vector<std::string> validate() const;
};

// The four-site square with all six pairs coupled at a common rate and the
// drive/ladder parameters used throughout the presets.
NetworkSpec four_site_default();

// Static ladder offset of 1-based site j.
double ladder_offset(const NetworkSpec& spec, int j);

// Drive phase of 1-based site j.
double site_phase(const NetworkSpec& spec, int j);

// Instantaneous on-site energy omega_j + ladder + drive at time t.
double onsite_coefficient(const NetworkSpec& spec, int j, double t);

// sum_{j<k} c_jk (sigma_j^+ sigma_k^- + h.c.)
ComplexMatrix hopping_hamiltonian(const NetworkSpec& spec);

// Full Hamiltonian: driven on-site part plus hopping.
ComplexMatrix hamiltonian(const NetworkSpec& spec, double t);

} // namespace qnet
