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

// Transport figures of merit: site populations, the time-integrated drain-site
// population P3 and the efficiency eta_eff = 2 Gamma_d P3.

#pragma once

#include "qnet/lindblad.hpp"
#include "qnet/types.hpp"

#include <vector>

namespace qnet {

struct EfficiencyRecord {
    double p3_integral = 0.0;
    double eta_eff = 0.0;
    double horizon_ct = 0.0;
    std::vector<double> sweep_coords;
};

// tr(rho n_site) for a 1-based site.
double population(const ComplexMatrix& rho, int site);

// Composite trapezoidal integral of the site population over the recorded ct
// grid. Needs at least two samples.
double integrated_population(const Trajectory& traj, int site);

// eta_eff = 2 gamma_d p3. The drain rate must be expressed per unit of the
// time variable p3 was integrated over (1/ct when p3 comes from
// integrated_population). Throws if gamma_d <= 0.
double efficiency(double p3, double gamma_d);

} // namespace qnet
