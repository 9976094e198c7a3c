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

// Two-qubit quantum correlations: entanglement of formation (via the
// concurrence) and quantum discord with respect to projective measurements on
// either qubit. All entropies are base 2, so a Bell pair scores 1 on every
// measure.

#pragma once

#include "qnet/lindblad.hpp"
#include "qnet/types.hpp"

#include <vector>

namespace qnet {

// Binary entropy in bits, h(0) = h(1) = 0.
double binary_entropy(double p);

// Wootters concurrence of a two-qubit state.
double concurrence(const ComplexMatrix& rho);

// Entanglement of formation h((1 + sqrt(1 - C^2)) / 2).
double eof(const ComplexMatrix& rho);

// S(A) + S(B) - S(AB) in bits.
double mutual_information(const ComplexMatrix& rho);

// S(other) - sum_pm p_pm S(other | pm) for the projective measurement with
// Bloch angles (theta, phi) on the measured factor (1 or 2).
double classical_correlation(const ComplexMatrix& rho, int measured_factor,
                             double theta, double phi);

struct DiscordResult {
    double value = 0.0;
    double pre_clamp = 0.0; // optimizer output before the >= 0 clamp
    bool converged = true;
};

// Quantum discord with the measurement acting on the given factor (1 or 2).
// Maximization runs a 64x32 (theta, phi) grid plus local pattern refinement
// to 1e-7 in the objective.
DiscordResult discord_detailed(const ComplexMatrix& rho, int measured_factor);
double discord(const ComplexMatrix& rho, int measured_factor);

struct CorrelationSample {
    double ct = 0.0;
    double eof = 0.0;
    double discord_2 = 0.0;   // measured on the first pair factor
    double discord_4 = 0.0;   // measured on the second pair factor
    double mutual_info = 0.0;
};

// Per-sample measures of the recorded reduced pair states, every `stride`-th
// record. Throws if the trajectory carries no reduced states.
std::vector<CorrelationSample> correlation_series(const Trajectory& traj, int stride = 1);

// Trapezoidal time average of each measure over ct in [0, horizon_ct].
CorrelationSample time_average(const std::vector<CorrelationSample>& series,
                               double horizon_ct);

} // namespace qnet
