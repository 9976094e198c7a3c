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

// Effective couplings of the driven network in the rotating-wave picture.
//
// The periodic drive dresses each hopping rate with a doubly infinite Bessel
// series; the ladder detuning selects a single sideband order per pair. The
// series vanishes identically for odd orders at phase differences 0 and
// +-2pi, which is what suppresses the diagonal links of the square.

#pragma once

#include "qnet/network.hpp"
#include "qnet/types.hpp"

#include <array>
#include <vector>

namespace qnet {

struct EffectiveCoupling {
    int j = 0;              // 1-based pair
    int k = 0;
    Complex tau{0.0, 0.0};  // effective hopping amplitude
    int chi = 0;            // selected sideband order
    double delta_phi = 0.0; // drive phase difference phi_j - phi_k
};

// Sideband order selected by the ladder for a pair of coordinates.
int f_index(int r, const std::array<int, 2>& j, const std::array<int, 2>& k,
            const std::array<int, 2>& theta);

// phi_j - phi_k for 1-based sites.
double phase_diff(const NetworkSpec& spec, int j, int k);

// Bessel function of the first kind, integer order s in [-200, 200],
// |x| <= 50. Single downward recurrence normalized by the sum rule.
double bessel_j(int s, double x);

// All orders 0..n_max at once (same recurrence, one pass).
std::vector<double> bessel_j_ladder(int n_max, double x);

// F_chi(xi, zeta, theta) = sum_s J_s(xi) J_{s+chi}(zeta) e^{i (s + chi/2) theta},
// truncated once the tail bound drops below tol. Throws if the bound is not
// reached by order 400.
Complex bessel_F(int chi, double xi, double zeta, double theta, double tol = 1e-14);

// Dressed hopping amplitude tau_jk for a 1-based pair.
EffectiveCoupling effective_coupling(const NetworkSpec& spec, int j, int k);

// sum_{j<k} tau_jk sigma_j^+ sigma_k^- + h.c.
ComplexMatrix rwa_hamiltonian(const NetworkSpec& spec);

// |F| of the pair's sideband order over (eta, delta_phi) grids; rows follow
// eta_grid, columns follow dphi_grid.
RealMatrix suppression_map(const NetworkSpec& spec, int j, int k,
                           const std::vector<double>& eta_grid,
                           const std::vector<double>& dphi_grid);

} // namespace qnet
