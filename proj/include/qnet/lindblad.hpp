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

// Master equation with incoherent source, drain and per-site dephasing,
// integrated under the full time-dependent Hamiltonian.
//
// The dissipators use the doubled-sandwich convention
//   L_s(rho)    = Gamma_s (-{sigma^- sigma^+, rho} + 2 sigma^+ rho sigma^-)
//   L_d(rho)    = Gamma_d (-{sigma^+ sigma^-, rho} + 2 sigma^- rho sigma^+)
//   L_deph(rho) = sum_k gamma_k (-{n_k, rho} + 2 n_k rho n_k)
// so a lone pump fills its site at rate 2 Gamma_s. Populations drain through
// the drain site at rate 2 Gamma_d.

#pragma once

#include "qnet/network.hpp"
#include "qnet/types.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace qnet {

struct DissipatorSpec {
    double gamma_s = 0.0;            // pump rate at source_site
    double gamma_d = 0.0;            // drain rate at drain_site
    std::vector<double> gamma_deph;  // per-site dephasing rates
    int source_site = 1;             // 1-based
    int drain_site = 3;

    void validate(int n_sites) const;
};

enum class IntegratorMethod { FixedRk4, AdaptiveRk45 };

struct IntegratorSpec {
    IntegratorMethod method = IntegratorMethod::FixedRk4;
    double dt = 0.0;        // fixed-step target; 0 derives one from the network
    double rel_tol = 1e-8;  // adaptive
    double abs_tol = 1e-10; // adaptive
    int record_every = 1;   // steps between recorded samples

    void validate() const;
};

struct RecordOptions {
    bool record_pair = true;            // reduced state of pair_sites
    std::array<int, 2> pair_sites{2, 4};
    bool record_full = false;           // full density matrix snapshots
};

struct Trajectory {
    double time_scale = 1.0;   // rate used to report dimensionless ct
    std::vector<double> times; // absolute time
    std::vector<RealVector> populations;
    std::vector<ComplexMatrix> reduced_pair;
    std::vector<ComplexMatrix> states;
    std::vector<double> trace_drift;   // |tr rho - 1|
    std::vector<double> herm_residual; // max |rho - rho^dag| before symmetrization
    std::vector<double> min_eig;

    std::size_t size() const { return times.size(); }
    double ct(std::size_t i) const { return time_scale * times[i]; }
};

struct PositivityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StepUnderflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Precomputed right-hand side of the master equation. The hopping part is
// applied sparsely and every dissipator collapses to elementwise masks, so an
// evaluation costs a few passes over the density matrix.
class MasterEquation {
public:
    MasterEquation(const NetworkSpec& net, const DissipatorSpec& dis);

    int n_sites() const { return n_sites_; }
    Eigen::Index dim() const { return dim_; }

    // out = d rho / dt at time t.
    void apply(double t, const ComplexMatrix& rho, ComplexMatrix& out) const;

private:
    struct Triplet {
        Eigen::Index row;
        Eigen::Index col;
        Complex value;
    };

    int n_sites_ = 0;
    Eigen::Index dim_ = 0;
    double eta_omega_ = 0.0; // eta_d * omega_d
    double omega_d_ = 0.0;
    std::vector<double> phases_;       // per-site drive phase
    std::vector<Triplet> hopping_;     // nonzeros of the hopping Hamiltonian
    RealVector static_energy_;         // per-basis-state sum of omega_j + ladder_j
    std::vector<RealVector> occupancy_; // per site, per basis state (0/1)
    RealMatrix decay_mask_;            // elementwise dissipator coefficients
    double pump2_ = 0.0, drain2_ = 0.0;
    std::size_t source_bit_ = 0, drain_bit_ = 0;
};

// Convenience single-shot evaluation.
ComplexMatrix master_rhs(const ComplexMatrix& rho, double t, const NetworkSpec& net,
                         const DissipatorSpec& dis);

// Step target resolving the fastest on-site scale (carrier + ladder + drive).
double default_step(const NetworkSpec& net);

// Integrate the master equation on [0, t_end]. Fixed RK4 uses a uniform step
// h <= dt covering t_end exactly; adaptive RK45 lands on the same record grid.
// The state is symmetrized after every step; trace is never renormalized.
// Throws PositivityError if a recorded state dips below -1e-8.
Trajectory evolve(const ComplexMatrix& rho0, const NetworkSpec& net,
                  const DissipatorSpec& dis, const IntegratorSpec& integ,
                  double t_end, const RecordOptions& opts = {});

// Matrix of the full superoperator at time t acting on column-major vec(rho).
ComplexMatrix liouvillian_matrix(const NetworkSpec& net, const DissipatorSpec& dis,
                                 double t);

} // namespace qnet
