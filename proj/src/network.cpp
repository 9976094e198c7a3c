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

#include "qnet/network.hpp"

#include "qnet/qops.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace qnet {

double NetworkSpec::reference_hopping() const {
    double c = 0.0;
    for (Eigen::Index i = 0; i < hopping.rows(); ++i) {
        for (Eigen::Index j = i + 1; j < hopping.cols(); ++j) {
            c = std::max(c, hopping(i, j));
        }
    }
    return c;
}

std::vector<std::string> NetworkSpec::validate() const {
    const int n = size();
    if (n < 1) throw std::invalid_argument("network: no sites");
    std::set<std::array<int, 2>> coords;
    double omega_min = sites.front().omega;
    for (const auto& s : sites) {
        if (s.coord[0] < 0 || s.coord[1] < 0) {
            throw std::invalid_argument("network: site coordinates must be non-negative");
        }
        if (!coords.insert(s.coord).second) {
            throw std::invalid_argument("network: duplicate site coordinate");
        }
        omega_min = std::min(omega_min, s.omega);
    }
    if (hopping.rows() != n || hopping.cols() != n) {
        throw std::invalid_argument("network: hopping table must be n x n");
    }
    double c_max = 0.0;
    for (int i = 0; i < n; ++i) {
        if (hopping(i, i) != 0.0) throw std::invalid_argument("network: hopping diagonal must be zero");
        for (int j = 0; j < n; ++j) {
            if (hopping(i, j) < 0.0) throw std::invalid_argument("network: hopping rates must be >= 0");
            if (std::abs(hopping(i, j) - hopping(j, i)) > 1e-15) {
                throw std::invalid_argument("network: hopping table must be symmetric");
            }
            c_max = std::max(c_max, hopping(i, j));
        }
    }
    if (drive.r < 1) throw std::invalid_argument("network: drive order r must be >= 1");
    if (drive.theta1 < 0 || drive.theta2 < 0) {
        throw std::invalid_argument("network: ladder weights must be >= 0");
    }
    if (std::abs(drive.delta_omega - drive.r * drive.omega_d) > 1e-12) {
        throw std::invalid_argument("network: ladder step must equal r * drive frequency");
    }

    std::vector<std::string> warnings;
    if (c_max > omega_min / 10.0) {
        warnings.push_back("hopping rate exceeds omega/10; rotating-wave picture degrades");
    }
    return warnings;
}

NetworkSpec four_site_default() {
    NetworkSpec net;
    net.sites = {
        {1, {0, 0}, 1.0},
        {2, {1, 0}, 1.0},
        {3, {1, 1}, 1.0},
        {4, {0, 1}, 1.0},
    };
    net.drive.eta_d = 0.0;
    net.drive.omega_d = 0.25;
    net.drive.phi_x = M_PI;
    net.drive.phi_y = M_PI;
    net.drive.r = 1;
    net.drive.delta_omega = 0.25;
    net.drive.theta1 = 1;
    net.drive.theta2 = 0;

    const double c = 0.01;
    net.hopping = RealMatrix::Constant(4, 4, c);
    net.hopping.diagonal().setZero();
    return net;
}

namespace {

const SiteSpec& site_at(const NetworkSpec& spec, int j) {
    if (j < 1 || j > spec.size()) throw std::out_of_range("network: unknown site");
    return spec.sites[static_cast<std::size_t>(j - 1)];
}

} // namespace

double ladder_offset(const NetworkSpec& spec, int j) {
    const auto& s = site_at(spec, j);
    return spec.drive.delta_omega *
           (spec.drive.theta1 * s.coord[0] + spec.drive.theta2 * s.coord[1]);
}

double site_phase(const NetworkSpec& spec, int j) {
    const auto& s = site_at(spec, j);
    return s.coord[0] * spec.drive.phi_x + s.coord[1] * spec.drive.phi_y;
}

double onsite_coefficient(const NetworkSpec& spec, int j, double t) {
    const auto& s = site_at(spec, j);
    return s.omega + ladder_offset(spec, j) +
           spec.drive.eta_d * spec.drive.omega_d *
               std::cos(spec.drive.omega_d * t + site_phase(spec, j));
}

ComplexMatrix hopping_hamiltonian(const NetworkSpec& spec) {
    const int n = spec.size();
    ComplexMatrix h = ComplexMatrix::Zero(spec.dim(), spec.dim());
    for (int j = 1; j <= n; ++j) {
        for (int k = j + 1; k <= n; ++k) {
            const double c = spec.hopping(j - 1, k - 1);
            if (c == 0.0) continue;
            const ComplexMatrix hop =
                site_operator(n, j, sigma_plus()) * site_operator(n, k, sigma_minus());
            h += c * (hop + hop.adjoint());
        }
    }
    return h;
}

ComplexMatrix hamiltonian(const NetworkSpec& spec, double t) {
    const int n = spec.size();
    ComplexMatrix h = hopping_hamiltonian(spec);
    const ComplexMatrix occ = sigma_plus() * sigma_minus();
    for (int j = 1; j <= n; ++j) {
        h += onsite_coefficient(spec, j, t) * site_operator(n, j, occ);
    }
    return h;
}

} // namespace qnet
