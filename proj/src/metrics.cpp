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

#include "qnet/metrics.hpp"

#include "qnet/qops.hpp"

#include <stdexcept>

namespace qnet {

double population(const ComplexMatrix& rho, int site) {
    if (rho.rows() != rho.cols()) throw std::invalid_argument("population: rho must be square");
    int n_sites = 0;
    while ((Eigen::Index{1} << n_sites) < rho.rows()) ++n_sites;
    if ((Eigen::Index{1} << n_sites) != rho.rows()) {
        throw std::invalid_argument("population: dimension is not a power of two");
    }
    if (site < 1 || site > n_sites) throw std::out_of_range("population: site out of range");
    double p = 0.0;
    for (Eigen::Index i = 0; i < rho.rows(); ++i) {
        if (site_bit(static_cast<std::size_t>(i), n_sites, site) != 0) p += rho(i, i).real();
    }
    return p;
}

double integrated_population(const Trajectory& traj, int site) {
    if (traj.size() < 2) {
        throw std::invalid_argument("integrated_population: need at least two samples");
    }
    const Eigen::Index idx = site - 1;
    if (idx < 0 || idx >= traj.populations.front().size()) {
        throw std::out_of_range("integrated_population: site out of range");
    }
    double acc = 0.0;
    for (std::size_t i = 1; i < traj.size(); ++i) {
        const double dct = traj.ct(i) - traj.ct(i - 1);
        acc += 0.5 * dct * (traj.populations[i](idx) + traj.populations[i - 1](idx));
    }
    return acc;
}

double efficiency(double p3, double gamma_d) {
    if (gamma_d <= 0.0) throw std::invalid_argument("efficiency: gamma_d must be > 0");
    return 2.0 * gamma_d * p3;
}

} // namespace qnet
