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

#include "qnet/floquet.hpp"

#include "qnet/qops.hpp"

#include <cmath>
#include <stdexcept>

namespace qnet {

namespace {

constexpr int kMaxOrder = 200;   // validated order range of bessel_j
constexpr double kMaxArg = 50.0; // validated argument range
constexpr int kMaxSeries = 400;  // hard cap on the F truncation order

// Downward recurrence J_{k-1} = (2k/x) J_k - J_{k+1} from a seed far above
// max(n_max, x), normalized with J_0 + 2 sum J_{2k} = 1. Non-negative x only.
std::vector<double> bessel_ladder_core(int n_max, double x) {
    std::vector<double> j(static_cast<std::size_t>(n_max) + 1, 0.0);
    if (x == 0.0) {
        j[0] = 1.0;
        return j;
    }
    const int start = std::max(n_max, static_cast<int>(std::ceil(x))) + 45;
    std::vector<double> work(static_cast<std::size_t>(start) + 2, 0.0);
    work[static_cast<std::size_t>(start) + 1] = 0.0;
    work[static_cast<std::size_t>(start)] = 1e-30;
    for (int k = start; k >= 1; --k) {
        work[static_cast<std::size_t>(k) - 1] =
            (2.0 * k / x) * work[static_cast<std::size_t>(k)] -
            work[static_cast<std::size_t>(k) + 1];
        if (std::abs(work[static_cast<std::size_t>(k) - 1]) > 1e250) {
            for (int q = k - 1; q <= start + 1; ++q) work[static_cast<std::size_t>(q)] *= 1e-250;
        }
    }
    double norm = work[0];
    for (int k = 2; k <= start; k += 2) norm += 2.0 * work[static_cast<std::size_t>(k)];
    for (int k = 0; k <= n_max; ++k) j[static_cast<std::size_t>(k)] = work[static_cast<std::size_t>(k)] / norm;
    return j;
}

// J_s(x) from a ladder evaluated at |x|, with the parity maps
// J_{-s}(x) = (-1)^s J_s(x) and J_s(-x) = (-1)^s J_s(x).
double ladder_value(const std::vector<double>& ladder, int s, bool x_negative) {
    const int a = std::abs(s);
    double v = ladder[static_cast<std::size_t>(a)];
    if ((a & 1) != 0) {
        if (s < 0) v = -v;
        if (x_negative) v = -v;
    }
    return v;
}

} // namespace

int f_index(int r, const std::array<int, 2>& j, const std::array<int, 2>& k,
            const std::array<int, 2>& theta) {
    if (r < 1) throw std::invalid_argument("f_index: r must be >= 1");
    return r * ((theta[0] * j[0] + theta[1] * j[1]) - (theta[0] * k[0] + theta[1] * k[1]));
}

double phase_diff(const NetworkSpec& spec, int j, int k) {
    return site_phase(spec, j) - site_phase(spec, k);
}

std::vector<double> bessel_j_ladder(int n_max, double x) {
    if (n_max < 0) throw std::invalid_argument("bessel_j_ladder: negative order");
    if (std::abs(x) > kMaxArg) throw std::out_of_range("bessel_j_ladder: argument out of validated range");
    return bessel_ladder_core(n_max, std::abs(x));
}

double bessel_j(int s, double x) {
    if (std::abs(s) > kMaxOrder) throw std::out_of_range("bessel_j: order out of validated range");
    if (std::abs(x) > kMaxArg) throw std::out_of_range("bessel_j: argument out of validated range");
    const auto ladder = bessel_ladder_core(std::abs(s), std::abs(x));
    return ladder_value(ladder, s, x < 0.0);
}

Complex bessel_F(int chi, double xi, double zeta, double theta, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("bessel_F: tolerance must be > 0");
    if (std::abs(xi) > kMaxArg || std::abs(zeta) > kMaxArg) {
        throw std::out_of_range("bessel_F: argument out of validated range");
    }
    const double arg_max = std::max(std::abs(xi), std::abs(zeta));
    int trunc = static_cast<int>(std::ceil(arg_max)) + 30;

    while (true) {
        if (trunc > kMaxSeries) {
            throw std::runtime_error("bessel_F: truncation tail bound not reached");
        }
        const int order_max = trunc + std::abs(chi);
        const auto jxi = bessel_ladder_core(order_max, std::abs(xi));
        const auto jzeta = bessel_ladder_core(order_max, std::abs(zeta));

        Complex sum{0.0, 0.0};
        double boundary = 0.0; // outermost 10 term magnitudes on each side
        for (int s = -trunc; s <= trunc; ++s) {
            const double amp = ladder_value(jxi, s, xi < 0.0) *
                               ladder_value(jzeta, s + chi, zeta < 0.0);
            const double phase = (s + 0.5 * chi) * theta;
            sum += amp * Complex(std::cos(phase), std::sin(phase));
            if (std::abs(s) > trunc - 10) boundary += std::abs(amp);
        }
        // Terms fall off superexponentially past the turning point, so the
        // dropped tail is below the boundary block.
        if (boundary < tol) return sum;
        trunc += 20;
    }
}

EffectiveCoupling effective_coupling(const NetworkSpec& spec, int j, int k) {
    if (j < 1 || j > spec.size() || k < 1 || k > spec.size() || j == k) {
        throw std::out_of_range("effective_coupling: invalid pair");
    }
    const auto& sj = spec.sites[static_cast<std::size_t>(j - 1)];
    const auto& sk = spec.sites[static_cast<std::size_t>(k - 1)];

    EffectiveCoupling ec;
    ec.j = j;
    ec.k = k;
    ec.chi = f_index(spec.drive.r, sj.coord, sk.coord, {spec.drive.theta1, spec.drive.theta2});
    ec.delta_phi = phase_diff(spec, j, k);

    const double eta = spec.drive.eta_d;
    const Complex f_val = bessel_F(ec.chi, eta, eta, ec.delta_phi);
    const double phase = -0.5 * ec.chi * (site_phase(spec, j) + site_phase(spec, k));
    ec.tau = spec.hopping(j - 1, k - 1) * f_val * Complex(std::cos(phase), std::sin(phase));
    return ec;
}

ComplexMatrix rwa_hamiltonian(const NetworkSpec& spec) {
    const int n = spec.size();
    ComplexMatrix h = ComplexMatrix::Zero(spec.dim(), spec.dim());
    for (int j = 1; j <= n; ++j) {
        for (int k = j + 1; k <= n; ++k) {
            if (spec.hopping(j - 1, k - 1) == 0.0) continue;
            const Complex tau = effective_coupling(spec, j, k).tau;
            const ComplexMatrix hop =
                site_operator(n, j, sigma_plus()) * site_operator(n, k, sigma_minus());
            h += tau * hop + std::conj(tau) * hop.adjoint();
        }
    }
    return h;
}

RealMatrix suppression_map(const NetworkSpec& spec, int j, int k,
                           const std::vector<double>& eta_grid,
                           const std::vector<double>& dphi_grid) {
    if (eta_grid.empty() || dphi_grid.empty()) {
        throw std::invalid_argument("suppression_map: empty grid");
    }
    const auto& sj = spec.sites.at(static_cast<std::size_t>(j - 1));
    const auto& sk = spec.sites.at(static_cast<std::size_t>(k - 1));
    const int chi =
        f_index(spec.drive.r, sj.coord, sk.coord, {spec.drive.theta1, spec.drive.theta2});

    RealMatrix map(static_cast<Eigen::Index>(eta_grid.size()),
                   static_cast<Eigen::Index>(dphi_grid.size()));
    for (std::size_t a = 0; a < eta_grid.size(); ++a) {
        for (std::size_t b = 0; b < dphi_grid.size(); ++b) {
            map(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
                std::abs(bessel_F(chi, eta_grid[a], eta_grid[a], dphi_grid[b]));
        }
    }
    return map;
}

} // namespace qnet
