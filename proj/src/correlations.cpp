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

#include "qnet/correlations.hpp"

#include "qnet/qops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qnet {

namespace {

void check_two_qubit_density(const ComplexMatrix& rho) {
    if (rho.rows() != 4 || rho.cols() != 4) {
        throw std::invalid_argument("correlations: state must be 4x4");
    }
    validate_density(rho);
}

ComplexMatrix sqrt_psd(const ComplexMatrix& m) {
    const EigResult eig = hermitian_eig(m);
    RealVector d = eig.values;
    for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = std::sqrt(std::max(d(i), 0.0));
    return eig.vectors * d.asDiagonal() * eig.vectors.adjoint();
}

double entropy_2x2(const ComplexMatrix& m) {
    const double tr = (m(0, 0) + m(1, 1)).real();
    const double det = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real();
    const double disc = std::sqrt(std::max(0.25 * tr * tr - det, 0.0));
    double s = 0.0;
    for (double lambda : {0.5 * tr + disc, 0.5 * tr - disc}) {
        if (lambda > 1e-12) s -= lambda * std::log2(lambda);
    }
    return s;
}

struct MeasurementKet {
    Complex g;
    Complex e;
};

// Conditional (unnormalized) state of the unmeasured factor after projecting
// the measured factor onto |n>.
ComplexMatrix conditional_state(const ComplexMatrix& rho, int measured_factor,
                                const MeasurementKet& n) {
    ComplexMatrix out = ComplexMatrix::Zero(2, 2);
    const Complex amp[2] = {n.g, n.e};
    if (measured_factor == 1) {
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                for (int k = 0; k < 2; ++k) {
                    for (int l = 0; l < 2; ++l) {
                        out(k, l) += std::conj(amp[i]) * rho(2 * i + k, 2 * j + l) * amp[j];
                    }
                }
            }
        }
    } else {
        for (int k = 0; k < 2; ++k) {
            for (int l = 0; l < 2; ++l) {
                for (int i = 0; i < 2; ++i) {
                    for (int j = 0; j < 2; ++j) {
                        out(i, j) += std::conj(amp[k]) * rho(2 * i + k, 2 * j + l) * amp[l];
                    }
                }
            }
        }
    }
    return out;
}

} // namespace

double binary_entropy(double p) {
    p = std::clamp(p, 0.0, 1.0);
    double s = 0.0;
    if (p > 1e-12) s -= p * std::log2(p);
    if (1.0 - p > 1e-12) s -= (1.0 - p) * std::log2(1.0 - p);
    return s;
}

double concurrence(const ComplexMatrix& rho) {
    check_two_qubit_density(rho);
    const ComplexMatrix yy = kron(sigma_y(), sigma_y());
    const ComplexMatrix rho_tilde = yy * rho.conjugate() * yy;
    // eigenvalues of rho * rho_tilde via the Hermitian product
    // sqrt(rho) rho_tilde sqrt(rho)
    const ComplexMatrix root = sqrt_psd(rho);
    const EigResult eig = hermitian_eig(root * rho_tilde * root);
    double lambda[4];
    for (int i = 0; i < 4; ++i) {
        lambda[i] = std::sqrt(std::max(eig.values(3 - i), 0.0)); // descending
    }
    return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

double eof(const ComplexMatrix& rho) {
    const double c = std::min(concurrence(rho), 1.0);
    const double x = 0.5 * (1.0 + std::sqrt(std::max(1.0 - c * c, 0.0)));
    return binary_entropy(x);
}

double mutual_information(const ComplexMatrix& rho) {
    check_two_qubit_density(rho);
    const double sa = von_neumann_entropy(partial_trace(rho, {1}));
    const double sb = von_neumann_entropy(partial_trace(rho, {2}));
    return sa + sb - von_neumann_entropy(rho);
}

double classical_correlation(const ComplexMatrix& rho, int measured_factor,
                             double theta, double phi) {
    if (measured_factor != 1 && measured_factor != 2) {
        throw std::invalid_argument("classical_correlation: factor must be 1 or 2");
    }
    const int other = 3 - measured_factor;
    const double s_other = entropy_2x2(partial_trace(rho, {other}));

    const Complex eip(std::cos(phi), std::sin(phi));
    const MeasurementKet up{std::cos(0.5 * theta), eip * std::sin(0.5 * theta)};
    const MeasurementKet down{std::sin(0.5 * theta), -eip * std::cos(0.5 * theta)};

    double cond = 0.0;
    for (const auto& ket : {up, down}) {
        const ComplexMatrix unnorm = conditional_state(rho, measured_factor, ket);
        const double p = (unnorm(0, 0) + unnorm(1, 1)).real();
        if (p < 1e-14) continue;
        cond += p * entropy_2x2(unnorm / p);
    }
    return s_other - cond;
}

DiscordResult discord_detailed(const ComplexMatrix& rho, int measured_factor) {
    check_two_qubit_density(rho);
    const double info = mutual_information(rho);

    constexpr int kThetaGrid = 64;
    constexpr int kPhiGrid = 32;
    double best = -1e300;
    double best_theta = 0.0, best_phi = 0.0;
    for (int i = 0; i < kThetaGrid; ++i) {
        const double theta = M_PI * static_cast<double>(i) / (kThetaGrid - 1);
        for (int j = 0; j < kPhiGrid; ++j) {
            const double phi = 2.0 * M_PI * static_cast<double>(j) / kPhiGrid;
            const double v = classical_correlation(rho, measured_factor, theta, phi);
            if (v > best) {
                best = v;
                best_theta = theta;
                best_phi = phi;
            }
        }
    }

    // Pattern refinement around the best grid point.
    double step_t = M_PI / (kThetaGrid - 1);
    double step_p = 2.0 * M_PI / kPhiGrid;
    bool converged = false;
    for (int iter = 0; iter < 400; ++iter) {
        double cand_best = best;
        double cand_theta = best_theta, cand_phi = best_phi;
        const double trial[4][2] = {{best_theta + step_t, best_phi},
                                    {best_theta - step_t, best_phi},
                                    {best_theta, best_phi + step_p},
                                    {best_theta, best_phi - step_p}};
        for (const auto& tp : trial) {
            const double th = std::clamp(tp[0], 0.0, M_PI);
            const double v = classical_correlation(rho, measured_factor, th, tp[1]);
            if (v > cand_best) {
                cand_best = v;
                cand_theta = th;
                cand_phi = tp[1];
            }
        }
        if (cand_best > best) {
            const double gain = cand_best - best;
            best = cand_best;
            best_theta = cand_theta;
            best_phi = cand_phi;
            if (gain < 1e-7 && step_t < 1e-4 && step_p < 1e-4) {
                converged = true;
                break;
            }
        } else {
            step_t *= 0.5;
            step_p *= 0.5;
            if (step_t < 1e-7 && step_p < 1e-7) {
                converged = true;
                break;
            }
        }
    }

    DiscordResult res;
    res.pre_clamp = info - best;
    res.value = std::max(res.pre_clamp, 0.0);
    res.converged = converged;
    return res;
}

double discord(const ComplexMatrix& rho, int measured_factor) {
    return discord_detailed(rho, measured_factor).value;
}

std::vector<CorrelationSample> correlation_series(const Trajectory& traj, int stride) {
    if (traj.reduced_pair.empty()) {
        throw std::invalid_argument("correlation_series: trajectory has no reduced pair states");
    }
    if (stride < 1) throw std::invalid_argument("correlation_series: stride must be >= 1");
    std::vector<CorrelationSample> out;
    for (std::size_t i = 0; i < traj.reduced_pair.size(); i += static_cast<std::size_t>(stride)) {
        const ComplexMatrix& rho = traj.reduced_pair[i];
        CorrelationSample s;
        s.ct = traj.ct(i);
        s.eof = eof(rho);
        s.discord_2 = discord(rho, 1);
        s.discord_4 = discord(rho, 2);
        s.mutual_info = mutual_information(rho);
        out.push_back(s);
    }
    return out;
}

CorrelationSample time_average(const std::vector<CorrelationSample>& series,
                               double horizon_ct) {
    if (series.empty()) throw std::invalid_argument("time_average: empty series");
    if (series.size() == 1) return series.front();
    if (series.back().ct < horizon_ct - 1e-9) {
        throw std::invalid_argument("time_average: series does not span the horizon");
    }
    CorrelationSample acc;
    double span = 0.0;
    for (std::size_t i = 1; i < series.size(); ++i) {
        if (series[i - 1].ct > horizon_ct + 1e-12) break;
        const double dt = std::min(series[i].ct, horizon_ct) - series[i - 1].ct;
        if (dt <= 0.0) continue;
        // linear interpolation is not needed on a uniform grid; the horizon is
        // expected to land on a sample
        acc.eof += 0.5 * dt * (series[i].eof + series[i - 1].eof);
        acc.discord_2 += 0.5 * dt * (series[i].discord_2 + series[i - 1].discord_2);
        acc.discord_4 += 0.5 * dt * (series[i].discord_4 + series[i - 1].discord_4);
        acc.mutual_info += 0.5 * dt * (series[i].mutual_info + series[i - 1].mutual_info);
        span += dt;
    }
    if (span <= 0.0) throw std::invalid_argument("time_average: empty span");
    acc.ct = horizon_ct;
    acc.eof /= span;
    acc.discord_2 /= span;
    acc.discord_4 /= span;
    acc.mutual_info /= span;
    return acc;
}

} // namespace qnet
