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

#include "qnet/lindblad.hpp"

#include "qnet/qops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qnet {

namespace {
constexpr int kStepsPerPeriod = 128;
constexpr double kPositivityTol = 1e-8;
} // namespace

void DissipatorSpec::validate(int n_sites) const {
    if (gamma_s < 0.0 || gamma_d < 0.0) {
        throw std::invalid_argument("dissipators: rates must be >= 0");
    }
    for (double g : gamma_deph) {
        if (g < 0.0) throw std::invalid_argument("dissipators: dephasing rates must be >= 0");
    }
    if (!gamma_deph.empty() && static_cast<int>(gamma_deph.size()) != n_sites) {
        throw std::invalid_argument("dissipators: dephasing list must have one rate per site");
    }
    if (gamma_s > 0.0 && (source_site < 1 || source_site > n_sites)) {
        throw std::invalid_argument("dissipators: source site out of range");
    }
    if (gamma_d > 0.0 && (drain_site < 1 || drain_site > n_sites)) {
        throw std::invalid_argument("dissipators: drain site out of range");
    }
    if (gamma_s > 0.0 && gamma_d > 0.0 && source_site == drain_site) {
        throw std::invalid_argument("dissipators: source and drain must differ");
    }
}

void IntegratorSpec::validate() const {
    if (method == IntegratorMethod::FixedRk4) {
        if (dt < 0.0) throw std::invalid_argument("integrator: dt must be >= 0");
    } else {
        if (rel_tol <= 0.0 || abs_tol <= 0.0) {
            throw std::invalid_argument("integrator: adaptive tolerances must be > 0");
        }
    }
    if (record_every < 1) throw std::invalid_argument("integrator: record_every must be >= 1");
}

MasterEquation::MasterEquation(const NetworkSpec& net, const DissipatorSpec& dis) {
    net.validate();
    n_sites_ = net.size();
    dis.validate(n_sites_);
    dim_ = net.dim();
    eta_omega_ = net.drive.eta_d * net.drive.omega_d;
    omega_d_ = net.drive.omega_d;

    phases_.resize(static_cast<std::size_t>(n_sites_));
    for (int j = 1; j <= n_sites_; ++j) phases_[static_cast<std::size_t>(j - 1)] = site_phase(net, j);

    const ComplexMatrix hc = hopping_hamiltonian(net);
    for (Eigen::Index a = 0; a < dim_; ++a) {
        for (Eigen::Index b = 0; b < dim_; ++b) {
            if (std::abs(hc(a, b)) > 0.0) hopping_.push_back({a, b, hc(a, b)});
        }
    }

    occupancy_.assign(static_cast<std::size_t>(n_sites_), RealVector::Zero(dim_));
    for (int j = 1; j <= n_sites_; ++j) {
        for (Eigen::Index i = 0; i < dim_; ++i) {
            occupancy_[static_cast<std::size_t>(j - 1)](i) =
                static_cast<double>(site_bit(static_cast<std::size_t>(i), n_sites_, j));
        }
    }

    static_energy_ = RealVector::Zero(dim_);
    for (int j = 1; j <= n_sites_; ++j) {
        const double e = net.sites[static_cast<std::size_t>(j - 1)].omega + ladder_offset(net, j);
        static_energy_ += e * occupancy_[static_cast<std::size_t>(j - 1)];
    }

    pump2_ = 2.0 * dis.gamma_s;
    drain2_ = 2.0 * dis.gamma_d;
    if (dis.gamma_s > 0.0) source_bit_ = std::size_t{1} << (n_sites_ - dis.source_site);
    if (dis.gamma_d > 0.0) drain_bit_ = std::size_t{1} << (n_sites_ - dis.drain_site);

    decay_mask_ = RealMatrix::Zero(dim_, dim_);
    for (Eigen::Index i = 0; i < dim_; ++i) {
        for (Eigen::Index j = 0; j < dim_; ++j) {
            double m = 0.0;
            if (dis.gamma_s > 0.0) {
                const RealVector& src = occupancy_[static_cast<std::size_t>(dis.source_site - 1)];
                m -= dis.gamma_s * ((1.0 - src(i)) + (1.0 - src(j)));
            }
            if (dis.gamma_d > 0.0) {
                const RealVector& drn = occupancy_[static_cast<std::size_t>(dis.drain_site - 1)];
                m -= dis.gamma_d * (drn(i) + drn(j));
            }
            for (std::size_t k = 0; k < dis.gamma_deph.size(); ++k) {
                const double ni = occupancy_[k](i);
                const double nj = occupancy_[k](j);
                m += dis.gamma_deph[k] * (2.0 * ni * nj - ni - nj);
            }
            decay_mask_(i, j) = m;
        }
    }
}

void MasterEquation::apply(double t, const ComplexMatrix& rho, ComplexMatrix& out) const {
    if (rho.rows() != dim_ || rho.cols() != dim_) {
        throw std::invalid_argument("master_rhs: dimension mismatch");
    }
    out.resize(dim_, dim_);
    out.setZero();

    // -i [H_c, rho] from the stored nonzeros
    for (const auto& tr : hopping_) {
        const Complex w = kImag * tr.value;
        out.row(tr.row) -= w * rho.row(tr.col);
        out.col(tr.col) += w * rho.col(tr.row);
    }

    // instantaneous on-site energies per basis state
    RealVector diag = static_energy_;
    if (eta_omega_ != 0.0) {
        for (std::size_t j = 0; j < occupancy_.size(); ++j) {
            diag += (eta_omega_ * std::cos(omega_d_ * t + phases_[j])) * occupancy_[j];
        }
    }

    // -i (d_i - d_j) rho_ij plus the elementwise dissipator mask
    for (Eigen::Index j = 0; j < dim_; ++j) {
        for (Eigen::Index i = 0; i < dim_; ++i) {
            out(i, j) += Complex(decay_mask_(i, j), diag(j) - diag(i)) * rho(i, j);
        }
    }

    // pump sandwich: 2 Gamma_s sigma^+ rho sigma^-
    if (pump2_ != 0.0) {
        for (Eigen::Index j = 0; j < dim_; ++j) {
            if ((static_cast<std::size_t>(j) & source_bit_) != 0) continue;
            for (Eigen::Index i = 0; i < dim_; ++i) {
                if ((static_cast<std::size_t>(i) & source_bit_) != 0) continue;
                out(i + static_cast<Eigen::Index>(source_bit_),
                    j + static_cast<Eigen::Index>(source_bit_)) += pump2_ * rho(i, j);
            }
        }
    }

    // drain sandwich: 2 Gamma_d sigma^- rho sigma^+
    if (drain2_ != 0.0) {
        for (Eigen::Index j = 0; j < dim_; ++j) {
            if ((static_cast<std::size_t>(j) & drain_bit_) == 0) continue;
            for (Eigen::Index i = 0; i < dim_; ++i) {
                if ((static_cast<std::size_t>(i) & drain_bit_) == 0) continue;
                out(i - static_cast<Eigen::Index>(drain_bit_),
                    j - static_cast<Eigen::Index>(drain_bit_)) += drain2_ * rho(i, j);
            }
        }
    }
}

ComplexMatrix master_rhs(const ComplexMatrix& rho, double t, const NetworkSpec& net,
                         const DissipatorSpec& dis) {
    MasterEquation eq(net, dis);
    ComplexMatrix out;
    eq.apply(t, rho, out);
    return out;
}

double default_step(const NetworkSpec& net) {
    double omega_site = 0.0;
    double ladder = 0.0;
    for (int j = 1; j <= net.size(); ++j) {
        omega_site = std::max(omega_site, net.sites[static_cast<std::size_t>(j - 1)].omega);
        ladder = std::max(ladder, ladder_offset(net, j));
    }
    const double omega_max = omega_site + ladder + std::abs(net.drive.eta_d * net.drive.omega_d);
    const double period = 2.0 * M_PI / omega_max;
    return period / kStepsPerPeriod;
}

namespace {

class Recorder {
public:
    Recorder(Trajectory& traj, const MasterEquation& eq, const RecordOptions& opts, int n_sites)
        : traj_(traj), opts_(opts), n_sites_(n_sites) {
        record_pair_ = opts.record_pair && opts.pair_sites[0] >= 1 &&
                       opts.pair_sites[1] >= 1 && opts.pair_sites[0] <= n_sites &&
                       opts.pair_sites[1] <= n_sites &&
                       opts.pair_sites[0] != opts.pair_sites[1];
        (void)eq;
    }

    void operator()(double t, const ComplexMatrix& rho, double herm_res) {
        traj_.times.push_back(t);
        RealVector pops(n_sites_);
        for (int j = 1; j <= n_sites_; ++j) {
            double p = 0.0;
            for (Eigen::Index i = 0; i < rho.rows(); ++i) {
                if (site_bit(static_cast<std::size_t>(i), n_sites_, j) != 0) p += rho(i, i).real();
            }
            pops(j - 1) = p;
            if (p < -kPositivityTol || p > 1.0 + kPositivityTol) {
                throw PositivityError("evolve: population outside [0, 1] beyond tolerance");
            }
        }
        traj_.populations.push_back(std::move(pops));
        traj_.trace_drift.push_back(std::abs(rho.trace() - Complex(1.0, 0.0)));
        traj_.herm_residual.push_back(herm_res);
        const double lam = min_eigenvalue(rho);
        if (lam < -kPositivityTol) {
            throw PositivityError("evolve: density matrix lost positivity beyond tolerance");
        }
        traj_.min_eig.push_back(lam);
        if (record_pair_) {
            traj_.reduced_pair.push_back(
                partial_trace(rho, {opts_.pair_sites[0], opts_.pair_sites[1]}));
        }
        if (opts_.record_full) traj_.states.push_back(rho);
    }

private:
    Trajectory& traj_;
    RecordOptions opts_;
    int n_sites_;
    bool record_pair_ = false;
};

void symmetrize(ComplexMatrix& rho, ComplexMatrix& tmp) {
    tmp = rho.adjoint();
    rho = 0.5 * (rho + tmp);
}

// Dormand-Prince 5(4) coefficients.
struct Dopri {
    static constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
    static constexpr double a21 = 1.0 / 5.0;
    static constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
    static constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
    static constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                            a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
    static constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                            a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
    static constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                            b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
    static constexpr double e1 = 35.0 / 384.0 - 5179.0 / 57600.0;
    static constexpr double e3 = 500.0 / 1113.0 - 7571.0 / 16695.0;
    static constexpr double e4 = 125.0 / 192.0 - 393.0 / 640.0;
    static constexpr double e5 = -2187.0 / 6784.0 + 92097.0 / 339200.0;
    static constexpr double e6 = 11.0 / 84.0 - 187.0 / 2100.0;
    static constexpr double e7 = -1.0 / 40.0;
};

} // namespace

Trajectory evolve(const ComplexMatrix& rho0, const NetworkSpec& net,
                  const DissipatorSpec& dis, const IntegratorSpec& integ,
                  double t_end, const RecordOptions& opts) {
    if (t_end <= 0.0) throw std::invalid_argument("evolve: t_end must be > 0");
    integ.validate();
    validate_density(rho0);
    MasterEquation eq(net, dis);
    if (rho0.rows() != eq.dim()) throw std::invalid_argument("evolve: state dimension mismatch");

    const double dt_target = (integ.dt > 0.0) ? integ.dt : default_step(net);
    const auto n_steps = static_cast<long>(std::ceil(t_end / dt_target - 1e-12));
    const double h = t_end / static_cast<double>(std::max<long>(n_steps, 1));
    const long rec_every = integ.record_every;

    Trajectory traj;
    const double c_ref = net.reference_hopping();
    traj.time_scale = (c_ref > 0.0) ? c_ref : 1.0;
    Recorder record(traj, eq, opts, net.size());

    ComplexMatrix rho = rho0;
    ComplexMatrix tmp(eq.dim(), eq.dim());
    record(0.0, rho, hermiticity_residual(rho));

    if (integ.method == IntegratorMethod::FixedRk4) {
        ComplexMatrix k1, k2, k3, k4, stage(eq.dim(), eq.dim());
        for (long s = 0; s < n_steps; ++s) {
            const double t = static_cast<double>(s) * h;
            eq.apply(t, rho, k1);
            stage = rho + (0.5 * h) * k1;
            eq.apply(t + 0.5 * h, stage, k2);
            stage = rho + (0.5 * h) * k2;
            eq.apply(t + 0.5 * h, stage, k3);
            stage = rho + h * k3;
            eq.apply(t + h, stage, k4);
            rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            const double herm = hermiticity_residual(rho);
            symmetrize(rho, tmp);
            if ((s + 1) % rec_every == 0 || s + 1 == n_steps) {
                record(static_cast<double>(s + 1) * h, rho, herm);
            }
        }
        return traj;
    }

    // Adaptive RK45 on the same record grid as the fixed-step method.
    std::vector<double> record_times;
    for (long s = rec_every; s < n_steps; s += rec_every) {
        record_times.push_back(static_cast<double>(s) * h);
    }
    record_times.push_back(t_end);

    ComplexMatrix k1, k2, k3, k4, k5, k6, k7, ynew, yerr, stage(eq.dim(), eq.dim());
    double t = 0.0;
    double hs = h;
    bool have_k1 = false;
    for (double t_rec : record_times) {
        while (t < t_rec - 1e-13 * t_end) {
            hs = std::min(hs, t_rec - t);
            if (hs < 1e-14 * t_end) {
                throw StepUnderflowError("evolve: adaptive step size underflow");
            }
            if (!have_k1) eq.apply(t, rho, k1);
            stage = rho + hs * (Dopri::a21 * k1);
            eq.apply(t + Dopri::c2 * hs, stage, k2);
            stage = rho + hs * (Dopri::a31 * k1 + Dopri::a32 * k2);
            eq.apply(t + Dopri::c3 * hs, stage, k3);
            stage = rho + hs * (Dopri::a41 * k1 + Dopri::a42 * k2 + Dopri::a43 * k3);
            eq.apply(t + Dopri::c4 * hs, stage, k4);
            stage = rho + hs * (Dopri::a51 * k1 + Dopri::a52 * k2 + Dopri::a53 * k3 +
                                Dopri::a54 * k4);
            eq.apply(t + Dopri::c5 * hs, stage, k5);
            stage = rho + hs * (Dopri::a61 * k1 + Dopri::a62 * k2 + Dopri::a63 * k3 +
                                Dopri::a64 * k4 + Dopri::a65 * k5);
            eq.apply(t + hs, stage, k6);
            ynew = rho + hs * (Dopri::b1 * k1 + Dopri::b3 * k3 + Dopri::b4 * k4 +
                               Dopri::b5 * k5 + Dopri::b6 * k6);
            eq.apply(t + hs, ynew, k7);
            yerr = hs * (Dopri::e1 * k1 + Dopri::e3 * k3 + Dopri::e4 * k4 + Dopri::e5 * k5 +
                         Dopri::e6 * k6 + Dopri::e7 * k7);

            double err = 0.0;
            for (Eigen::Index jj = 0; jj < yerr.cols(); ++jj) {
                for (Eigen::Index ii = 0; ii < yerr.rows(); ++ii) {
                    const double scale =
                        integ.abs_tol +
                        integ.rel_tol * std::max(std::abs(rho(ii, jj)), std::abs(ynew(ii, jj)));
                    err = std::max(err, std::abs(yerr(ii, jj)) / scale);
                }
            }
            if (err <= 1.0) {
                t += hs;
                rho = ynew;
                const double herm = hermiticity_residual(rho);
                symmetrize(rho, tmp);
                k1 = k7; // FSAL
                have_k1 = true;
                if (std::abs(t - t_rec) <= 1e-13 * t_end) record(t, rho, herm);
            } else {
                have_k1 = false;
            }
            const double factor =
                std::clamp(0.9 * std::pow(std::max(err, 1e-12), -0.2), 0.2, 5.0);
            hs *= factor;
        }
    }
    return traj;
}

ComplexMatrix liouvillian_matrix(const NetworkSpec& net, const DissipatorSpec& dis, double t) {
    net.validate();
    const int n = net.size();
    dis.validate(n);
    const Eigen::Index d = net.dim();
    const ComplexMatrix id = ComplexMatrix::Identity(d, d);
    const ComplexMatrix h = hamiltonian(net, t);

    // column-major vec: vec(A rho B) = (B^T kron A) vec(rho)
    auto sandwich = [&](const ComplexMatrix& a, const ComplexMatrix& b) {
        return kron(b.transpose(), a);
    };
    auto left = [&](const ComplexMatrix& a) { return kron(id, a); };
    auto right = [&](const ComplexMatrix& b) { return kron(b.transpose(), id); };

    ComplexMatrix liou = -kImag * (left(h) - right(h));

    if (dis.gamma_s > 0.0) {
        const ComplexMatrix sp = site_operator(n, dis.source_site, sigma_plus());
        const ComplexMatrix sm = site_operator(n, dis.source_site, sigma_minus());
        liou += dis.gamma_s * (2.0 * sandwich(sp, sm) - left(sm * sp) - right(sm * sp));
    }
    if (dis.gamma_d > 0.0) {
        const ComplexMatrix dp = site_operator(n, dis.drain_site, sigma_plus());
        const ComplexMatrix dm = site_operator(n, dis.drain_site, sigma_minus());
        liou += dis.gamma_d * (2.0 * sandwich(dm, dp) - left(dp * dm) - right(dp * dm));
    }

    for (std::size_t k = 0; k < dis.gamma_deph.size(); ++k) {
        const ComplexMatrix nk =
            site_operator(n, static_cast<int>(k) + 1, sigma_plus() * sigma_minus());
        liou += dis.gamma_deph[k] * (2.0 * sandwich(nk, nk) - left(nk) - right(nk));
    }
    return liou;
}

} // namespace qnet
