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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qnet/lindblad.hpp"
#include "qnet/metrics.hpp"
#include "qnet/qops.hpp"

#include <cmath>

using namespace qnet;

namespace {

NetworkSpec single_site() {
    NetworkSpec net;
    net.sites = {{1, {0, 0}, 1.0}};
    net.hopping = RealMatrix::Zero(1, 1);
    return net;
}

NetworkSpec two_site_resonant(double c) {
    NetworkSpec net;
    net.sites = {{1, {0, 0}, 1.0}, {2, {1, 0}, 1.0}};
    net.drive = {}; // no drive, no ladder: resonant pair
    net.hopping = RealMatrix::Zero(2, 2);
    net.hopping(0, 1) = net.hopping(1, 0) = c;
    return net;
}

NetworkSpec fig3_network(double drive_axis) {
    NetworkSpec net = four_site_default();
    net.drive.eta_d = drive_axis * net.reference_hopping() / net.drive.omega_d;
    return net;
}

DissipatorSpec no_rates(int n) {
    DissipatorSpec dis;
    dis.gamma_deph.assign(static_cast<std::size_t>(n), 0.0);
    dis.drain_site = std::min(3, n);
    return dis;
}

DissipatorSpec fig3_dissipators(double gamma_over_c) {
    DissipatorSpec dis;
    dis.gamma_d = 1e-4;
    dis.gamma_s = 2e-4;
    dis.gamma_deph.assign(4, gamma_over_c * 0.01);
    return dis;
}

ComplexMatrix vec_to_matrix(const ComplexVector& v, Eigen::Index d) {
    ComplexMatrix m(d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index i = 0; i < d; ++i) m(i, j) = v(j * d + i);
    }
    return m;
}

ComplexVector matrix_to_vec(const ComplexMatrix& m) {
    ComplexVector v(m.size());
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) v(j * m.rows() + i) = m(i, j);
    }
    return v;
}

} // namespace

TEST_CASE("ground state with all rates zero is stationary") {
    const NetworkSpec net = four_site_default();
    ComplexMatrix rho = ComplexMatrix::Zero(16, 16);
    rho(0, 0) = 1.0;
    const ComplexMatrix d = master_rhs(rho, 0.0, net, no_rates(4));
    CHECK(d.cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("master equation is trace free") {
    const NetworkSpec net = fig3_network(38.8);
    DissipatorSpec dis = fig3_dissipators(0.1);
    for (unsigned seed : {1u, 2u, 3u, 4u}) {
        const ComplexMatrix rho = oracle::random_density(16, seed);
        const ComplexMatrix d = master_rhs(rho, 0.7, net, dis);
        CHECK(std::abs(d.trace()) < 1e-12);
        CHECK(hermiticity_residual(d) < 1e-12);
    }
}

TEST_CASE("pure dephasing: coherence decays at gamma, populations frozen") {
    // closed-form single-qubit solution of the printed dephasing superoperator:
    // d rho_ge / dt = -gamma rho_ge, d rho_gg / dt = d rho_ee / dt = 0
    const double gamma = 0.37;
    NetworkSpec net = single_site();
    DissipatorSpec dis;
    dis.gamma_deph = {gamma};
    dis.source_site = 1;
    dis.drain_site = 1; // unused at zero rate

    ComplexMatrix rho(2, 2);
    rho << 0.5, 0.5,
           0.5, 0.5; // (|g> + |e>)/sqrt(2)
    const ComplexMatrix d = master_rhs(rho, 0.0, net, dis);
    CHECK(std::abs(d(0, 0)) < 1e-14);
    CHECK(std::abs(d(1, 1)) < 1e-14);
    // the Hamiltonian part rotates the coherence; the decay part is -gamma
    CHECK(d(0, 1).real() == doctest::Approx(-gamma * 0.5).epsilon(1e-12));

    // and integrated: |rho_ge(t)| = 0.5 exp(-gamma t)
    IntegratorSpec integ;
    integ.dt = 1e-3;
    integ.record_every = 1000;
    RecordOptions opts;
    opts.record_pair = false;
    opts.record_full = true;
    const Trajectory traj = evolve(rho, net, dis, integ, 2.0, opts);
    const double expect = 0.5 * std::exp(-gamma * 2.0);
    CHECK(std::abs(traj.states.back()(0, 1)) == doctest::Approx(expect).epsilon(1e-8));
    CHECK(traj.states.back()(1, 1).real() == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("resonant pair Rabi-flops the excitation at rate c") {
    const double c = 0.01;
    const NetworkSpec net = two_site_resonant(c);
    ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
    rho(2, 2) = 1.0; // |eg>
    IntegratorSpec integ;
    integ.record_every = 64;
    const double t_end = M_PI / (2.0 * c);
    const Trajectory traj = evolve(rho, net, no_rates(2), integ, t_end);
    CHECK(traj.populations.back()(1) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(traj.populations.back()(0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-6));
    // reported ct of the full transfer is pi/2
    CHECK(traj.ct(traj.size() - 1) == doctest::Approx(M_PI / 2.0).epsilon(1e-12));
}

TEST_CASE("lone pump fills the source site at rate 2 Gamma_s") {
    NetworkSpec net = four_site_default();
    net.hopping.setZero();
    DissipatorSpec dis = no_rates(4);
    dis.gamma_s = 3e-4;
    ComplexMatrix rho = ComplexMatrix::Zero(16, 16);
    rho(0, 0) = 1.0;
    IntegratorSpec integ;
    integ.record_every = 50;
    const Trajectory traj = evolve(rho, net, dis, integ, 2000.0);
    for (std::size_t i = 0; i < traj.size(); ++i) {
        const double expect = 1.0 - std::exp(-2.0 * dis.gamma_s * traj.times[i]);
        CHECK(std::abs(traj.populations[i](0) - expect) < 1e-8);
    }
}

TEST_CASE("liouvillian matrix reproduces the right-hand side") {
    const NetworkSpec net = fig3_network(25.0);
    const DissipatorSpec dis = fig3_dissipators(0.1);
    const double t = 3.1;
    const ComplexMatrix liou = liouvillian_matrix(net, dis, t);
    for (unsigned seed = 0; seed < 16; ++seed) {
        const ComplexMatrix rho = oracle::random_density(16, 100 + seed);
        const ComplexMatrix direct = master_rhs(rho, t, net, dis);
        const ComplexMatrix via_vec = vec_to_matrix(liou * matrix_to_vec(rho), 16);
        CHECK((direct - via_vec).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("liouvillian with nothing switched on is zero") {
    NetworkSpec net = four_site_default();
    net.hopping.setZero();
    for (auto& s : net.sites) s.omega = 0.0;
    net.drive.eta_d = 0.0;
    net.drive.omega_d = 0.0;
    net.drive.delta_omega = 0.0;
    const ComplexMatrix liou = liouvillian_matrix(net, no_rates(4), 0.0);
    CHECK(liou.cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("frozen liouvillian spectrum sits in the closed left half plane") {
    const NetworkSpec net = fig3_network(18.0);
    const DissipatorSpec dis = fig3_dissipators(0.1);
    const ComplexMatrix liou = liouvillian_matrix(net, dis, 0.0);
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(liou);
    REQUIRE(solver.info() == Eigen::Success);
    double max_real = -1e300;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        max_real = std::max(max_real, solver.eigenvalues()(i).real());
    }
    CHECK(max_real <= 1e-10);
}

TEST_CASE("evolve matches the exponentiated liouvillian for a static drive") {
    NetworkSpec net = four_site_default();
    net.drive.eta_d = 0.0; // time-independent Hamiltonian
    const DissipatorSpec dis = fig3_dissipators(0.1);
    DissipatorSpec d2 = dis;

    ComplexMatrix rho0 = ComplexMatrix::Zero(16, 16);
    rho0(4, 4) = 0.5;
    rho0(1, 1) = 0.5;
    rho0(4, 1) = 0.5;
    rho0(1, 4) = 0.5; // entangled pair preparation

    const double t_end = 20.0; // ct = 0.2
    IntegratorSpec integ;
    integ.record_every = 1 << 20; // only the end point
    RecordOptions opts;
    opts.record_full = true;
    const Trajectory traj = evolve(rho0, net, d2, integ, t_end, opts);

    const ComplexMatrix liou = liouvillian_matrix(net, dis, 0.0);
    const ComplexMatrix prop = expm(liou * t_end);
    const ComplexMatrix ref = vec_to_matrix(prop * matrix_to_vec(rho0), 16);
    CHECK((traj.states.back() - ref).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("trajectory diagnostics stay within tolerance on a driven run") {
    const NetworkSpec net = fig3_network(38.8);
    const DissipatorSpec dis = fig3_dissipators(0.1);
    ComplexMatrix rho0 = ComplexMatrix::Zero(16, 16);
    rho0(4, 4) = 0.5;
    rho0(1, 1) = 0.5;
    rho0(4, 1) = 0.5;
    rho0(1, 4) = 0.5;
    IntegratorSpec integ;
    integ.record_every = 100;
    const Trajectory traj = evolve(rho0, net, dis, integ, 1000.0); // ct = 10
    REQUIRE(traj.size() > 10);
    for (std::size_t i = 0; i < traj.size(); ++i) {
        CHECK(traj.trace_drift[i] < 1e-8);
        CHECK(traj.herm_residual[i] < 1e-10);
        CHECK(traj.min_eig[i] > -1e-8);
        double total = 0.0;
        for (Eigen::Index j = 0; j < 4; ++j) {
            CHECK(traj.populations[i](j) > -1e-8);
            CHECK(traj.populations[i](j) < 1.0 + 1e-8);
            total += traj.populations[i](j);
        }
        CHECK(total <= 4.0 + 1e-8);
    }
    CHECK(traj.reduced_pair.size() == traj.size());
}

TEST_CASE("total excitation never grows without a pump") {
    const NetworkSpec net = fig3_network(18.0);
    DissipatorSpec dis = fig3_dissipators(1.0);
    dis.gamma_s = 0.0;
    ComplexMatrix rho0 = ComplexMatrix::Zero(16, 16);
    rho0(4, 4) = 0.5;
    rho0(1, 1) = 0.5;
    rho0(4, 1) = 0.5;
    rho0(1, 4) = 0.5;
    IntegratorSpec integ;
    integ.record_every = 200;
    const Trajectory traj = evolve(rho0, net, dis, integ, 500.0);
    double prev = 1e300;
    for (std::size_t i = 0; i < traj.size(); ++i) {
        const double total = traj.populations[i].sum();
        CHECK(total <= prev + 1e-9);
        prev = total;
    }
}

TEST_CASE("fixed-step and adaptive integration agree at the horizon") {
    const NetworkSpec net = fig3_network(38.8);
    const DissipatorSpec dis = fig3_dissipators(0.1);
    ComplexMatrix rho0 = ComplexMatrix::Zero(16, 16);
    rho0(4, 4) = 0.5;
    rho0(1, 1) = 0.5;
    rho0(4, 1) = 0.5;
    rho0(1, 4) = 0.5;

    IntegratorSpec fixed;
    fixed.record_every = 1 << 20;
    const Trajectory a = evolve(rho0, net, dis, fixed, 1000.0);

    IntegratorSpec adaptive;
    adaptive.method = IntegratorMethod::AdaptiveRk45;
    adaptive.rel_tol = 1e-8;
    adaptive.abs_tol = 1e-10;
    adaptive.record_every = 1 << 20;
    const Trajectory b = evolve(rho0, net, dis, adaptive, 1000.0);

    REQUIRE(a.times.back() == doctest::Approx(b.times.back()).epsilon(1e-12));
    for (Eigen::Index j = 0; j < 4; ++j) {
        CHECK(std::abs(a.populations.back()(j) - b.populations.back()(j)) < 1e-6);
    }
}

TEST_CASE("specs reject invalid parameters") {
    DissipatorSpec dis;
    dis.gamma_s = -1.0;
    CHECK_THROWS_AS(dis.validate(4), std::invalid_argument);

    DissipatorSpec same;
    same.gamma_s = 1.0;
    same.gamma_d = 1.0;
    same.drain_site = 1;
    CHECK_THROWS_AS(same.validate(4), std::invalid_argument);

    IntegratorSpec bad;
    bad.record_every = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    IntegratorSpec neg;
    neg.method = IntegratorMethod::AdaptiveRk45;
    neg.rel_tol = 0.0;
    CHECK_THROWS_AS(neg.validate(), std::invalid_argument);

    const NetworkSpec net = four_site_default();
    const ComplexMatrix rho = oracle::random_density(16, 3);
    CHECK_THROWS_AS(evolve(rho, net, no_rates(4), IntegratorSpec{}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(master_rhs(oracle::random_density(8, 3), 0.0, net, no_rates(4)),
                    std::invalid_argument);
}
