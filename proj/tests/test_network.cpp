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

#include "qnet/network.hpp"
#include "qnet/qops.hpp"

#include <cmath>

using namespace qnet;

namespace {

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

} // namespace

TEST_CASE("ladder offsets along the x direction") {
    const NetworkSpec net = four_site_default();
    CHECK(ladder_offset(net, 1) == doctest::Approx(0.0));
    CHECK(ladder_offset(net, 2) == doctest::Approx(0.25));
    CHECK(ladder_offset(net, 3) == doctest::Approx(0.25)); // theta2 = 0 kills the i2 term
    CHECK(ladder_offset(net, 4) == doctest::Approx(0.0));

    NetworkSpec tilted = net;
    tilted.drive.theta2 = 1;
    CHECK(ladder_offset(tilted, 3) == doctest::Approx(0.5));
    CHECK_THROWS_AS(ladder_offset(net, 5), std::out_of_range);
}

TEST_CASE("site phases accumulate the coordinate gradients") {
    NetworkSpec net = four_site_default();
    CHECK(site_phase(net, 1) == doctest::Approx(0.0));
    CHECK(site_phase(net, 2) == doctest::Approx(M_PI));
    CHECK(site_phase(net, 3) == doctest::Approx(2.0 * M_PI));
    CHECK(site_phase(net, 4) == doctest::Approx(M_PI));

    net.drive.phi_x = M_PI;
    net.drive.phi_y = 0.0;
    CHECK(site_phase(net, 2) == doctest::Approx(M_PI));
    CHECK(site_phase(net, 3) == doctest::Approx(M_PI));
}

TEST_CASE("onsite coefficient at the preset drive point") {
    NetworkSpec net = four_site_default();
    // rescaled drive strength 38.8 => eta_d * omega_d = 0.388
    net.drive.eta_d = 38.8 * 0.01 / net.drive.omega_d;
    CHECK(onsite_coefficient(net, 1, 0.0) == doctest::Approx(1.388).epsilon(1e-12));

    // site 3 carries phase 2 pi, so the drive term is at full amplitude too
    CHECK(onsite_coefficient(net, 3, 0.0) ==
          doctest::Approx(1.0 + 0.25 + 0.388 * std::cos(2.0 * M_PI)).epsilon(1e-12));

    net.drive.eta_d = 0.0;
    for (double t : {0.0, 1.7, 42.0}) {
        CHECK(onsite_coefficient(net, 2, t) == doctest::Approx(1.25));
    }
}

TEST_CASE("onsite coefficient is periodic in the drive period") {
    NetworkSpec net = four_site_default();
    net.drive.eta_d = 1.3;
    const double period = 2.0 * M_PI / net.drive.omega_d;
    for (double t : {0.3, 5.0, 111.0}) {
        CHECK(std::abs(onsite_coefficient(net, 2, t) - onsite_coefficient(net, 2, t + period)) <
              1e-12);
    }
}

TEST_CASE("hopping Hamiltonian structure") {
    NetworkSpec net = four_site_default();
    net.hopping.setZero();
    CHECK(max_abs(hopping_hamiltonian(net)) == 0.0);

    NetworkSpec two;
    two.sites = {{1, {0, 0}, 1.0}, {2, {1, 0}, 1.0}};
    two.hopping = RealMatrix::Zero(2, 2);
    two.hopping(0, 1) = two.hopping(1, 0) = 0.01;
    const ComplexMatrix h = hopping_hamiltonian(two);
    // single-excitation block in basis {|ge>, |eg>}
    CHECK(std::abs(h(1, 2) - Complex(0.01)) < 1e-15);
    CHECK(std::abs(h(2, 1) - Complex(0.01)) < 1e-15);
    CHECK(std::abs(h(0, 0)) + std::abs(h(3, 3)) < 1e-15);
}

TEST_CASE("Hamiltonian is Hermitian and conserves excitation number") {
    NetworkSpec net = four_site_default();
    net.drive.eta_d = 1.552;
    const ComplexMatrix n_op = number_operator(4);
    for (double t : {0.0, 0.37, 12.9}) {
        const ComplexMatrix h = hamiltonian(net, t);
        CHECK(hermiticity_residual(h) < 1e-13);
        CHECK(max_abs(h * n_op - n_op * h) < 1e-13);
    }
    CHECK(max_abs(hopping_hamiltonian(net) * n_op - n_op * hopping_hamiltonian(net)) < 1e-14);
}

TEST_CASE("diagonal matrix elements match the onsite coefficients") {
    NetworkSpec net = four_site_default();
    net.drive.eta_d = 0.9;
    const ComplexMatrix h = hamiltonian(net, 0.0);
    // <eggg| H(0) |eggg> = onsite coefficient of site 1
    CHECK(h(8, 8).real() == doctest::Approx(onsite_coefficient(net, 1, 0.0)).epsilon(1e-13));
    CHECK(h(8, 8).imag() == doctest::Approx(0.0));
}

TEST_CASE("network validation") {
    NetworkSpec net = four_site_default();
    CHECK(net.validate().empty());
    CHECK(net.reference_hopping() == doctest::Approx(0.01));

    NetworkSpec warn = net;
    warn.hopping = RealMatrix::Constant(4, 4, 0.2);
    warn.hopping.diagonal().setZero();
    CHECK(warn.validate().size() == 1);

    NetworkSpec broken = net;
    broken.hopping(0, 1) = 0.5; // asymmetric
    CHECK_THROWS_AS(broken.validate(), std::invalid_argument);

    NetworkSpec resonance = net;
    resonance.drive.delta_omega = 0.3; // != r * omega_d
    CHECK_THROWS_AS(resonance.validate(), std::invalid_argument);

    NetworkSpec dup = net;
    dup.sites[1].coord = {0, 0};
    CHECK_THROWS_AS(dup.validate(), std::invalid_argument);
}
