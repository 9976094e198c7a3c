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
#include "qnet/correlations.hpp"
#include "qnet/qops.hpp"
#include "qnet/scenario.hpp"

#include <algorithm>
#include <cmath>

using namespace qnet;

namespace {

ComplexMatrix bell_pair() {
    ComplexVector psi = ComplexVector::Zero(4);
    psi(2) = 1.0 / std::sqrt(2.0); // |eg>
    psi(1) = 1.0 / std::sqrt(2.0); // |ge>
    return psi * psi.adjoint();
}

ComplexMatrix mixed_pair() {
    ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
    rho(2, 2) = 0.5;
    rho(1, 1) = 0.5;
    return rho;
}

ComplexMatrix werner(double p) {
    ComplexVector phi = ComplexVector::Zero(4);
    phi(0) = 1.0 / std::sqrt(2.0); // |gg>
    phi(3) = 1.0 / std::sqrt(2.0); // |ee>
    return p * (phi * phi.adjoint()) + (1.0 - p) / 4.0 * ComplexMatrix::Identity(4, 4);
}

// Test-local classical-correlation objective, written directly from the
// projector algebra rather than through the library's conditional states.
double oracle_classical(const ComplexMatrix& rho, int side, double theta, double phi) {
    ComplexVector n(2);
    n << std::cos(0.5 * theta), std::exp(Complex(0.0, phi)) * std::sin(0.5 * theta);
    ComplexVector m(2);
    m << std::sin(0.5 * theta), -std::exp(Complex(0.0, phi)) * std::cos(0.5 * theta);

    const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
    const ComplexMatrix rho_other = (side == 1) ? partial_trace(rho, {2}) : partial_trace(rho, {1});

    double cond = 0.0;
    for (const ComplexVector& v : {n, m}) {
        const ComplexMatrix proj = v * v.adjoint();
        const ComplexMatrix big = (side == 1) ? kron(proj, id) : kron(id, proj);
        const ComplexMatrix post = big * rho * big;
        const double p = post.trace().real();
        if (p < 1e-14) continue;
        const ComplexMatrix reduced =
            (side == 1) ? partial_trace(post / p, {2}) : partial_trace(post / p, {1});
        const auto vals = oracle::jacobi_eigenvalues(reduced);
        double s = 0.0;
        for (double lambda : vals) {
            if (lambda > 1e-12) s -= lambda * std::log2(lambda);
        }
        cond += p * s;
    }
    const auto vals = oracle::jacobi_eigenvalues(rho_other);
    double s_other = 0.0;
    for (double lambda : vals) {
        if (lambda > 1e-12) s_other -= lambda * std::log2(lambda);
    }
    return s_other - cond;
}

double oracle_discord(const ComplexMatrix& rho, int side) {
    double best = -1e300;
    for (int i = 0; i < 512; ++i) {
        const double theta = M_PI * i / 511.0;
        for (int j = 0; j < 256; ++j) {
            const double phi = 2.0 * M_PI * j / 256.0;
            best = std::max(best, oracle_classical(rho, side, theta, phi));
        }
    }
    return mutual_information(rho) - best;
}

} // namespace

TEST_CASE("concurrence of the canonical states") {
    CHECK(concurrence(bell_pair()) == doctest::Approx(1.0).epsilon(1e-12));

    const ComplexMatrix product = kron(oracle::random_density(2, 3), oracle::random_density(2, 4));
    CHECK(concurrence(product) < 1e-8);

    // Werner state: C = max(0, (3p - 1) / 2)
    CHECK(concurrence(werner(0.6)) == doctest::Approx(0.4).epsilon(1e-10));
    CHECK(concurrence(werner(0.2)) == doctest::Approx(0.0));

    // eigenvalues of the Werner state cross-checked with the Jacobi oracle
    auto vals = oracle::jacobi_eigenvalues(werner(0.6));
    std::sort(vals.begin(), vals.end());
    CHECK(vals[3] == doctest::Approx(0.7).epsilon(1e-10));
    CHECK(vals[0] == doctest::Approx(0.1).epsilon(1e-10));
}

TEST_CASE("entanglement of formation endpoints and midpoint") {
    CHECK(eof(bell_pair()) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(eof(mixed_pair()) == doctest::Approx(0.0));

    // independent scalar evaluation of the C = 0.4 case
    const double x = 0.5 * (1.0 + std::sqrt(1.0 - 0.4 * 0.4));
    const double expect = -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
    CHECK(eof(werner(0.6)) == doctest::Approx(expect).epsilon(1e-10));
}

TEST_CASE("eof is monotone in the concurrence") {
    double prev = -1.0;
    for (double p = 1.0 / 3.0 + 0.01; p <= 1.0; p += 0.05) {
        const double e = eof(werner(p));
        CHECK(e >= prev - 1e-12);
        prev = e;
    }
}

TEST_CASE("discord of the Bell pair is 1 on both sides") {
    CHECK(discord(bell_pair(), 1) == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(discord(bell_pair(), 2) == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(mutual_information(bell_pair()) == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("classically correlated diagonal states carry no discord") {
    CHECK(discord(mixed_pair(), 1) < 1e-7);
    CHECK(discord(mixed_pair(), 2) < 1e-7);
    CHECK(mutual_information(mixed_pair()) == doctest::Approx(1.0).epsilon(1e-10));

    // random state diagonal in a product basis
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> dist(0.05, 1.0);
    double w[4];
    double total = 0.0;
    for (double& v : w) total += (v = dist(rng));
    ComplexMatrix diag = ComplexMatrix::Zero(4, 4);
    for (int i = 0; i < 4; ++i) diag(i, i) = w[i] / total;
    CHECK(discord(diag, 1) < 1e-6);
    CHECK(discord(diag, 2) < 1e-6);
}

TEST_CASE("discord against the dense-grid oracle on the Werner state") {
    const ComplexMatrix w = werner(0.5);
    const double ours = discord(w, 1);
    const double ref = oracle_discord(w, 1);
    CHECK(std::abs(ours - ref) < 1e-4);
    // swap-symmetric state: both measurement sides agree
    CHECK(std::abs(discord(w, 1) - discord(w, 2)) < 1e-6);
}

TEST_CASE("discord stays within its information bounds on random states") {
    for (unsigned seed : {21u, 22u, 23u, 24u, 25u}) {
        const ComplexMatrix rho = oracle::random_density(4, seed);
        const double info = mutual_information(rho);
        for (int side : {1, 2}) {
            const DiscordResult r = discord_detailed(rho, side);
            CHECK(r.value >= 0.0);
            CHECK(r.pre_clamp > -1e-6);
            CHECK(r.value <= info + 1e-9);
            const double s_meas =
                von_neumann_entropy(partial_trace(rho, {side}));
            CHECK(r.value <= std::min(s_meas, info) + 1e-9);
        }
    }
}

TEST_CASE("correlation series on prepared pair states") {
    Trajectory traj;
    traj.time_scale = 0.01;
    traj.times = {0.0, 1.0};
    traj.populations = {RealVector::Zero(4), RealVector::Zero(4)};
    traj.reduced_pair = {bell_pair(), mixed_pair()};

    const auto series = correlation_series(traj);
    REQUIRE(series.size() == 2);
    CHECK(series[0].ct == doctest::Approx(0.0));
    CHECK(series[0].eof == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(series[0].discord_2 == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(series[0].discord_4 == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(series[1].eof == doctest::Approx(0.0));
    CHECK(series[1].discord_2 < 1e-6);
    CHECK(series[1].mutual_info == doctest::Approx(1.0).epsilon(1e-9));

    Trajectory bare;
    bare.times = {0.0};
    CHECK_THROWS_AS(correlation_series(bare), std::invalid_argument);
}

TEST_CASE("time averages of constant and ramp series") {
    std::vector<CorrelationSample> constant;
    for (int i = 0; i <= 10; ++i) constant.push_back({0.1 * i, 0.3, 0.2, 0.2, 0.5});
    const CorrelationSample avg = time_average(constant, 1.0);
    CHECK(avg.eof == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(avg.discord_2 == doctest::Approx(0.2).epsilon(1e-12));

    std::vector<CorrelationSample> ramp;
    for (int i = 0; i <= 1000; ++i) {
        const double x = i / 1000.0;
        ramp.push_back({x, x, x, x, x});
    }
    const CorrelationSample r = time_average(ramp, 1.0);
    CHECK(std::abs(r.eof - 0.5) < 1e-9);
    CHECK(std::abs(r.mutual_info - 0.5) < 1e-9);

    CHECK_THROWS_AS(time_average({}, 1.0), std::invalid_argument);
}

TEST_CASE("strong dephasing damps the quantum correlations of the pair") {
    ScenarioConfig cfg = default_config();
    cfg.network.drive.eta_d = 38.8 * cfg.network.reference_hopping() / cfg.network.drive.omega_d;
    const double c = cfg.network.reference_hopping();
    cfg.dissipators.gamma_deph.assign(4, c); // gamma = c
    cfg.outputs.record_ct = 0.01;
    const Trajectory traj = run_scenario(cfg);
    const auto series = correlation_series(traj, 100);
    const auto& last = series.back();
    CHECK(last.eof < 0.05);
    CHECK(last.discord_2 < 0.05);
    CHECK(last.discord_4 < 0.05);
}
