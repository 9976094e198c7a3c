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

// Test-only reference implementations, kept independent of the library code
// paths they are used to check.

#pragma once

#include "qnet/types.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace qnet::oracle {

// Plain truncated Taylor series for the matrix exponential; adequate for
// moderate norms when given enough terms.
inline ComplexMatrix taylor_expm(const ComplexMatrix& m, int terms = 80) {
    ComplexMatrix acc = ComplexMatrix::Identity(m.rows(), m.cols());
    ComplexMatrix power = acc;
    for (int k = 1; k <= terms; ++k) {
        power = power * m / static_cast<double>(k);
        acc += power;
    }
    return acc;
}

// Power series sum_k (-1)^k (x/2)^{s+2k} / (k! (s+k)!) for J_s(x), s >= 0.
// Accurate for small arguments where no cancellation occurs.
inline double bessel_series(int s, double x, int terms = 60) {
    const double half = 0.5 * x;
    double acc = 0.0;
    double term = 1.0;
    for (int q = 1; q <= s; ++q) term *= half / q; // (x/2)^s / s!
    for (int k = 0; k < terms; ++k) {
        acc += term;
        term *= -half * half / ((k + 1.0) * (s + k + 1.0));
    }
    return acc;
}

// Cyclic Jacobi eigenvalues of a Hermitian matrix (independent of Eigen).
inline std::vector<double> jacobi_eigenvalues(ComplexMatrix a, int sweeps = 60) {
    const auto n = a.rows();
    for (int sweep = 0; sweep < sweeps; ++sweep) {
        double off = 0.0;
        for (Eigen::Index p = 0; p < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) off += std::norm(a(p, q));
        }
        if (off < 1e-30) break;
        for (Eigen::Index p = 0; p < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                // unitary 2x2 rotation annihilating a(p,q)
                const double tau = (aqq - app) / (2.0 * std::abs(apq));
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex phase = apq / std::abs(apq);
                ComplexVector row_p = a.row(p), row_q = a.row(q);
                a.row(p) = c * row_p.transpose() - s * std::conj(phase) * row_q.transpose();
                a.row(q) = s * phase * row_p.transpose() + c * row_q.transpose();
                ComplexVector col_p = a.col(p), col_q = a.col(q);
                a.col(p) = c * col_p - s * phase * col_q;
                a.col(q) = s * std::conj(phase) * col_p + c * col_q;
            }
        }
    }
    std::vector<double> vals;
    for (Eigen::Index i = 0; i < n; ++i) vals.push_back(a(i, i).real());
    return vals;
}

// Deterministic pseudo-random Hermitian matrix with entries of order 1.
inline ComplexMatrix random_hermitian(Eigen::Index n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    ComplexMatrix a(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) a(i, j) = Complex(dist(rng), dist(rng));
    }
    return 0.5 * (a + a.adjoint());
}

// Deterministic pseudo-random density matrix.
inline ComplexMatrix random_density(Eigen::Index n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    ComplexMatrix g(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) g(i, j) = Complex(dist(rng), dist(rng));
    }
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return rho;
}

} // namespace qnet::oracle
