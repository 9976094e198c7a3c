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

#include "qnet/qops.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace qnet {

ComplexMatrix identity2() { return ComplexMatrix::Identity(2, 2); }

ComplexMatrix sigma_x() {
    ComplexMatrix m(2, 2);
    m << 0.0, 1.0,
         1.0, 0.0;
    return m;
}

ComplexMatrix sigma_y() {
    ComplexMatrix m(2, 2);
    m << 0.0, Complex(0.0, -1.0),
         Complex(0.0, 1.0), 0.0;
    return m;
}

ComplexMatrix sigma_z() {
    ComplexMatrix m(2, 2);
    m << 1.0, 0.0,
         0.0, -1.0;
    return m;
}

ComplexMatrix sigma_plus() {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(1, 0) = 1.0;
    return m;
}

ComplexMatrix sigma_minus() {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 1) = 1.0;
    return m;
}

ComplexVector basis_ket(int n_sites, std::size_t idx) {
    const std::size_t dim = std::size_t{1} << n_sites;
    if (idx >= dim) throw std::out_of_range("basis_ket: index out of range");
    ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(idx)) = 1.0;
    return v;
}

ComplexMatrix number_operator(int n_sites) {
    const auto dim = Eigen::Index{1} << n_sites;
    ComplexMatrix n = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        int occ = 0;
        for (int s = 1; s <= n_sites; ++s) occ += site_bit(static_cast<std::size_t>(i), n_sites, s);
        n(i, i) = static_cast<double>(occ);
    }
    return n;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix site_operator(int n_sites, int site, const ComplexMatrix& local) {
    if (site < 1 || site > n_sites) throw std::out_of_range("site_operator: site out of range");
    if (local.rows() != 2 || local.cols() != 2) {
        throw std::invalid_argument("site_operator: local operator must be 2x2");
    }
    ComplexMatrix out = (site == 1) ? local : identity2();
    for (int s = 2; s <= n_sites; ++s) {
        out = kron(out, (s == site) ? local : identity2());
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const std::vector<int>& keep) {
    if (rho.rows() != rho.cols()) throw std::invalid_argument("partial_trace: rho must be square");
    int n_sites = 0;
    while ((Eigen::Index{1} << n_sites) < rho.rows()) ++n_sites;
    if ((Eigen::Index{1} << n_sites) != rho.rows()) {
        throw std::invalid_argument("partial_trace: dimension is not a power of two");
    }
    if (keep.empty()) throw std::invalid_argument("partial_trace: keep list is empty");
    std::set<int> seen;
    for (int s : keep) {
        if (s < 1 || s > n_sites) throw std::invalid_argument("partial_trace: site out of range");
        if (!seen.insert(s).second) throw std::invalid_argument("partial_trace: duplicate site");
    }
    std::vector<int> traced;
    for (int s = 1; s <= n_sites; ++s) {
        if (seen.count(s) == 0) traced.push_back(s);
    }

    const int k = static_cast<int>(keep.size());
    const int m = n_sites - k;
    const std::size_t dim_out = std::size_t{1} << k;
    const std::size_t dim_tr = std::size_t{1} << m;

    // full-register index assembled from a kept sub-index and a traced sub-index
    auto full_index = [&](std::size_t a, std::size_t t) {
        std::size_t idx = 0;
        for (int q = 0; q < k; ++q) {
            const std::size_t bit = (a >> (k - 1 - q)) & 1U;
            idx |= bit << (n_sites - keep[static_cast<std::size_t>(q)]);
        }
        for (int q = 0; q < m; ++q) {
            const std::size_t bit = (t >> (m - 1 - q)) & 1U;
            idx |= bit << (n_sites - traced[static_cast<std::size_t>(q)]);
        }
        return static_cast<Eigen::Index>(idx);
    };

    ComplexMatrix out = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim_out),
                                            static_cast<Eigen::Index>(dim_out));
    for (std::size_t a = 0; a < dim_out; ++a) {
        for (std::size_t b = 0; b < dim_out; ++b) {
            Complex sum{0.0, 0.0};
            for (std::size_t t = 0; t < dim_tr; ++t) {
                sum += rho(full_index(a, t), full_index(b, t));
            }
            out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = sum;
        }
    }
    return out;
}

EigResult hermitian_eig(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("hermitian_eig: matrix must be square");
    if (hermiticity_residual(m) > 1e-10) {
        throw std::invalid_argument("hermitian_eig: matrix is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (m + m.adjoint()));
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_eig: eigendecomposition failed");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix expm(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("expm: matrix must be square");
    const Eigen::Index n = m.rows();
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);

    // 1-norm (max column sum) drives the scaling choice
    double norm1 = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) norm1 = std::max(norm1, m.col(j).cwiseAbs().sum());

    constexpr double theta13 = 5.371920351148152;
    int squarings = 0;
    if (norm1 > theta13) {
        squarings = static_cast<int>(std::ceil(std::log2(norm1 / theta13)));
    }
    const ComplexMatrix a = m / std::pow(2.0, squarings);

    static const double b[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                               1187353796428800.0,  129060195264000.0,   10559470521600.0,
                               670442572800.0,      33522128640.0,       1323241920.0,
                               40840800.0,          960960.0,            16380.0,
                               182.0,               1.0};

    const ComplexMatrix a2 = a * a;
    const ComplexMatrix a4 = a2 * a2;
    const ComplexMatrix a6 = a4 * a2;
    const ComplexMatrix u = a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) +
                                 b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
    const ComplexMatrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) +
                            b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;

    ComplexMatrix r = (v - u).partialPivLu().solve(v + u);
    for (int s = 0; s < squarings; ++s) r = r * r;
    return r;
}

double von_neumann_entropy(const ComplexMatrix& rho) {
    const EigResult eig = hermitian_eig(rho);
    double s = 0.0;
    for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
        const double lambda = eig.values(i);
        if (lambda < -1e-8) {
            throw std::invalid_argument("von_neumann_entropy: negative eigenvalue");
        }
        if (lambda < 1e-12) continue;
        s -= lambda * std::log2(lambda);
    }
    return s;
}

double hermiticity_residual(const ComplexMatrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
    return m.rows() == m.cols() && hermiticity_residual(m) <= tol;
}

double min_eigenvalue(const ComplexMatrix& m) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (m + m.adjoint()),
                                                        Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

void validate_density(const ComplexMatrix& rho) {
    if (rho.rows() != rho.cols()) throw std::invalid_argument("density: matrix must be square");
    if (hermiticity_residual(rho) > 1e-10) {
        throw std::invalid_argument("density: matrix is not Hermitian");
    }
    if (std::abs(rho.trace().real() - 1.0) > 1e-8 || std::abs(rho.trace().imag()) > 1e-8) {
        throw std::invalid_argument("density: trace is not 1");
    }
    if (min_eigenvalue(rho) < -1e-8) {
        throw std::invalid_argument("density: negative eigenvalue");
    }
}

} // namespace qnet
