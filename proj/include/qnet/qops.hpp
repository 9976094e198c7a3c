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

// Dense complex operator algebra on small qubit registers: tensor products,
// embedded site operators, partial traces, Hermitian eigendecomposition,
// matrix exponential, entropies.
//
// Basis convention: |g> = 0, |e> = 1; a register index is read with site 1
// as the most significant bit, so |eggg> = 8 on four sites.

#pragma once

#include "qnet/types.hpp"

#include <vector>

namespace qnet {

// --------------------------- 2x2 building blocks ---------------------------

ComplexMatrix identity2();
ComplexMatrix sigma_x();
ComplexMatrix sigma_y();
ComplexMatrix sigma_z();
ComplexMatrix sigma_plus();  // |e><g|
ComplexMatrix sigma_minus(); // |g><e|

// --------------------------- Register helpers ------------------------------

// Occupation bit of 1-based `site` in basis index `idx` on `n_sites` qubits.
inline int site_bit(std::size_t idx, int n_sites, int site) {
    return static_cast<int>((idx >> (n_sites - site)) & 1U);
}

// |idx> on an n-qubit register.
ComplexVector basis_ket(int n_sites, std::size_t idx);

// Total excitation number operator sum_j sigma_j^+ sigma_j^-.
ComplexMatrix number_operator(int n_sites);

// --------------------------- Core operations -------------------------------

// (a (x) b)[(i*db+k),(j*db+l)] = a[i,j] * b[k,l]; first factor most significant.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// I (x) ... (x) local (x) ... (x) I with `local` at 1-based factor `site`.
ComplexMatrix site_operator(int n_sites, int site, const ComplexMatrix& local);

// Reduced state on the kept sites (1-based, order as listed in `keep`).
ComplexMatrix partial_trace(const ComplexMatrix& rho, const std::vector<int>& keep);

struct EigResult {
    RealVector values;      // ascending
    ComplexMatrix vectors;  // orthonormal columns
};

// Eigendecomposition of a Hermitian matrix; throws if max|m - m^dag| > 1e-10.
EigResult hermitian_eig(const ComplexMatrix& m);

// Matrix exponential by scaling-and-squaring with a degree-13 Pade approximant.
ComplexMatrix expm(const ComplexMatrix& m);

// -sum_i lambda_i log2 lambda_i with eigenvalues below 1e-12 treated as zero.
// Throws if an eigenvalue falls below -1e-8.
double von_neumann_entropy(const ComplexMatrix& rho);

// --------------------------- Checks and diagnostics ------------------------

double hermiticity_residual(const ComplexMatrix& m); // max |m - m^dag|
bool is_hermitian(const ComplexMatrix& m, double tol = 1e-12);
double min_eigenvalue(const ComplexMatrix& m);

// Throws std::invalid_argument unless rho is Hermitian (1e-10), unit trace
// (1e-8) and has min eigenvalue >= -1e-8.
void validate_density(const ComplexMatrix& rho);

} // namespace qnet
