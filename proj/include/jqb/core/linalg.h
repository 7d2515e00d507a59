// Copyright 2026 The jqbattery Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef JQB_CORE_LINALG_H
#define JQB_CORE_LINALG_H

#include <complex>

#include <Eigen/Dense>

#include "jqb/core/numeric_policy.h"

namespace jqb {

using Complex = std::complex<double>;

/// Square complex matrix. Two-qubit operators use the Kronecker convention:
/// basis index = 2 * bit_A + bit_B, so |01> means A=0, B=1.
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

enum class Pauli { I, X, Y, Z };

ComplexMatrix pauli(Pauli p);

/// Single-qubit Pauli acting on one factor of a two-qubit space, e.g.
/// pauli2(Pauli::X, Pauli::I) = sigma_A^x.
ComplexMatrix pauli2(Pauli a, Pauli b);

ComplexMatrix identity(Eigen::Index dim);

/// Kronecker product A (x) B.
ComplexMatrix tensor_product(const ComplexMatrix &a, const ComplexMatrix &b);

/// max_ij |m_ij|.
double max_abs(const ComplexMatrix &m);

double hermiticity_residual(const ComplexMatrix &m);

/// Eigenvalues ascending; eigenvectors are the matching columns.
///
/// Ordering is deterministic: eigenvalues closer than the tie tolerance are
/// ordered by the ascending index of their eigenvector's dominant basis
/// component, and each eigenvector is phased so that its dominant component
/// is real and positive.
struct EigenDecomposition {
    RealVector eigenvalues;
    ComplexMatrix eigenvectors;

    /// V diag(f(eigenvalues)) V^dagger.
    template <typename F>
    ComplexMatrix apply(F &&f) const {
        ComplexMatrix scaled = eigenvectors;
        for (Eigen::Index k = 0; k < eigenvalues.size(); ++k) {
            scaled.col(k) *= f(eigenvalues(k));
        }
        return scaled * eigenvectors.adjoint();
    }
};

/// Cyclic complex Jacobi diagonalization of a Hermitian matrix.
/// Throws std::invalid_argument if the input is not square or not Hermitian.
EigenDecomposition hermitian_eig(const ComplexMatrix &h, const NumericPolicy &policy = kNumericPolicy);

/// sqrt of a positive semidefinite matrix; negative eigenvalues clip to zero.
ComplexMatrix psd_sqrt(const ComplexMatrix &m);

/// Tr[op * rho], real part.
double expectation(const ComplexMatrix &op, const ComplexMatrix &rho);

}  // namespace jqb

#endif
