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

#include "jqb/core/density_matrix.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace jqb {

DensityMatrix::DensityMatrix(const ComplexMatrix &m, const NumericPolicy &policy) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw std::invalid_argument("DensityMatrix: matrix must be square and non-empty");
    }
    if (hermiticity_residual(m) > policy.density_hermiticity) {
        throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
    }
    ComplexMatrix h = 0.5 * (m + m.adjoint());
    double tr = h.trace().real();
    if (std::abs(tr - 1.0) > policy.density_trace) {
        throw std::invalid_argument("DensityMatrix: trace is " + std::to_string(tr));
    }
    double min_eig = hermitian_eig(h, policy).eigenvalues.minCoeff();
    if (min_eig < -policy.density_psd_slack) {
        throw std::invalid_argument("DensityMatrix: negative eigenvalue " + std::to_string(min_eig));
    }
    m_ = std::move(h);
}

DensityMatrix DensityMatrix::pure(const ComplexVector &psi) {
    ComplexVector n = psi / psi.norm();
    return DensityMatrix(n * n.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index dim) {
    return DensityMatrix(Unchecked{}, identity(dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::project(const ComplexMatrix &m) {
    auto eig = hermitian_eig(0.5 * (m + m.adjoint()));
    RealVector w = eig.eigenvalues.cwiseMax(0.0);
    double total = w.sum();
    if (!(total > 0)) {
        return maximally_mixed(m.rows());
    }
    w /= total;
    ComplexMatrix scaled = eig.eigenvectors;
    for (Eigen::Index k = 0; k < w.size(); ++k) {
        scaled.col(k) *= w(k);
    }
    ComplexMatrix out = scaled * eig.eigenvectors.adjoint();
    out = 0.5 * (out + out.adjoint());
    return DensityMatrix(Unchecked{}, std::move(out));
}

double DensityMatrix::purity() const {
    return (m_ * m_).trace().real();
}

DensityMatrix DensityMatrix::conjugated(const ComplexMatrix &u) const {
    ComplexMatrix out = u * m_ * u.adjoint();
    return DensityMatrix(0.5 * (out + out.adjoint()));
}

double BlochVector::r() const {
    return std::sqrt(x * x + y * y + z * z);
}

DensityMatrix partial_trace(const DensityMatrix &rho, Eigen::Index dim_a, Eigen::Index dim_b, Subsystem keep) {
    if (dim_a <= 0 || dim_b <= 0 || rho.dim() != dim_a * dim_b) {
        throw std::invalid_argument("partial_trace: dimension mismatch");
    }
    const ComplexMatrix &m = rho.matrix();
    if (keep == Subsystem::A) {
        ComplexMatrix out = ComplexMatrix::Zero(dim_a, dim_a);
        for (Eigen::Index i = 0; i < dim_a; ++i) {
            for (Eigen::Index j = 0; j < dim_a; ++j) {
                for (Eigen::Index k = 0; k < dim_b; ++k) {
                    out(i, j) += m(i * dim_b + k, j * dim_b + k);
                }
            }
        }
        return DensityMatrix(out);
    }
    ComplexMatrix out = ComplexMatrix::Zero(dim_b, dim_b);
    for (Eigen::Index i = 0; i < dim_b; ++i) {
        for (Eigen::Index j = 0; j < dim_b; ++j) {
            for (Eigen::Index k = 0; k < dim_a; ++k) {
                out(i, j) += m(k * dim_b + i, k * dim_b + j);
            }
        }
    }
    return DensityMatrix(out);
}

DensityMatrix partial_trace(const DensityMatrix &rho, Subsystem keep) {
    return partial_trace(rho, 2, 2, keep);
}

DensityMatrix gibbs_state(const ComplexMatrix &h, double beta) {
    if (!(beta >= 0) || !std::isfinite(beta)) {
        throw std::invalid_argument("gibbs_state: beta must be finite and >= 0");
    }
    auto eig = hermitian_eig(h);
    double e_min = eig.eigenvalues.minCoeff();
    RealVector w = (-beta * (eig.eigenvalues.array() - e_min)).exp();
    w /= w.sum();
    ComplexMatrix scaled = eig.eigenvectors;
    for (Eigen::Index k = 0; k < w.size(); ++k) {
        scaled.col(k) *= w(k);
    }
    return DensityMatrix(scaled * eig.eigenvectors.adjoint());
}

DensityMatrix ground_state(const ComplexMatrix &h) {
    auto eig = hermitian_eig(h);
    double e0 = eig.eigenvalues(0);
    double tie = kNumericPolicy.eigenvalue_tie * std::max(1.0, max_abs(h));
    Eigen::Index g = 0;
    while (g < eig.eigenvalues.size() && eig.eigenvalues(g) - e0 <= tie) {
        ++g;
    }
    ComplexMatrix block = eig.eigenvectors.leftCols(g);
    return DensityMatrix(block * block.adjoint() / static_cast<double>(g));
}

BlochVector bloch_coordinates(const DensityMatrix &rho) {
    if (rho.dim() != 2) {
        throw std::invalid_argument("bloch_coordinates: state is not a qubit");
    }
    const ComplexMatrix &m = rho.matrix();
    return BlochVector{2.0 * m(1, 0).real(), 2.0 * m(1, 0).imag(), (m(0, 0) - m(1, 1)).real()};
}

double fidelity(const DensityMatrix &rho, const DensityMatrix &sigma) {
    if (rho.dim() != sigma.dim()) {
        throw std::invalid_argument("fidelity: dimension mismatch");
    }
    ComplexMatrix s = psd_sqrt(rho.matrix());
    ComplexMatrix inner = s * sigma.matrix() * s;
    auto eig = hermitian_eig(0.5 * (inner + inner.adjoint()));
    double f = 0;
    for (Eigen::Index k = 0; k < eig.eigenvalues.size(); ++k) {
        f += std::sqrt(std::max(eig.eigenvalues(k), 0.0));
    }
    return std::clamp(f, 0.0, 1.0);
}

}  // namespace jqb
