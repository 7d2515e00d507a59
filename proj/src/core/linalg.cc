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

#include "jqb/core/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace jqb {

ComplexMatrix pauli(Pauli p) {
    using namespace std::complex_literals;
    ComplexMatrix m(2, 2);
    switch (p) {
        case Pauli::I:
            m << 1.0, 0.0, 0.0, 1.0;
            break;
        case Pauli::X:
            m << 0.0, 1.0, 1.0, 0.0;
            break;
        case Pauli::Y:
            m << 0.0, -1.0i, 1.0i, 0.0;
            break;
        case Pauli::Z:
            m << 1.0, 0.0, 0.0, -1.0;
            break;
    }
    return m;
}

ComplexMatrix pauli2(Pauli a, Pauli b) {
    return tensor_product(pauli(a), pauli(b));
}

ComplexMatrix identity(Eigen::Index dim) {
    return ComplexMatrix::Identity(dim, dim);
}

ComplexMatrix tensor_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

double max_abs(const ComplexMatrix &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_residual(const ComplexMatrix &m) {
    return max_abs(m - m.adjoint());
}

namespace {

double off_diagonal_norm2(const ComplexMatrix &a) {
    double s = 0;
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            if (i != j) {
                s += std::norm(a(i, j));
            }
        }
    }
    return s;
}

// Zeroes a(p,q) with a unitary rotation J acting on columns/rows p and q:
// A <- J^dagger A J, V <- V J.
void jacobi_rotate(ComplexMatrix &a, ComplexMatrix &v, Eigen::Index p, Eigen::Index q) {
    Complex apq = a(p, q);
    double g = std::abs(apq);
    if (g == 0.0) {
        return;
    }
    Complex d = std::conj(apq) / g;  // a(p,q) * d is real and positive.
    double app = a(p, p).real();
    double aqq = a(q, q).real();
    double tau = (aqq - app) / (2.0 * g);
    double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    double c = 1.0 / std::sqrt(1.0 + t * t);
    double s = t * c;

    // J = [[c, s], [-s d, c d]] restricted to (p, q).
    Complex jpp = c;
    Complex jpq = s;
    Complex jqp = -s * d;
    Complex jqq = c * d;

    Eigen::Index n = a.rows();
    for (Eigen::Index k = 0; k < n; ++k) {
        Complex akp = a(k, p);
        Complex akq = a(k, q);
        a(k, p) = akp * jpp + akq * jqp;
        a(k, q) = akp * jpq + akq * jqq;
    }
    for (Eigen::Index k = 0; k < n; ++k) {
        Complex apk = a(p, k);
        Complex aqk = a(q, k);
        a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
        a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
    for (Eigen::Index k = 0; k < n; ++k) {
        Complex vkp = v(k, p);
        Complex vkq = v(k, q);
        v(k, p) = vkp * jpp + vkq * jqp;
        v(k, q) = vkp * jpq + vkq * jqq;
    }
}

Eigen::Index dominant_index(const ComplexMatrix &v, Eigen::Index col) {
    Eigen::Index best = 0;
    double best_mag = -1;
    for (Eigen::Index i = 0; i < v.rows(); ++i) {
        // Strictly greater keeps the lowest index on near-equal magnitudes.
        double mag = std::abs(v(i, col));
        if (mag > best_mag * (1.0 + 1e-9)) {
            best_mag = mag;
            best = i;
        }
    }
    return best;
}

}  // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix &h, const NumericPolicy &policy) {
    if (h.rows() != h.cols()) {
        throw std::invalid_argument("hermitian_eig: matrix is not square");
    }
    double scale = std::max(1.0, max_abs(h));
    if (hermiticity_residual(h) > policy.eig_input_hermiticity * scale) {
        throw std::invalid_argument("hermitian_eig: matrix is not Hermitian");
    }
    Eigen::Index n = h.rows();
    ComplexMatrix a = 0.5 * (h + h.adjoint());
    ComplexMatrix v = ComplexMatrix::Identity(n, n);

    double frob2 = a.squaredNorm();
    double target = policy.jacobi_relative_offdiag * policy.jacobi_relative_offdiag * frob2;
    for (int sweep = 0; sweep < policy.jacobi_max_sweeps; ++sweep) {
        if (off_diagonal_norm2(a) <= target) {
            break;
        }
        for (Eigen::Index p = 0; p < n - 1; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                jacobi_rotate(a, v, p, q);
            }
        }
    }

    std::vector<Eigen::Index> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::vector<Eigen::Index> dominant(static_cast<size_t>(n));
    for (Eigen::Index k = 0; k < n; ++k) {
        dominant[static_cast<size_t>(k)] = dominant_index(v, k);
    }
    double tie = policy.eigenvalue_tie * scale;
    std::sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
        return a(i, i).real() < a(j, j).real();
    });
    // Reorder runs of near-equal eigenvalues by dominant basis index.
    for (size_t start = 0; start < order.size();) {
        size_t end = start + 1;
        while (end < order.size() && a(order[end], order[end]).real() - a(order[end - 1], order[end - 1]).real() <= tie) {
            ++end;
        }
        std::stable_sort(order.begin() + static_cast<std::ptrdiff_t>(start),
                         order.begin() + static_cast<std::ptrdiff_t>(end),
                         [&](Eigen::Index i, Eigen::Index j) {
                             return dominant[static_cast<size_t>(i)] < dominant[static_cast<size_t>(j)];
                         });
        start = end;
    }

    EigenDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index src = order[static_cast<size_t>(k)];
        out.eigenvalues(k) = a(src, src).real();
        ComplexVector col = v.col(src);
        col /= col.norm();
        Complex lead = col(dominant[static_cast<size_t>(src)]);
        col *= std::conj(lead) / std::abs(lead);
        out.eigenvectors.col(k) = col;
    }
    return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix &m) {
    return hermitian_eig(m).apply([](double x) { return std::sqrt(std::max(x, 0.0)); });
}

double expectation(const ComplexMatrix &op, const ComplexMatrix &rho) {
    return (op * rho).trace().real();
}

}  // namespace jqb
