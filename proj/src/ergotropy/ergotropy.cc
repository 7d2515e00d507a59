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

#include "jqb/ergotropy/ergotropy.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "jqb/model/hamiltonian.h"

namespace jqb {

std::string_view protocol_name(Protocol p) {
    switch (p) {
        case Protocol::Single:
            return "single";
        case Protocol::Local:
            return "local";
        case Protocol::Global:
            return "global";
        case Protocol::LocalUncorrelated:
            return "local-uncorrelated";
    }
    return "?";
}

Protocol parse_protocol(std::string_view s) {
    if (s == "single" || s == "s") {
        return Protocol::Single;
    }
    if (s == "local" || s == "l") {
        return Protocol::Local;
    }
    if (s == "global" || s == "g") {
        return Protocol::Global;
    }
    if (s == "local-uncorrelated" || s == "u") {
        return Protocol::LocalUncorrelated;
    }
    throw std::invalid_argument("unknown protocol '" + std::string(s) + "'");
}

namespace {

void require_matching(const DensityMatrix &rho, const ComplexMatrix &h) {
    if (h.rows() != rho.dim() || h.cols() != rho.dim()) {
        throw std::invalid_argument("Hamiltonian and state dimensions differ");
    }
}

// Eigenvalues of rho in descending order with matching columns.
EigenDecomposition descending(const EigenDecomposition &e) {
    EigenDecomposition out;
    out.eigenvalues = e.eigenvalues.reverse();
    out.eigenvectors = e.eigenvectors.rowwise().reverse();
    return out;
}

bool is_sigma_z(const ComplexMatrix &h) {
    return h.rows() == 2 && h.cols() == 2 && max_abs(h - pauli(Pauli::Z)) < 1e-12;
}

}  // namespace

PassiveState passive_state(const DensityMatrix &rho, const ComplexMatrix &h) {
    require_matching(rho, h);
    EigenDecomposition er = descending(hermitian_eig(rho.matrix()));
    EigenDecomposition eh = hermitian_eig(h);
    ComplexMatrix pi = ComplexMatrix::Zero(rho.dim(), rho.dim());
    ComplexMatrix u = ComplexMatrix::Zero(rho.dim(), rho.dim());
    for (Eigen::Index k = 0; k < rho.dim(); ++k) {
        double lam = std::max(0.0, er.eigenvalues(k));
        pi += lam * eh.eigenvectors.col(k) * eh.eigenvectors.col(k).adjoint();
        u += eh.eigenvectors.col(k) * er.eigenvectors.col(k).adjoint();
    }
    pi /= pi.trace().real();
    ExtractionUnitary ex{u, Protocol::Global, {}, 0.0};
    return PassiveState{DensityMatrix(pi), std::move(ex)};
}

ErgotropyReport ergotropy(const DensityMatrix &rho, const ComplexMatrix &h) {
    require_matching(rho, h);
    EigenDecomposition er = descending(hermitian_eig(rho.matrix()));
    EigenDecomposition eh = hermitian_eig(h);
    ComplexMatrix overlap = er.eigenvectors.adjoint() * eh.eigenvectors;
    double value = 0;
    for (Eigen::Index j = 0; j < rho.dim(); ++j) {
        for (Eigen::Index k = 0; k < rho.dim(); ++k) {
            double w = std::norm(overlap(j, k)) - (j == k ? 1.0 : 0.0);
            value += er.eigenvalues(j) * eh.eigenvalues(k) * w;
        }
    }
    return ErgotropyReport{value, passive_state(rho, h).state, Protocol::Global};
}

ExtractionUnitary single_qubit_extraction_unitary(const BlochVector &b, double theta) {
    if (std::abs(b.y) > kNumericPolicy.real_state_y) {
        throw std::invalid_argument("closed-form qubit unitary needs a real state, got y = " + std::to_string(b.y));
    }
    ExtractionUnitary ex;
    ex.protocol = Protocol::Single;
    ex.phases = {theta};
    double r = std::hypot(b.x, b.z);
    if (r < kNumericPolicy.maximally_mixed_radius) {
        ex.matrix = identity(2);
        ex.alpha = 0;
        return ex;
    }
    // atan2(-(r+z), x) loses its direction when x and r+z both vanish (the
    // already-passive state). The half-angle form below is the same angle
    // modulo pi, which only flips the sign of U, and stays well conditioned.
    double alpha = 0.5 * std::atan2(-b.x, -b.z);
    if (alpha > 0) {
        alpha -= std::numbers::pi;
    }
    ex.alpha = alpha;
    Complex ep = std::polar(1.0, theta);
    Complex em = std::conj(ep);
    double c = std::cos(alpha);
    double s = std::sin(alpha);
    ex.matrix.resize(2, 2);
    ex.matrix << ep * c, ep * s, -em * s, em * c;
    return ex;
}

ExtractionUnitary qubit_extraction_unitary(const DensityMatrix &rho, const ComplexMatrix &h, double theta) {
    require_matching(rho, h);
    if (rho.dim() != 2) {
        throw std::invalid_argument("qubit_extraction_unitary needs a qubit state");
    }
    BlochVector b = bloch_coordinates(rho);
    if (is_sigma_z(h) && std::abs(b.y) <= kNumericPolicy.real_state_y) {
        return single_qubit_extraction_unitary(b, theta);
    }
    EigenDecomposition er = descending(hermitian_eig(rho.matrix()));
    EigenDecomposition eh = hermitian_eig(h);
    ExtractionUnitary ex;
    ex.protocol = Protocol::Single;
    ex.phases = {theta};
    ex.matrix = std::polar(1.0, -theta) * eh.eigenvectors.col(0) * er.eigenvectors.col(0).adjoint() +
                std::polar(1.0, theta) * eh.eigenvectors.col(1) * er.eigenvectors.col(1).adjoint();
    return ex;
}

LocalExtraction single_ergotropy(const DensityMatrix &rho_ab, const ComplexMatrix &h_a, double theta) {
    if (rho_ab.dim() != 4) {
        throw std::invalid_argument("single_ergotropy needs a two-qubit state");
    }
    DensityMatrix rho_a = partial_trace(rho_ab, Subsystem::A);
    ExtractionUnitary ua = qubit_extraction_unitary(rho_a, h_a, theta);
    ErgotropyReport ra = ergotropy(rho_a, h_a);
    ExtractionUnitary u;
    u.protocol = Protocol::Single;
    u.phases = {theta};
    u.alpha = ua.alpha;
    u.matrix = tensor_product(ua.matrix, identity(2));
    DensityMatrix after = rho_ab.conjugated(u.matrix);
    ErgotropyReport report{ra.value, ra.passive_state, Protocol::Single};
    return LocalExtraction{std::move(report), std::move(after), std::move(u)};
}

LocalExtraction local_ergotropy(const DensityMatrix &rho_ab, const ComplexMatrix &h_a, const ComplexMatrix &h_b,
                                double theta_a, double theta_b) {
    if (rho_ab.dim() != 4) {
        throw std::invalid_argument("local_ergotropy needs a two-qubit state");
    }
    DensityMatrix rho_a = partial_trace(rho_ab, Subsystem::A);
    DensityMatrix rho_b = partial_trace(rho_ab, Subsystem::B);
    ExtractionUnitary ua = qubit_extraction_unitary(rho_a, h_a, theta_a);
    ExtractionUnitary ub = qubit_extraction_unitary(rho_b, h_b, theta_b);
    ErgotropyReport ra = ergotropy(rho_a, h_a);
    ErgotropyReport rb = ergotropy(rho_b, h_b);
    ExtractionUnitary u;
    u.protocol = Protocol::Local;
    u.phases = {theta_a, theta_b};
    u.alpha = ua.alpha;
    u.matrix = tensor_product(ua.matrix, ub.matrix);
    DensityMatrix after = rho_ab.conjugated(u.matrix);
    DensityMatrix pi(tensor_product(ra.passive_state.matrix(), rb.passive_state.matrix()));
    ErgotropyReport report{ra.value + rb.value, std::move(pi), Protocol::Local};
    return LocalExtraction{std::move(report), std::move(after), std::move(u)};
}

ErgotropyReport global_ergotropy(const DensityMatrix &rho, const ComplexMatrix &h0) {
    if (rho.dim() != 4) {
        throw std::invalid_argument("global_ergotropy needs a two-qubit state");
    }
    return ergotropy(rho, h0);
}

double ergotropic_gap(double gamma0, double beta) {
    if (!std::isfinite(beta) || beta <= 0) {
        throw std::invalid_argument("ergotropic_gap needs a finite beta > 0");
    }
    std::array<double, 4> e = spectrum_closed_form(gamma0).ascending();
    double z = 0;
    for (double ek : e) {
        z += std::exp(-beta * (ek - e[0]));
    }
    double occupation_gap = 2.0 * (1.0 - std::exp(-beta * (e[3] - e[0]))) / z;
    BlochVector b = bloch_coordinates(partial_trace(jqb_gibbs_state(gamma0, beta), Subsystem::A));
    return occupation_gap - 2.0 * b.r();
}

ComplexMatrix spin_flip(const ComplexMatrix &rho_ab) {
    ComplexMatrix yy = pauli2(Pauli::Y, Pauli::Y);
    return yy * rho_ab.conjugate() * yy;
}

double binary_entropy(double x) {
    auto term = [](double p) { return p <= 0 ? 0.0 : -p * std::log2(p); };
    return term(x) + term(1.0 - x);
}

EntanglementReport concurrence(const DensityMatrix &rho_ab) {
    if (rho_ab.dim() != 4) {
        throw std::invalid_argument("concurrence needs a two-qubit state");
    }
    ComplexMatrix s = psd_sqrt(rho_ab.matrix());
    ComplexMatrix r = s * spin_flip(rho_ab.matrix()) * s;
    r = 0.5 * (r + r.adjoint()).eval();
    EigenDecomposition e = hermitian_eig(r);
    EntanglementReport out;
    for (int k = 0; k < 4; ++k) {
        out.mu[static_cast<size_t>(k)] = std::sqrt(std::max(0.0, e.eigenvalues(3 - k)));
    }
    out.concurrence = std::max(0.0, out.mu[0] - out.mu[1] - out.mu[2] - out.mu[3]);
    double c = std::min(1.0, out.concurrence);
    out.entanglement_of_formation = binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
    return out;
}

}  // namespace jqb
