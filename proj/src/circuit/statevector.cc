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

#include "jqb/circuit/statevector.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace jqb {

StateVector::StateVector(int num_qubits) : n_(num_qubits) {
    if (num_qubits < 1 || num_qubits > 20) {
        throw std::invalid_argument("unsupported qubit count " + std::to_string(num_qubits));
    }
    amp_ = ComplexVector::Zero(Eigen::Index{1} << num_qubits);
    amp_(0) = 1;
}

StateVector::StateVector(int num_qubits, ComplexVector amplitudes) : n_(num_qubits), amp_(std::move(amplitudes)) {
    if (num_qubits < 1 || num_qubits > 20 || amp_.size() != (Eigen::Index{1} << num_qubits)) {
        throw std::invalid_argument("amplitude count does not match qubit count");
    }
    if (std::abs(amp_.norm() - 1.0) > 1e-12) {
        throw std::invalid_argument("state vector is not normalized");
    }
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(static_cast<size_t>(amp_.size()));
    for (Eigen::Index i = 0; i < amp_.size(); ++i) {
        p[static_cast<size_t>(i)] = std::norm(amp_(i));
    }
    return p;
}

int GateOp::arity() const {
    switch (kind) {
        case GateKind::Hadamard:
        case GateKind::RotX:
        case GateKind::RotY:
        case GateKind::RotZ:
            return 1;
        default:
            return 2;
    }
}

GateOp GateOp::h(int q) {
    return {GateKind::Hadamard, {q, q}, 0};
}
GateOp GateOp::cnot(int control, int target) {
    return {GateKind::CNOT, {control, target}, 0};
}
GateOp GateOp::rx(int q, double t) {
    return {GateKind::RotX, {q, q}, t};
}
GateOp GateOp::ry(int q, double t) {
    return {GateKind::RotY, {q, q}, t};
}
GateOp GateOp::rz(int q, double t) {
    return {GateKind::RotZ, {q, q}, t};
}
GateOp GateOp::rxx(int q0, int q1, double t) {
    return {GateKind::RotXX, {q0, q1}, t};
}
GateOp GateOp::ryy(int q0, int q1, double t) {
    return {GateKind::RotYY, {q0, q1}, t};
}
GateOp GateOp::rzz(int q0, int q1, double t) {
    return {GateKind::RotZZ, {q0, q1}, t};
}

namespace {

ComplexMatrix rotation(const ComplexMatrix &generator, double t) {
    const Complex i(0, 1);
    return std::cos(t / 2) * identity(generator.rows()) - i * std::sin(t / 2) * generator;
}

void check_target(int q, int n) {
    if (q < 0 || q >= n) {
        throw std::invalid_argument("gate target " + std::to_string(q) + " out of range for " + std::to_string(n) +
                                    " qubits");
    }
}

}  // namespace

ComplexMatrix gate_matrix(const GateOp &gate) {
    switch (gate.kind) {
        case GateKind::Hadamard:
            return (pauli(Pauli::X) + pauli(Pauli::Z)) / std::sqrt(2.0);
        case GateKind::CNOT: {
            ComplexMatrix m = ComplexMatrix::Zero(4, 4);
            m(0, 0) = 1;
            m(1, 1) = 1;
            m(2, 3) = 1;
            m(3, 2) = 1;
            return m;
        }
        case GateKind::RotX:
            return rotation(pauli(Pauli::X), gate.angle);
        case GateKind::RotY:
            return rotation(pauli(Pauli::Y), gate.angle);
        case GateKind::RotZ:
            return rotation(pauli(Pauli::Z), gate.angle);
        case GateKind::RotXX:
            return rotation(pauli2(Pauli::X, Pauli::X), gate.angle);
        case GateKind::RotYY:
            return rotation(pauli2(Pauli::Y, Pauli::Y), gate.angle);
        case GateKind::RotZZ:
            return rotation(pauli2(Pauli::Z, Pauli::Z), gate.angle);
    }
    throw std::invalid_argument("unknown gate kind");
}

void apply_1q(StateVector &psi, int q, const ComplexMatrix &m) {
    check_target(q, psi.num_qubits());
    ComplexVector &a = psi.mutable_amplitudes();
    Eigen::Index bit = Eigen::Index{1} << q;
    Complex m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (i & bit) {
            continue;
        }
        Complex v0 = a(i);
        Complex v1 = a(i | bit);
        a(i) = m00 * v0 + m01 * v1;
        a(i | bit) = m10 * v0 + m11 * v1;
    }
}

void apply_2q(StateVector &psi, int q0, int q1, const ComplexMatrix &m) {
    check_target(q0, psi.num_qubits());
    check_target(q1, psi.num_qubits());
    if (q0 == q1) {
        throw std::invalid_argument("two-qubit gate on a repeated target");
    }
    ComplexVector &a = psi.mutable_amplitudes();
    Eigen::Index b0 = Eigen::Index{1} << q0;
    Eigen::Index b1 = Eigen::Index{1} << q1;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if ((i & b0) || (i & b1)) {
            continue;
        }
        const Eigen::Index idx[4] = {i, i | b1, i | b0, i | b0 | b1};
        Complex v[4];
        for (int k = 0; k < 4; ++k) {
            v[k] = a(idx[k]);
        }
        for (int r = 0; r < 4; ++r) {
            Complex s = 0;
            for (int c = 0; c < 4; ++c) {
                s += m(r, c) * v[c];
            }
            a(idx[r]) = s;
        }
    }
}

void apply_gate(StateVector &psi, const GateOp &gate) {
    if (gate.arity() == 1) {
        apply_1q(psi, gate.targets[0], gate_matrix(gate));
    } else {
        apply_2q(psi, gate.targets[0], gate.targets[1], gate_matrix(gate));
    }
}

StateVector run_circuit(const Circuit &circuit, int num_qubits) {
    StateVector psi(num_qubits);
    for (const GateOp &g : circuit) {
        apply_gate(psi, g);
    }
    return psi;
}

ComplexMatrix circuit_unitary(const Circuit &circuit, int num_qubits) {
    Eigen::Index dim = Eigen::Index{1} << num_qubits;
    ComplexMatrix u(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        ComplexVector e = ComplexVector::Zero(dim);
        e(c) = 1;
        StateVector psi(num_qubits, e);
        for (const GateOp &g : circuit) {
            apply_gate(psi, g);
        }
        u.col(c) = psi.amplitudes();
    }
    return u;
}

DensityMatrix reduced_system_state(const StateVector &psi) {
    if (psi.num_qubits() != kTfdQubits) {
        throw std::invalid_argument("reduced_system_state needs the four-qubit TFD register");
    }
    const ComplexVector &a = psi.amplitudes();
    ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
    // Row/column index 2a + b matches the two-qubit Kronecker convention.
    for (int anc = 0; anc < 4; ++anc) {
        for (int r = 0; r < 4; ++r) {
            int ra = r >> 1, rb = r & 1;
            Complex vr = a(ra + 2 * rb + 4 * anc);
            for (int c = 0; c < 4; ++c) {
                int ca = c >> 1, cb = c & 1;
                rho(r, c) += vr * std::conj(a(ca + 2 * cb + 4 * anc));
            }
        }
    }
    return DensityMatrix(rho);
}

}  // namespace jqb
