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

#ifndef JQB_CIRCUIT_STATEVECTOR_H
#define JQB_CIRCUIT_STATEVECTOR_H

#include <array>
#include <vector>

#include "jqb/core/density_matrix.h"

namespace jqb {

// Qubit q is bit q of the amplitude index (little-endian). The TFD register
// uses q = 0, 1, 2, 3 for A, B, A', B', so index = a + 2b + 4a' + 8b'.
inline constexpr int kQubitA = 0;
inline constexpr int kQubitB = 1;
inline constexpr int kQubitAp = 2;
inline constexpr int kQubitBp = 3;
inline constexpr int kTfdQubits = 4;

/// Pure state of n qubits, |psi| = 1.
class StateVector {
   public:
    /// |0...0>.
    explicit StateVector(int num_qubits = kTfdQubits);
    /// Validates the norm to 1e-12 (throws std::invalid_argument).
    StateVector(int num_qubits, ComplexVector amplitudes);

    int num_qubits() const {
        return n_;
    }
    const ComplexVector &amplitudes() const {
        return amp_;
    }
    ComplexVector &mutable_amplitudes() {
        return amp_;
    }
    double norm() const {
        return amp_.norm();
    }
    /// |amplitude|^2 for every basis state.
    std::vector<double> probabilities() const;

   private:
    int n_;
    ComplexVector amp_;
};

enum class GateKind { Hadamard, CNOT, RotX, RotY, RotZ, RotXX, RotYY, RotZZ };

/// R_i(t) = exp(-i t/2 s_i); R_ii(t) = exp(-i t/2 s_i s_i). CNOT targets are
/// (control, target).
struct GateOp {
    GateKind kind = GateKind::Hadamard;
    std::array<int, 2> targets{0, 0};
    double angle = 0;

    int arity() const;

    static GateOp h(int q);
    static GateOp cnot(int control, int target);
    static GateOp rx(int q, double t);
    static GateOp ry(int q, double t);
    static GateOp rz(int q, double t);
    static GateOp rxx(int q0, int q1, double t);
    static GateOp ryy(int q0, int q1, double t);
    static GateOp rzz(int q0, int q1, double t);
};

using Circuit = std::vector<GateOp>;

/// 2x2 or 4x4 unitary of the gate. Two-qubit matrices are in the basis
/// 2 b(targets[0]) + b(targets[1]).
ComplexMatrix gate_matrix(const GateOp &gate);

/// Exact unitary action, in place. Throws std::invalid_argument on a bad or
/// repeated target index.
void apply_gate(StateVector &psi, const GateOp &gate);

/// Applies a 2x2 matrix to qubit q.
void apply_1q(StateVector &psi, int q, const ComplexMatrix &m);
/// Applies a 4x4 matrix in the basis 2 b(q0) + b(q1).
void apply_2q(StateVector &psi, int q0, int q1, const ComplexMatrix &m);

/// Runs the circuit from |0...0>.
StateVector run_circuit(const Circuit &circuit, int num_qubits = kTfdQubits);

/// Dense unitary of a circuit on n qubits (test and oracle use).
ComplexMatrix circuit_unitary(const Circuit &circuit, int num_qubits);

/// Trace over qubits A', B' of a four-qubit TFD-register state.
DensityMatrix reduced_system_state(const StateVector &psi);

}  // namespace jqb

#endif
