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

#ifndef JQB_CIRCUIT_NOISE_H
#define JQB_CIRCUIT_NOISE_H

#include <cstdint>
#include <vector>

#include "jqb/circuit/statevector.h"
#include "jqb/core/random.h"

namespace jqb {

/// Depolarizing gate errors and classical readout flips.
///
/// After a one-qubit gate, with probability p1 one of X, Y, Z (uniform) hits
/// the target. After a two-qubit gate, with probability p2 one of the 15
/// non-identity two-qubit Paulis hits the pair. Each measured bit flips with
/// probability p_readout.
struct NoiseModel {
    double p1 = 0;
    double p2 = 0;
    double p_readout = 0;

    /// Throws std::invalid_argument unless every rate is in [0, 0.5].
    void validate() const;
    bool gate_noise() const {
        return p1 > 0 || p2 > 0;
    }
    bool is_noiseless() const {
        return !gate_noise() && p_readout == 0;
    }

    static NoiseModel noiseless() {
        return {};
    }
    /// Median rates quoted for the superconducting devices: 1e-4, 1e-2, 1e-2.
    static NoiseModel hardware() {
        return {1e-4, 1e-2, 1e-2};
    }
};

/// A Pauli error inserted after gate `after_gate`. `paulis` holds the Pauli
/// on targets[0] and targets[1] (index into {I, X, Y, Z}).
struct Fault {
    size_t after_gate = 0;
    std::array<int, 2> paulis{0, 0};
};

/// Draws the faults of one trajectory. Gates whose rate is 0 consume no
/// random numbers, so a noiseless model never touches rng.
std::vector<Fault> sample_faults(const Circuit &circuit, const NoiseModel &noise, Rng &rng);

/// Runs the circuit from |0...0> with the given faults inserted.
StateVector run_with_faults(const Circuit &circuit, const std::vector<Fault> &faults,
                            int num_qubits = kTfdQubits);

/// One gate of a noisy trajectory: the exact gate, then a sampled Pauli
/// error. A null noise model is the exact gate.
void apply_gate(StateVector &psi, const GateOp &gate, const NoiseModel *noise, Rng &rng);

/// Flips each of the low `num_bits` bits of `outcome` with probability
/// p_readout. No draws when p_readout is 0.
uint32_t apply_readout_noise(uint32_t outcome, int num_bits, const NoiseModel &noise, Rng &rng);

}  // namespace jqb

#endif
