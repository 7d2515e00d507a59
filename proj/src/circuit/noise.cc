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

#include "jqb/circuit/noise.h"

#include <stdexcept>

namespace jqb {

void NoiseModel::validate() const {
    for (double p : {p1, p2, p_readout}) {
        if (!(p >= 0 && p <= 0.5)) {
            throw std::invalid_argument("noise rates must lie in [0, 0.5]");
        }
    }
}

namespace {

constexpr Pauli kPaulis[4] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};

std::array<int, 2> draw_error(int arity, Rng &rng) {
    if (arity == 1) {
        return {1 + rng.below(3), 0};
    }
    int k = 1 + rng.below(15);
    return {k >> 2, k & 3};
}

void apply_fault(StateVector &psi, const GateOp &gate, const std::array<int, 2> &paulis) {
    if (paulis[0] != 0) {
        apply_1q(psi, gate.targets[0], pauli(kPaulis[paulis[0]]));
    }
    if (gate.arity() == 2 && paulis[1] != 0) {
        apply_1q(psi, gate.targets[1], pauli(kPaulis[paulis[1]]));
    }
}

}  // namespace

std::vector<Fault> sample_faults(const Circuit &circuit, const NoiseModel &noise, Rng &rng) {
    std::vector<Fault> out;
    for (size_t g = 0; g < circuit.size(); ++g) {
        int arity = circuit[g].arity();
        double p = arity == 1 ? noise.p1 : noise.p2;
        if (p > 0 && rng.uniform() < p) {
            out.push_back(Fault{g, draw_error(arity, rng)});
        }
    }
    return out;
}

StateVector run_with_faults(const Circuit &circuit, const std::vector<Fault> &faults, int num_qubits) {
    StateVector psi(num_qubits);
    size_t next = 0;
    for (size_t g = 0; g < circuit.size(); ++g) {
        apply_gate(psi, circuit[g]);
        while (next < faults.size() && faults[next].after_gate == g) {
            apply_fault(psi, circuit[g], faults[next].paulis);
            ++next;
        }
    }
    return psi;
}

void apply_gate(StateVector &psi, const GateOp &gate, const NoiseModel *noise, Rng &rng) {
    apply_gate(psi, gate);
    if (noise == nullptr) {
        return;
    }
    double p = gate.arity() == 1 ? noise->p1 : noise->p2;
    if (p > 0 && rng.uniform() < p) {
        apply_fault(psi, gate, draw_error(gate.arity(), rng));
    }
}

uint32_t apply_readout_noise(uint32_t outcome, int num_bits, const NoiseModel &noise, Rng &rng) {
    if (noise.p_readout <= 0) {
        return outcome;
    }
    for (int b = 0; b < num_bits; ++b) {
        if (rng.uniform() < noise.p_readout) {
            outcome ^= (1u << b);
        }
    }
    return outcome;
}

}  // namespace jqb
