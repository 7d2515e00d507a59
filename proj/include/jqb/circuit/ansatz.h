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

#ifndef JQB_CIRCUIT_ANSATZ_H
#define JQB_CIRCUIT_ANSATZ_H

#include <array>
#include <vector>

#include "jqb/circuit/statevector.h"

namespace jqb {

/// Angles of one ansatz step: xi for the intra-register layers, zeta for the
/// inter-register layers. Each in [-pi, pi].
struct VariationalParams {
    std::array<double, 4> xi{};
    std::array<double, 3> zeta{};

    static constexpr size_t kSize = 7;
    std::array<double, kSize> flat() const;
    static VariationalParams from_flat(const double *v);
    bool in_bounds() const;
};

/// Hadamards on A, B then CNOT(A -> A'), CNOT(B -> B'): two Bell pairs.
Circuit tfd_zero_circuit();
StateVector tfd_zero_state();

/// RX(xi1) on all four qubits, then RZ(xi2), then RXX(xi3) and RYY(xi4) on
/// (A, B) and (A', B'). Acts identically on both registers.
Circuit u_intra_circuit(const std::array<double, 4> &xi);
/// RXX(zeta1), RYY(zeta2), RZZ(zeta3) on (A, A') and (B, B').
Circuit u_inter_circuit(const std::array<double, 3> &zeta);

StateVector apply_u_intra(StateVector psi, const std::array<double, 4> &xi);
StateVector apply_u_inter(StateVector psi, const std::array<double, 3> &zeta);

/// TFD(0) followed by U_intra then U_inter for each step in order.
Circuit ansatz_circuit(const std::vector<VariationalParams> &steps);
Circuit ansatz_circuit(const VariationalParams &params);

/// Noiseless marginal on (A, B) of the prepared state.
DensityMatrix ansatz_marginal(const std::vector<VariationalParams> &steps);
DensityMatrix ansatz_marginal(const VariationalParams &params);

}  // namespace jqb

#endif
