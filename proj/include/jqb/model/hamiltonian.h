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

#ifndef JQB_MODEL_HAMILTONIAN_H
#define JQB_MODEL_HAMILTONIAN_H

#include <array>

#include "jqb/core/density_matrix.h"

namespace jqb {

// Two-qubit Josephson battery, energies in units of the qubit splitting
// Omega:
//
//   H(gamma) = sz_A + sz_B - gamma (sx_A + sx_B + sx_A sx_B - sy_A sy_B)
//            = H0 + gamma Hint

/// sz_A + sz_B = diag(2, 0, 0, -2).
ComplexMatrix bare_hamiltonian();

/// -(sx_A + sx_B + sx_A sx_B - sy_A sy_B).
ComplexMatrix interaction_hamiltonian();

ComplexMatrix jqb_hamiltonian(double gamma);

/// Local Hamiltonian of either qubit after disconnection, sz.
ComplexMatrix qubit_hamiltonian();

/// Exact spectrum from the trigonometric solution of the depressed cubic
/// e^3 - 4(1 + 2 g^2) e + 8 g^3 = 0, plus the zero level.
struct ClosedFormSpectrum {
    /// {0, root(n=0), root(n=1), root(n=2)}.
    std::array<double, 4> levels{};

    double lowest() const {
        return levels[2];
    }
    double highest() const {
        return levels[1];
    }
    std::array<double, 4> ascending() const;
};

ClosedFormSpectrum spectrum_closed_form(double gamma0);

/// Gibbs state of jqb_hamiltonian(gamma0) at inverse temperature beta.
DensityMatrix jqb_gibbs_state(double gamma0, double beta);

/// The qubit-exchange operator on two qubits.
ComplexMatrix swap_operator();

}  // namespace jqb

#endif
