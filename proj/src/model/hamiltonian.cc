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

#include "jqb/model/hamiltonian.h"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace jqb {

ComplexMatrix bare_hamiltonian() {
    return pauli2(Pauli::Z, Pauli::I) + pauli2(Pauli::I, Pauli::Z);
}

ComplexMatrix interaction_hamiltonian() {
    return -(pauli2(Pauli::X, Pauli::I) + pauli2(Pauli::I, Pauli::X) + pauli2(Pauli::X, Pauli::X) -
             pauli2(Pauli::Y, Pauli::Y));
}

ComplexMatrix jqb_hamiltonian(double gamma) {
    return bare_hamiltonian() + gamma * interaction_hamiltonian();
}

ComplexMatrix qubit_hamiltonian() {
    return pauli(Pauli::Z);
}

std::array<double, 4> ClosedFormSpectrum::ascending() const {
    std::array<double, 4> out = levels;
    std::sort(out.begin(), out.end());
    return out;
}

ClosedFormSpectrum spectrum_closed_form(double gamma0) {
    double g2 = gamma0 * gamma0;
    double p = 1.0 + 2.0 * g2;
    double arg = -3.0 * std::sqrt(3.0) * g2 * gamma0 / (2.0 * std::pow(p, 1.5));
    double phi = std::acos(std::clamp(arg, -1.0, 1.0));
    double amp = 4.0 * std::sqrt(p) / std::sqrt(3.0);
    ClosedFormSpectrum s;
    s.levels[0] = 0.0;
    for (int n = 0; n < 3; ++n) {
        s.levels[static_cast<size_t>(n) + 1] = amp * std::cos((phi + 2.0 * std::numbers::pi * n) / 3.0);
    }
    return s;
}

DensityMatrix jqb_gibbs_state(double gamma0, double beta) {
    return gibbs_state(jqb_hamiltonian(gamma0), beta);
}

ComplexMatrix swap_operator() {
    ComplexMatrix s = ComplexMatrix::Zero(4, 4);
    s(0, 0) = 1;
    s(1, 2) = 1;
    s(2, 1) = 1;
    s(3, 3) = 1;
    return s;
}

}  // namespace jqb
