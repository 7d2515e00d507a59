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

#ifndef JQB_CORE_NUMERIC_POLICY_H
#define JQB_CORE_NUMERIC_POLICY_H

namespace jqb {

/// Every numerical tolerance used by the library, in one place.
///
/// The defaults are the contract; property tests read them from here rather
/// than hard-coding their own copies.
struct NumericPolicy {
    /// Max-norm residual ||rho - rho^dagger|| accepted for a density matrix.
    double density_hermiticity = 1e-12;
    /// |Tr rho - 1| accepted for a density matrix.
    double density_trace = 1e-12;
    /// Most negative eigenvalue accepted for a density matrix.
    double density_psd_slack = 1e-10;
    /// Hermiticity residual accepted on input to the eigensolver.
    double eig_input_hermiticity = 1e-10;
    /// Bloch radius may exceed 1 by this much.
    double bloch_radius_slack = 1e-12;
    /// Bloch radius below which a qubit is treated as maximally mixed.
    double maximally_mixed_radius = 1e-12;
    /// |y| accepted by the real-state qubit extraction unitary.
    double real_state_y = 1e-10;
    /// Relative gap under which two eigenvalues are considered degenerate.
    double eigenvalue_tie = 1e-10;
    /// Cycle cost E_d + E_c at or below which efficiency is undefined.
    double degenerate_cycle_cost = 1e-14;
    /// Jacobi sweeps stop once the off-diagonal norm drops below this
    /// fraction of the Frobenius norm.
    double jacobi_relative_offdiag = 1e-16;
    int jacobi_max_sweeps = 64;
};

inline constexpr NumericPolicy kNumericPolicy{};

}  // namespace jqb

#endif
