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

#ifndef JQB_ERGOTROPY_ERGOTROPY_H
#define JQB_ERGOTROPY_ERGOTROPY_H

#include <array>
#include <string_view>
#include <vector>

#include "jqb/core/density_matrix.h"

namespace jqb {

/// How work is extracted from the two-qubit battery after disconnection.
enum class Protocol {
    /// One qubit only: U_A (x) I.
    Single,
    /// Both qubits with independent local unitaries U_A (x) U_B.
    Local,
    /// One global unitary on both qubits, correlations included.
    Global,
    /// As Local, but disconnection also erases correlations (the state after
    /// disconnection is rho_A (x) rho_B).
    LocalUncorrelated,
};

std::string_view protocol_name(Protocol p);
/// Accepts "single", "local", "global", "local-uncorrelated" (and s/l/g/u).
/// Throws std::invalid_argument on anything else.
Protocol parse_protocol(std::string_view s);

struct ExtractionUnitary {
    ComplexMatrix matrix;
    Protocol protocol = Protocol::Global;
    /// theta for Single; (theta_A, theta_B) for Local; empty for Global.
    std::vector<double> phases;
    /// Rotation angle of the real-state qubit unitary (Single/Local only).
    double alpha = 0;
};

struct ErgotropyReport {
    double value = 0;
    /// Global: the passive state of the input. Single/Local: the product of
    /// the local passive states of the processed qubits.
    DensityMatrix passive_state;
    Protocol protocol = Protocol::Global;
};

struct PassiveState {
    DensityMatrix state;
    ExtractionUnitary unitary;
};

/// pi = sum_k lambda_k(desc) |e_k(asc)><e_k(asc)| and the phase-free unitary
/// sum_k |e_k><lambda_k| mapping rho to it. Degenerate energy levels use the
/// deterministic eigenbasis of hermitian_eig.
PassiveState passive_state(const DensityMatrix &rho, const ComplexMatrix &h);

/// Maximum work extractable by a cyclic unitary, computed from the
/// eigen-overlap double sum. Equals Tr[H rho] - Tr[H pi].
ErgotropyReport ergotropy(const DensityMatrix &rho, const ComplexMatrix &h);

/// U(theta) = exp(i theta sz) exp(i alpha sy) for a qubit with real density
/// matrix (|y| below the policy tolerance) and Hamiltonian sz. alpha solves
/// tan(alpha) = -(r + z)/x and is reported in (-pi, 0]. A maximally mixed
/// qubit gets the identity. Throws std::invalid_argument if |y| is too large.
ExtractionUnitary single_qubit_extraction_unitary(const BlochVector &bloch, double theta);

/// Ergotropy-extracting unitary for one qubit with local Hamiltonian h.
/// Uses the closed form above whenever it applies (h = sz, real state);
/// otherwise exp(-i theta)|e_1><lambda_1| + exp(i theta)|e_2><lambda_2|.
ExtractionUnitary qubit_extraction_unitary(const DensityMatrix &rho, const ComplexMatrix &h, double theta);

struct LocalExtraction {
    ErgotropyReport report;
    DensityMatrix after_state;
    ExtractionUnitary unitary;
};

/// Single protocol: extract from qubit A only with U_A(theta) (x) I.
LocalExtraction single_ergotropy(const DensityMatrix &rho_ab, const ComplexMatrix &h_a, double theta);

/// Local protocol: U_A(theta_A) (x) U_B(theta_B). The value E_A + E_B does
/// not depend on the phases; the after-state does when rho_ab is correlated.
LocalExtraction local_ergotropy(const DensityMatrix &rho_ab, const ComplexMatrix &h_a, const ComplexMatrix &h_b,
                                double theta_a, double theta_b);

/// Global protocol on a two-qubit state with respect to the bare
/// Hamiltonian h0.
ErgotropyReport global_ergotropy(const DensityMatrix &rho, const ComplexMatrix &h0);

/// Gap between global and local ergotropy of the battery's Gibbs state,
/// from the closed-form spectrum:
/// (2/Z)(exp(-beta e_1) - exp(-beta e_4)) - 2 r.
double ergotropic_gap(double gamma0, double beta);

struct EntanglementReport {
    double concurrence = 0;
    double entanglement_of_formation = 0;
    /// Square roots of the eigenvalues of sqrt(rho) rho~ sqrt(rho), descending.
    std::array<double, 4> mu{};
};

/// Wootters concurrence and entanglement of formation of a two-qubit state.
EntanglementReport concurrence(const DensityMatrix &rho_ab);

/// (sy (x) sy) rho^* (sy (x) sy).
ComplexMatrix spin_flip(const ComplexMatrix &rho_ab);

/// -x log2 x - (1-x) log2 (1-x).
double binary_entropy(double x);

}  // namespace jqb

#endif
