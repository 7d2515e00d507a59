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

#ifndef JQB_CIRCUIT_TOMOGRAPHY_H
#define JQB_CIRCUIT_TOMOGRAPHY_H

#include <array>
#include <cstdint>
#include <string_view>

#include "jqb/circuit/noise.h"

namespace jqb {

enum class PauliBasis { X, Y, Z };

/// Measurement bases for qubits A and B.
struct PauliSetting {
    PauliBasis a = PauliBasis::Z;
    PauliBasis b = PauliBasis::Z;
};

/// xx, xy, xz, yx, ..., zz.
inline constexpr size_t kNumSettings = 9;
PauliSetting tomography_setting(size_t index);
std::string_view setting_label(PauliSetting s);

/// Counts of outcomes 2 a + b (bit 0 means eigenvalue +1).
using Histogram = std::array<uint64_t, 4>;

enum class Estimator {
    /// Analytic Pauli expectations of the noiseless state.
    ExactExpectation,
    /// Expectations from shot counts, linear inversion, then projection onto
    /// the density-matrix cone by eigenvalue clipping and renormalization.
    LinearInversionProjected,
};

std::string_view estimator_name(Estimator e);

struct TomographyResult {
    DensityMatrix rho_estimate;
    std::array<Histogram, kNumSettings> counts{};
    uint64_t shots_per_setting = 0;
    Estimator estimator = Estimator::LinearInversionProjected;
};

/// Gates rotating the setting's eigenbasis of A and B onto Z: H for x,
/// RX(pi/2) for y, nothing for z.
Circuit measurement_basis_circuit(PauliSetting s);

/// Shot sampling of a fixed state of the TFD register (qubits A, B are
/// measured). Only readout noise applies. Draws one seed from rng.
Histogram measure_pauli_setting(const StateVector &psi, PauliSetting s, uint64_t shots, const NoiseModel &noise,
                                Rng &rng);

/// Every shot re-runs `prep` plus the basis rotation as an independent noisy
/// trajectory. Shots without a sampled gate fault reuse the ideal outcome
/// distribution. Gate faults, outcome sampling and readout flips use
/// separate substreams of one seed drawn from rng, so a noiseless model gives
/// exactly the counts of the state-vector overload.
Histogram measure_pauli_setting(const Circuit &prep, PauliSetting s, uint64_t shots, const NoiseModel &noise, Rng &rng);

/// t[i][j] = <s_i (x) s_j>, i, j over {I, X, Y, Z}. One-qubit terms average
/// the three settings that share the basis.
using PauliTable = std::array<std::array<double, 4>, 4>;
PauliTable pauli_table_from_counts(const std::array<Histogram, kNumSettings> &counts);
PauliTable pauli_table_exact(const DensityMatrix &rho);

/// (1/4) sum t[i][j] s_i (x) s_j; Hermitian, unit trace, possibly not PSD.
ComplexMatrix linear_inversion(const PauliTable &t);

/// Tomography of the (A, B) marginal prepared by `prep`. ExactExpectation
/// ignores shots and noise. Throws std::invalid_argument on zero shots for
/// the sampling estimator.
TomographyResult tomography(const Circuit &prep, uint64_t shots_per_setting, const NoiseModel &noise,
                            Estimator estimator, Rng &rng);

/// Same for a fixed register state (readout noise only).
TomographyResult tomography(const StateVector &psi, uint64_t shots_per_setting, const NoiseModel &noise,
                            Estimator estimator, Rng &rng);

}  // namespace jqb

#endif
