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

#ifndef JQB_MODEL_CYCLE_H
#define JQB_MODEL_CYCLE_H

#include <optional>
#include <vector>

#include "jqb/ergotropy/ergotropy.h"

namespace jqb {

/// One operating point of the battery. Energies are in units of the qubit
/// splitting, temperatures in the same units (k_B = 1).
struct JqbParams {
    double gamma0 = 0;
    /// Exactly one of temperature / beta must be set.
    std::optional<double> temperature;
    std::optional<double> beta;
    /// Extraction phase in [0, pi). For Local it is the sum theta_A + theta_B
    /// (applied as theta_A = theta, theta_B = 0).
    double theta = 0;
    Protocol protocol = Protocol::Single;

    static JqbParams at_temperature(double gamma0, double temperature, double theta, Protocol protocol);

    /// Throws std::invalid_argument if the invariants do not hold.
    void validate() const;
    double resolved_beta() const;
    double resolved_temperature() const;
};

enum class CycleStatus {
    Ok,
    /// E_d + E_c <= 1e-14: no energy was spent, efficiency is undefined.
    DegenerateCost,
};

struct CycleEnergetics {
    Protocol protocol = Protocol::Single;
    double gamma0 = 0;
    double beta = 0;
    double theta = 0;
    double extracted_work = 0;
    double e_disconnect = 0;
    double e_connect = 0;
    /// Empty when status is DegenerateCost.
    std::optional<double> efficiency;
    std::optional<double> efficient_work;
    CycleStatus status = CycleStatus::Ok;
    /// Stroke states rho_I .. rho_IV (may be dropped by sweeps).
    std::vector<DensityMatrix> states;

    double temperature() const {
        return 1.0 / beta;
    }
};

/// gamma0 (2<sx_A> + <sx_A sx_B> - <sy_A sy_B>) on the Gibbs state. Throws
/// on a non-two-qubit state.
double disconnection_energy(const DensityMatrix &tau, double gamma0);

/// Connection cost from Pauli expectations of tau, for the stroke-III state
/// that the protocol's extraction unitary produces from tau (the product of
/// the marginals for LocalUncorrelated). Global is identically 0. Throws
/// std::invalid_argument when tau breaks the assumptions these expressions
/// rest on: qubit exchange symmetry and real marginals.
double connection_energy(Protocol protocol, const DensityMatrix &tau, double gamma0, double theta);

/// gamma0 Tr[Hint rho_III], the definition-level route.
double connection_energy_from_state(const DensityMatrix &rho_iii, double gamma0);

/// 2<sz_A> + (2/Z)(exp(-beta e_1) - exp(-beta e_4)) with the closed-form
/// spectrum.
double global_ergotropy_closed_form(double gamma0, double beta);

CycleEnergetics run_cycle(const JqbParams &params);

}  // namespace jqb

#endif
