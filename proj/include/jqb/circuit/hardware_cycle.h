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

#ifndef JQB_CIRCUIT_HARDWARE_CYCLE_H
#define JQB_CIRCUIT_HARDWARE_CYCLE_H

#include <optional>
#include <string_view>
#include <vector>

#include "jqb/circuit/ansatz.h"
#include "jqb/circuit/tomography.h"

namespace jqb {

/// Shots, repetitions and noise of an emulated device run.
struct RunProfile {
    NoiseModel noise;
    uint64_t shots = 1000;
    int runs = 1;
    Estimator estimator = Estimator::LinearInversionProjected;

    /// 1000 shots per setting, 30 repetitions, no noise.
    static RunProfile noiseless();
    /// 4000 shots per setting, one repetition, NoiseModel::hardware().
    static RunProfile hardware();
    /// "noiseless" or "hardware"; throws std::invalid_argument otherwise.
    static RunProfile named(std::string_view name);
};

/// One emulated single-qubit extraction cycle, averaged over runs.
struct HardwareCycleResult {
    double extracted_work = 0;
    double e_disconnect = 0;
    double e_connect = 0;
    /// Ratio of the run-averaged work and cost; empty if the cost vanishes.
    std::optional<double> efficiency;
    /// Fidelity of the first run's tomographed stroke-I state with `target`.
    double fidelity_to_target = 0;
    /// Extraction angle used in the first run.
    double alpha = 0;
    std::vector<DensityMatrix> rho_i_estimates;
    std::vector<DensityMatrix> rho_iii_estimates;
};

/// Circuit for stroke III: the ansatz, then RY(-2 alpha) and RZ(-2 theta) on
/// A, i.e. U(theta) = exp(i theta sz) exp(i alpha sy) up to a global phase.
Circuit extraction_circuit(const std::vector<VariationalParams> &steps, double alpha, double theta);

/// Tomographs the prepared state, reads the extraction angle off qubit A's
/// estimated Bloch vector (x, z), re-prepares with the extraction gates and
/// tomographs again. Work and costs come from the two estimates:
/// E = Tr[H0 (rho_I - rho_III)], E_d = -g Tr[Hint rho_I], E_c = g Tr[Hint rho_III].
HardwareCycleResult hardware_single_cycle(const std::vector<VariationalParams> &steps, double gamma0, double theta,
                                          const DensityMatrix &target, const RunProfile &profile, Rng &rng);

}  // namespace jqb

#endif
