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

#ifndef JQB_OPTIMIZER_INFIDELITY_H
#define JQB_OPTIMIZER_INFIDELITY_H

#include <vector>

#include "jqb/circuit/ansatz.h"
#include "jqb/circuit/tomography.h"
#include "jqb/optimizer/bayesian.h"

namespace jqb {

/// How the prepared marginal is obtained when scoring parameters.
struct Evaluation {
    enum class Mode { Analytic, Tomographic };
    Mode mode = Mode::Analytic;
    uint64_t shots = 1000;
    NoiseModel noise;
    /// Required for Tomographic; advanced by every evaluation.
    Rng *rng = nullptr;

    static Evaluation analytic() {
        return {};
    }
    static Evaluation tomographic(uint64_t shots, const NoiseModel &noise, Rng &rng) {
        return {Mode::Tomographic, shots, noise, &rng};
    }
};

/// 1 - F(marginal of the ansatz state, target), in [0, 1]. Throws
/// std::invalid_argument if the target is not a two-qubit state or a
/// tomographic evaluation has no generator.
double infidelity_cost(const std::vector<VariationalParams> &steps, const DensityMatrix &target,
                       const Evaluation &evaluation);
double infidelity_cost(const VariationalParams &params, const DensityMatrix &target, const Evaluation &evaluation);

/// Splits a flat vector of 7 * depth angles into ansatz steps.
std::vector<VariationalParams> unflatten_steps(std::span<const double> flat);

/// Black-box objective over 7 * depth angles for the optimizers.
CostFunction make_infidelity_objective(DensityMatrix target, Evaluation evaluation);

/// Result of preparing one Gibbs target.
struct TfdFit {
    std::vector<VariationalParams> steps;
    /// Noiseless fidelity of the best parameters.
    double fidelity = 0;
    OptimizationTrace trace;
};

/// Bayesian optimization of the analytic infidelity over [-pi, pi]^(7 depth).
TfdFit fit_tfd(const DensityMatrix &target, size_t depth, const BayesOptions &options);

}  // namespace jqb

#endif
