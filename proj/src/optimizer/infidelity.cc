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

#include "jqb/optimizer/infidelity.h"

#include <algorithm>
#include <stdexcept>

namespace jqb {

double infidelity_cost(const std::vector<VariationalParams> &steps, const DensityMatrix &target,
                       const Evaluation &evaluation) {
    if (target.dim() != 4) {
        throw std::invalid_argument("infidelity target must be a two-qubit state");
    }
    if (evaluation.mode == Evaluation::Mode::Analytic) {
        return std::clamp(1.0 - fidelity(ansatz_marginal(steps), target), 0.0, 1.0);
    }
    if (evaluation.rng == nullptr) {
        throw std::invalid_argument("tomographic evaluation needs a random generator");
    }
    TomographyResult t = tomography(ansatz_circuit(steps), evaluation.shots, evaluation.noise,
                                    Estimator::LinearInversionProjected, *evaluation.rng);
    return std::clamp(1.0 - fidelity(t.rho_estimate, target), 0.0, 1.0);
}

double infidelity_cost(const VariationalParams &params, const DensityMatrix &target, const Evaluation &evaluation) {
    return infidelity_cost(std::vector<VariationalParams>{params}, target, evaluation);
}

std::vector<VariationalParams> unflatten_steps(std::span<const double> flat) {
    if (flat.empty() || flat.size() % VariationalParams::kSize != 0) {
        throw std::invalid_argument("parameter vector length must be a positive multiple of 7");
    }
    std::vector<VariationalParams> steps;
    for (size_t k = 0; k < flat.size(); k += VariationalParams::kSize) {
        steps.push_back(VariationalParams::from_flat(flat.data() + k));
    }
    return steps;
}

CostFunction make_infidelity_objective(DensityMatrix target, Evaluation evaluation) {
    return [target = std::move(target), evaluation](std::span<const double> x) {
        return infidelity_cost(unflatten_steps(x), target, evaluation);
    };
}

TfdFit fit_tfd(const DensityMatrix &target, size_t depth, const BayesOptions &options) {
    if (depth == 0) {
        throw std::invalid_argument("ansatz depth must be at least 1");
    }
    CostFunction f = make_infidelity_objective(target, Evaluation::analytic());
    TfdFit fit;
    fit.trace = bayesian_optimize(f, Bounds::symmetric_pi(VariationalParams::kSize * depth), options);
    fit.steps = unflatten_steps(fit.trace.best().params);
    fit.fidelity = fidelity(ansatz_marginal(fit.steps), target);
    return fit;
}

}  // namespace jqb
