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

#include <stdexcept>

#include "jqb/core/random.h"
#include "jqb/optimizer/bayesian.h"

namespace jqb {

OptimizationTrace random_search_baseline(const CostFunction &cost, const Bounds &bounds, size_t budget,
                                         uint64_t seed) {
    bounds.validate();
    if (budget == 0) {
        throw std::invalid_argument("random search needs a budget of at least 1");
    }
    Rng rng(derive_seed(seed, 3));
    OptimizationTrace trace;
    trace.budget = budget;
    trace.seed = seed;
    for (size_t k = 0; k < budget; ++k) {
        std::vector<double> x(bounds.dims());
        for (size_t d = 0; d < x.size(); ++d) {
            x[d] = bounds.lower[d] + rng.uniform() * (bounds.upper[d] - bounds.lower[d]);
        }
        double c = cost(x);
        record(trace, std::move(x), c);
    }
    update_convergence(trace);
    return trace;
}

}  // namespace jqb
