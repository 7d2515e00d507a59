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

#ifndef JQB_OPTIMIZER_BAYESIAN_H
#define JQB_OPTIMIZER_BAYESIAN_H

#include "jqb/optimizer/trace.h"

namespace jqb {

struct BayesOptions {
    size_t budget = 600;
    size_t initial_design = 20;
    /// Hyperparameters are refit by marginal likelihood every this many
    /// evaluations (and after the initial design).
    size_t refit_every = 25;
    int rprop_iterations = 60;
    /// The surrogate trains on at most this many evaluations, the ones
    /// closest to the incumbent.
    size_t max_training = 300;
    /// Acquisition candidates per step: uniform in the box, plus Gaussian
    /// perturbations of the best points seen so far.
    size_t uniform_candidates = 1000;
    size_t local_candidates = 500;
    /// Hill-climbing steps on expected improvement from the best candidates.
    size_t refine_starts = 4;
    size_t refine_steps = 25;
    /// Exploration margin of expected improvement, in standardized units.
    double xi = 0.01;
    uint64_t seed = 0;
    /// Stop once the stall criterion holds. Off by default: the criterion is
    /// only recorded.
    bool stop_on_convergence = false;
};

/// Minimizes `cost` over `bounds` with a Gaussian-process surrogate and
/// expected improvement. Deterministic for a fixed seed. Throws
/// std::invalid_argument on degenerate bounds or budget < initial_design.
OptimizationTrace bayesian_optimize(const CostFunction &cost, const Bounds &bounds, const BayesOptions &options);

/// Uniform sampling of `budget` points; same trace shape.
OptimizationTrace random_search_baseline(const CostFunction &cost, const Bounds &bounds, size_t budget,
                                         uint64_t seed);

/// Maximin Latin hypercube on the unit cube: the best of `tries` random
/// designs by smallest pairwise distance.
std::vector<std::vector<double>> maximin_latin_hypercube(size_t n, size_t dims, uint64_t seed, size_t tries = 50);

/// Expected improvement below `best` for a Gaussian prediction.
double expected_improvement(double mean, double variance, double best, double xi);

}  // namespace jqb

#endif
