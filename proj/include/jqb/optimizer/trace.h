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

#ifndef JQB_OPTIMIZER_TRACE_H
#define JQB_OPTIMIZER_TRACE_H

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace jqb {

/// Black-box objective, minimized.
using CostFunction = std::function<double(std::span<const double>)>;

/// Axis-aligned box.
struct Bounds {
    std::vector<double> lower;
    std::vector<double> upper;

    size_t dims() const {
        return lower.size();
    }
    /// Throws std::invalid_argument on mismatched sizes, non-finite values or
    /// upper <= lower in any dimension.
    void validate() const;
    bool contains(std::span<const double> x) const;
    /// [-pi, pi]^n.
    static Bounds symmetric_pi(size_t n);
};

struct TraceEntry {
    std::vector<double> params;
    double cost = 0;
    double best_so_far = 0;
};

/// Stall criterion: no improvement of the best cost by more than `tolerance`
/// over `window` consecutive evaluations.
struct ConvergenceInfo {
    double tolerance = 1e-4;
    size_t window = 50;
    /// True when the final `window` evaluations met the criterion.
    bool converged = false;
    /// First evaluation index at which the criterion held, if ever.
    std::optional<size_t> first_stall;
    /// Whether the optimizer stopped early because of it.
    bool stopped_early = false;

    std::string describe() const;
};

struct OptimizationTrace {
    std::vector<TraceEntry> iterations;
    size_t budget = 0;
    uint64_t seed = 0;
    ConvergenceInfo convergence;

    /// Throws std::logic_error on an empty trace.
    const TraceEntry &best() const;
};

/// Appends an evaluation, maintaining best_so_far.
void record(OptimizationTrace &trace, std::vector<double> params, double cost);

/// Evaluates the stall criterion on the trace and stores the result.
void update_convergence(OptimizationTrace &trace);

/// True if the criterion holds at the last entry.
bool stalled(const OptimizationTrace &trace);

}  // namespace jqb

#endif
