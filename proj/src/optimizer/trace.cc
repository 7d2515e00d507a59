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

#include "jqb/optimizer/trace.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace jqb {

void Bounds::validate() const {
    if (lower.size() != upper.size() || lower.empty()) {
        throw std::invalid_argument("bounds need matching, non-empty lower and upper vectors");
    }
    for (size_t d = 0; d < lower.size(); ++d) {
        if (!std::isfinite(lower[d]) || !std::isfinite(upper[d]) || !(upper[d] > lower[d])) {
            throw std::invalid_argument("degenerate bounds in dimension " + std::to_string(d));
        }
    }
}

bool Bounds::contains(std::span<const double> x) const {
    if (x.size() != lower.size()) {
        return false;
    }
    for (size_t d = 0; d < x.size(); ++d) {
        if (!(x[d] >= lower[d] && x[d] <= upper[d])) {
            return false;
        }
    }
    return true;
}

Bounds Bounds::symmetric_pi(size_t n) {
    return Bounds{std::vector<double>(n, -std::numbers::pi), std::vector<double>(n, std::numbers::pi)};
}

std::string ConvergenceInfo::describe() const {
    std::ostringstream os;
    os << "no improvement > " << tolerance << " over " << window << " evaluations: ";
    if (converged) {
        os << "met at end";
    } else {
        os << "not met at end";
    }
    if (first_stall) {
        os << ", first met at evaluation " << *first_stall;
    }
    if (stopped_early) {
        os << ", stopped early";
    }
    return os.str();
}

const TraceEntry &OptimizationTrace::best() const {
    if (iterations.empty()) {
        throw std::logic_error("empty optimization trace");
    }
    auto it = std::min_element(iterations.begin(), iterations.end(),
                               [](const TraceEntry &a, const TraceEntry &b) { return a.cost < b.cost; });
    return *it;
}

void record(OptimizationTrace &trace, std::vector<double> params, double cost) {
    double best = trace.iterations.empty() ? cost : std::min(trace.iterations.back().best_so_far, cost);
    trace.iterations.push_back(TraceEntry{std::move(params), cost, best});
}

namespace {

bool stalled_at(const std::vector<TraceEntry> &it, size_t i, const ConvergenceInfo &c) {
    if (i < c.window) {
        return false;
    }
    return it[i - c.window].best_so_far - it[i].best_so_far <= c.tolerance;
}

}  // namespace

bool stalled(const OptimizationTrace &trace) {
    return !trace.iterations.empty() && stalled_at(trace.iterations, trace.iterations.size() - 1, trace.convergence);
}

void update_convergence(OptimizationTrace &trace) {
    ConvergenceInfo &c = trace.convergence;
    c.first_stall.reset();
    for (size_t i = 0; i < trace.iterations.size(); ++i) {
        if (stalled_at(trace.iterations, i, c)) {
            c.first_stall = i;
            break;
        }
    }
    c.converged = stalled(trace);
}

}  // namespace jqb
