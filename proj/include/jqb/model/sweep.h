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

#ifndef JQB_MODEL_SWEEP_H
#define JQB_MODEL_SWEEP_H

#include <vector>

#include "jqb/model/cycle.h"

namespace jqb {

struct SweepGrid {
    std::vector<double> gamma0;
    std::vector<double> temperature;
    std::vector<double> theta;
    std::vector<Protocol> protocols;

    size_t size() const {
        return gamma0.size() * temperature.size() * theta.size() * protocols.size();
    }
};

struct SweepOptions {
    /// 0 or 1 runs inline.
    unsigned threads = 1;
    /// Keep the four stroke states on every row.
    bool keep_states = false;
};

/// One row per grid point per protocol, ordered with gamma0 outermost, then
/// temperature, theta and protocol. The order does not depend on threads.
std::vector<CycleEnergetics> sweep(const SweepGrid &grid, const SweepOptions &options = {});

/// first, first + step, ... up to last (inclusive within step/1e6).
/// Throws std::invalid_argument if step <= 0 or last < first.
std::vector<double> linear_grid(double first, double last, double step);

/// n points geometrically spaced on [first, last]; both > 0.
std::vector<double> log_grid(double first, double last, size_t n);

/// Rows not dominated in (extracted_work, efficiency), both maximized. A row
/// is dominated if another is at least as good in both and strictly better
/// in one; equal rows are all kept. Rows without an efficiency (degenerate
/// cost) are skipped. Input order is preserved. Throws on an empty table.
std::vector<CycleEnergetics> pareto_front(const std::vector<CycleEnergetics> &rows);

/// pareto_front applied to the rows of one protocol.
std::vector<CycleEnergetics> pareto_front(const std::vector<CycleEnergetics> &rows, Protocol protocol);

}  // namespace jqb

#endif
