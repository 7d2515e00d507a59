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

#ifndef JQB_CLI_RECORDS_H
#define JQB_CLI_RECORDS_H

#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "jqb/cli/config.h"
#include "jqb/model/cycle.h"

namespace jqb::cli {

/// Written as the first line of every output: "# jqb <version> command=...
/// config_hash=<16 hex> seed=<n>" for CSV, a {"provenance": {...}} object
/// for JSON lines.
struct Provenance {
    std::string command;
    uint64_t config_hash = 0;
    uint64_t seed = 0;
};

/// 12 significant digits.
std::string format_number(double v);

using Cell = std::variant<double, int64_t, bool, std::string>;

/// Accumulates a table as CSV or JSON lines. JSON objects carry the same
/// keys as the CSV header, in the same order, and the same number text.
class TableWriter {
   public:
    TableWriter(Format format, std::vector<std::string> columns, const Provenance &provenance);
    /// Throws std::invalid_argument if the cell count differs from the
    /// column count.
    void row(const std::vector<Cell> &cells);
    std::string str() const {
        return out_.str();
    }

   private:
    Format format_;
    std::vector<std::string> columns_;
    std::ostringstream out_;
};

/// protocol, gamma0, T, theta, ergotropy, Ed, Ec, eta, eff_work.
const std::vector<std::string> &cycle_columns();
/// eta and eff_work are the string "degenerate" when the cost vanishes.
std::vector<Cell> cycle_cells(const CycleEnergetics &c);

/// Parses a CSV table with cycle_columns() (comment lines skipped). Throws
/// UsageError on a malformed table.
std::vector<CycleEnergetics> read_cycle_csv(const std::string &text);

}  // namespace jqb::cli

#endif
