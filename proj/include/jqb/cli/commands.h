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

#ifndef JQB_CLI_COMMANDS_H
#define JQB_CLI_COMMANDS_H

#include <string_view>

#include "jqb/model/sweep.h"

namespace jqb::cli {

/// Entry point of the jqb tool. Subcommands: cycle, sweep, pareto, tfd,
/// flux. Returns the process exit code (0 ok, 2 usage, 3 I/O).
int run(int argc, const char *const *argv);

/// Grid of a named figure preset (fig3a, fig3b, fig4a, fig4b, fig4c).
/// Throws UsageError for an unknown name.
SweepGrid figure_grid(std::string_view name);

}  // namespace jqb::cli

#endif
