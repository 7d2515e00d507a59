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

#ifndef JQB_MODEL_FLUX_H
#define JQB_MODEL_FLUX_H

#include <string>
#include <vector>

namespace jqb {

/// Circuit parameters of a charge qubit pair; energies in GHz*h.
struct FluxConfig {
    double e_j = 0;
    double e_c = 0;
    double n_g = 0;
    /// External flux in units of the flux quantum.
    double flux_ratio = 0;
};

/// Omega = E_C (n_g - 1/2).
double qubit_splitting(const FluxConfig &cfg);

/// gamma = E_J cos(pi flux_ratio) / Omega. Throws std::invalid_argument if
/// Omega <= 0.
double flux_to_coupling(const FluxConfig &cfg);

/// Human-readable warnings about the charge-regime assumption (E_J/E_C > 0.2).
std::vector<std::string> flux_warnings(const FluxConfig &cfg);

}  // namespace jqb

#endif
