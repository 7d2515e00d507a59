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

#include "jqb/model/flux.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace jqb {

double qubit_splitting(const FluxConfig &cfg) {
    return cfg.e_c * (cfg.n_g - 0.5);
}

double flux_to_coupling(const FluxConfig &cfg) {
    double omega = qubit_splitting(cfg);
    if (!(omega > 0) || !std::isfinite(omega)) {
        throw std::invalid_argument("qubit splitting E_C (n_g - 1/2) must be > 0");
    }
    return cfg.e_j * std::cos(std::numbers::pi * cfg.flux_ratio) / omega;
}

std::vector<std::string> flux_warnings(const FluxConfig &cfg) {
    std::vector<std::string> out;
    if (cfg.e_c > 0 && cfg.e_j / cfg.e_c > 0.2) {
        out.push_back("E_J/E_C = " + std::to_string(cfg.e_j / cfg.e_c) +
                      " exceeds 0.2; the two-level charge description may not hold");
    }
    return out;
}

}  // namespace jqb
