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

#include "jqb/circuit/hardware_cycle.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "jqb/core/numeric_policy.h"
#include "jqb/ergotropy/ergotropy.h"
#include "jqb/model/hamiltonian.h"

namespace jqb {

RunProfile RunProfile::noiseless() {
    return RunProfile{NoiseModel::noiseless(), 1000, 30, Estimator::LinearInversionProjected};
}

RunProfile RunProfile::hardware() {
    return RunProfile{NoiseModel::hardware(), 4000, 1, Estimator::LinearInversionProjected};
}

RunProfile RunProfile::named(std::string_view name) {
    if (name == "noiseless") {
        return noiseless();
    }
    if (name == "hardware") {
        return hardware();
    }
    throw std::invalid_argument("unknown run profile '" + std::string(name) + "'");
}

Circuit extraction_circuit(const std::vector<VariationalParams> &steps, double alpha, double theta) {
    Circuit c = ansatz_circuit(steps);
    c.push_back(GateOp::ry(kQubitA, -2.0 * alpha));
    c.push_back(GateOp::rz(kQubitA, -2.0 * theta));
    return c;
}

HardwareCycleResult hardware_single_cycle(const std::vector<VariationalParams> &steps, double gamma0, double theta,
                                          const DensityMatrix &target, const RunProfile &profile, Rng &rng) {
    if (profile.runs < 1) {
        throw std::invalid_argument("run profile needs at least one run");
    }
    profile.noise.validate();
    ComplexMatrix h0 = bare_hamiltonian();
    ComplexMatrix hint = interaction_hamiltonian();
    Circuit prep = ansatz_circuit(steps);

    HardwareCycleResult out;
    double sum_work = 0, sum_ed = 0, sum_ec = 0;
    for (int run = 0; run < profile.runs; ++run) {
        Rng run_rng = rng.substream(static_cast<uint64_t>(run));
        TomographyResult t1 = tomography(prep, profile.shots, profile.noise, profile.estimator, run_rng);
        const DensityMatrix &rho_i = t1.rho_estimate;

        // The estimate generally has a small y component; the extraction
        // angle uses only x and z of qubit A.
        BlochVector b = bloch_coordinates(partial_trace(rho_i, Subsystem::A));
        b.y = 0;
        double alpha = single_qubit_extraction_unitary(b, theta).alpha;

        TomographyResult t3 = tomography(extraction_circuit(steps, alpha, theta), profile.shots, profile.noise,
                                         profile.estimator, run_rng);
        const DensityMatrix &rho_iii = t3.rho_estimate;

        sum_work += rho_i.expect(h0) - rho_iii.expect(h0);
        sum_ed += -gamma0 * rho_i.expect(hint);
        sum_ec += gamma0 * rho_iii.expect(hint);
        if (run == 0) {
            out.alpha = alpha;
            out.fidelity_to_target = fidelity(rho_i, target);
        }
        out.rho_i_estimates.push_back(rho_i);
        out.rho_iii_estimates.push_back(rho_iii);
    }
    double n = static_cast<double>(profile.runs);
    out.extracted_work = sum_work / n;
    out.e_disconnect = sum_ed / n;
    out.e_connect = sum_ec / n;
    double cost = out.e_disconnect + out.e_connect;
    if (cost > kNumericPolicy.degenerate_cycle_cost) {
        out.efficiency = out.extracted_work / cost;
    }
    return out;
}

}  // namespace jqb
