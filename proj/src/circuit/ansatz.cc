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

#include "jqb/circuit/ansatz.h"

#include <cmath>
#include <numbers>

namespace jqb {

std::array<double, VariationalParams::kSize> VariationalParams::flat() const {
    return {xi[0], xi[1], xi[2], xi[3], zeta[0], zeta[1], zeta[2]};
}

VariationalParams VariationalParams::from_flat(const double *v) {
    VariationalParams p;
    for (size_t k = 0; k < 4; ++k) {
        p.xi[k] = v[k];
    }
    for (size_t k = 0; k < 3; ++k) {
        p.zeta[k] = v[4 + k];
    }
    return p;
}

bool VariationalParams::in_bounds() const {
    for (double v : flat()) {
        if (!(std::abs(v) <= std::numbers::pi)) {
            return false;
        }
    }
    return true;
}

Circuit tfd_zero_circuit() {
    return {GateOp::h(kQubitA), GateOp::h(kQubitB), GateOp::cnot(kQubitA, kQubitAp), GateOp::cnot(kQubitB, kQubitBp)};
}

StateVector tfd_zero_state() {
    return run_circuit(tfd_zero_circuit());
}

Circuit u_intra_circuit(const std::array<double, 4> &xi) {
    Circuit c;
    for (int q = 0; q < kTfdQubits; ++q) {
        c.push_back(GateOp::rx(q, xi[0]));
    }
    for (int q = 0; q < kTfdQubits; ++q) {
        c.push_back(GateOp::rz(q, xi[1]));
    }
    c.push_back(GateOp::rxx(kQubitA, kQubitB, xi[2]));
    c.push_back(GateOp::rxx(kQubitAp, kQubitBp, xi[2]));
    c.push_back(GateOp::ryy(kQubitA, kQubitB, xi[3]));
    c.push_back(GateOp::ryy(kQubitAp, kQubitBp, xi[3]));
    return c;
}

Circuit u_inter_circuit(const std::array<double, 3> &zeta) {
    return {
        GateOp::rxx(kQubitA, kQubitAp, zeta[0]), GateOp::rxx(kQubitB, kQubitBp, zeta[0]),
        GateOp::ryy(kQubitA, kQubitAp, zeta[1]), GateOp::ryy(kQubitB, kQubitBp, zeta[1]),
        GateOp::rzz(kQubitA, kQubitAp, zeta[2]), GateOp::rzz(kQubitB, kQubitBp, zeta[2]),
    };
}

StateVector apply_u_intra(StateVector psi, const std::array<double, 4> &xi) {
    for (const GateOp &g : u_intra_circuit(xi)) {
        apply_gate(psi, g);
    }
    return psi;
}

StateVector apply_u_inter(StateVector psi, const std::array<double, 3> &zeta) {
    for (const GateOp &g : u_inter_circuit(zeta)) {
        apply_gate(psi, g);
    }
    return psi;
}

Circuit ansatz_circuit(const std::vector<VariationalParams> &steps) {
    Circuit c = tfd_zero_circuit();
    for (const VariationalParams &p : steps) {
        Circuit intra = u_intra_circuit(p.xi);
        Circuit inter = u_inter_circuit(p.zeta);
        c.insert(c.end(), intra.begin(), intra.end());
        c.insert(c.end(), inter.begin(), inter.end());
    }
    return c;
}

Circuit ansatz_circuit(const VariationalParams &params) {
    return ansatz_circuit(std::vector<VariationalParams>{params});
}

DensityMatrix ansatz_marginal(const std::vector<VariationalParams> &steps) {
    return reduced_system_state(run_circuit(ansatz_circuit(steps)));
}

DensityMatrix ansatz_marginal(const VariationalParams &params) {
    return reduced_system_state(run_circuit(ansatz_circuit(params)));
}

}  // namespace jqb
