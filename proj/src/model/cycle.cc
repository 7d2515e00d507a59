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

#include "jqb/model/cycle.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "jqb/model/hamiltonian.h"

namespace jqb {

JqbParams JqbParams::at_temperature(double gamma0, double temperature, double theta, Protocol protocol) {
    JqbParams p;
    p.gamma0 = gamma0;
    p.temperature = temperature;
    p.theta = theta;
    p.protocol = protocol;
    return p;
}

void JqbParams::validate() const {
    if (!std::isfinite(gamma0)) {
        throw std::invalid_argument("gamma0 must be finite");
    }
    if (temperature.has_value() == beta.has_value()) {
        throw std::invalid_argument("exactly one of temperature and beta must be given");
    }
    if (temperature && !(std::isfinite(*temperature) && *temperature > 0)) {
        throw std::invalid_argument("temperature must be finite and > 0");
    }
    if (beta && !(std::isfinite(*beta) && *beta > 0)) {
        throw std::invalid_argument("beta must be finite and > 0");
    }
    if (!(theta >= 0 && theta < std::numbers::pi)) {
        throw std::invalid_argument("theta must lie in [0, pi)");
    }
}

double JqbParams::resolved_beta() const {
    return beta ? *beta : 1.0 / *temperature;
}

double JqbParams::resolved_temperature() const {
    return temperature ? *temperature : 1.0 / *beta;
}

namespace {

struct PauliMoments {
    double x = 0;
    double z = 0;
    double xx = 0;
    double yy = 0;
    double zz = 0;
    double xz = 0;  // <sx_A sz_B>
    double zx = 0;  // <sz_A sx_B>
};

void require_two_qubit(const DensityMatrix &rho) {
    if (rho.dim() != 4) {
        throw std::invalid_argument("expected a two-qubit state");
    }
}

PauliMoments moments(const DensityMatrix &tau) {
    PauliMoments m;
    m.x = tau.expect(pauli2(Pauli::X, Pauli::I));
    m.z = tau.expect(pauli2(Pauli::Z, Pauli::I));
    m.xx = tau.expect(pauli2(Pauli::X, Pauli::X));
    m.yy = tau.expect(pauli2(Pauli::Y, Pauli::Y));
    m.zz = tau.expect(pauli2(Pauli::Z, Pauli::Z));
    m.xz = tau.expect(pauli2(Pauli::X, Pauli::Z));
    m.zx = tau.expect(pauli2(Pauli::Z, Pauli::X));
    return m;
}

void require_symmetric_real(const DensityMatrix &tau) {
    constexpr double tol = 1e-10;
    const Pauli ps[] = {Pauli::X, Pauli::Y, Pauli::Z};
    for (Pauli a : ps) {
        if (std::abs(tau.expect(pauli2(a, Pauli::I)) - tau.expect(pauli2(Pauli::I, a))) > tol) {
            throw std::invalid_argument("connection_energy: state is not exchange symmetric");
        }
        for (Pauli b : ps) {
            if (std::abs(tau.expect(pauli2(a, b)) - tau.expect(pauli2(b, a))) > tol) {
                throw std::invalid_argument("connection_energy: state is not exchange symmetric");
            }
        }
    }
    if (std::abs(tau.expect(pauli2(Pauli::Y, Pauli::I))) > kNumericPolicy.real_state_y) {
        throw std::invalid_argument("connection_energy: marginal has a y component");
    }
}

// cos 2alpha and sin 2alpha of the qubit extraction unitary. A maximally
// mixed marginal uses the identity (alpha = 0).
std::pair<double, double> double_alpha(double x, double z) {
    double r = std::hypot(x, z);
    if (r < kNumericPolicy.maximally_mixed_radius) {
        return {1.0, 0.0};
    }
    return {-z / r, -x / r};
}

}  // namespace

double disconnection_energy(const DensityMatrix &tau, double gamma0) {
    require_two_qubit(tau);
    double x = tau.expect(pauli2(Pauli::X, Pauli::I));
    double xx = tau.expect(pauli2(Pauli::X, Pauli::X));
    double yy = tau.expect(pauli2(Pauli::Y, Pauli::Y));
    return gamma0 * (2.0 * x + xx - yy);
}

double connection_energy(Protocol protocol, const DensityMatrix &tau, double gamma0, double theta) {
    require_two_qubit(tau);
    if (protocol == Protocol::Global) {
        return 0.0;
    }
    require_symmetric_real(tau);
    PauliMoments m = moments(tau);
    if (protocol == Protocol::LocalUncorrelated) {
        m.xx = m.x * m.x;
        m.yy = 0;
        m.zz = m.z * m.z;
        m.xz = m.x * m.z;
        m.zx = m.z * m.x;
    }
    auto [c2a, s2a] = double_alpha(m.x, m.z);
    bool identity_unitary = std::hypot(m.x, m.z) < kNumericPolicy.maximally_mixed_radius;
    double c2t = identity_unitary ? 1.0 : std::cos(2.0 * theta);
    if (protocol == Protocol::Single) {
        return -gamma0 * (m.x + c2t * (c2a * (m.x + m.xx) - m.yy - s2a * (m.z + m.zx)));
    }
    double s4a = 2.0 * s2a * c2a;
    return -gamma0 * c2t * (c2a * c2a * m.xx - m.yy + s2a * s2a * m.zz - s4a * m.xz);
}

double connection_energy_from_state(const DensityMatrix &rho_iii, double gamma0) {
    require_two_qubit(rho_iii);
    return gamma0 * rho_iii.expect(interaction_hamiltonian());
}

double global_ergotropy_closed_form(double gamma0, double beta) {
    if (!std::isfinite(beta) || beta <= 0) {
        throw std::invalid_argument("global_ergotropy_closed_form needs a finite beta > 0");
    }
    std::array<double, 4> e = spectrum_closed_form(gamma0).ascending();
    double z = 0;
    for (double ek : e) {
        z += std::exp(-beta * (ek - e[0]));
    }
    double sz = jqb_gibbs_state(gamma0, beta).expect(pauli2(Pauli::Z, Pauli::I));
    return 2.0 * sz + 2.0 * (1.0 - std::exp(-beta * (e[3] - e[0]))) / z;
}

CycleEnergetics run_cycle(const JqbParams &params) {
    params.validate();
    CycleEnergetics out;
    out.protocol = params.protocol;
    out.gamma0 = params.gamma0;
    out.beta = params.resolved_beta();
    out.theta = params.theta;

    ComplexMatrix h0 = bare_hamiltonian();
    ComplexMatrix hq = qubit_hamiltonian();
    DensityMatrix rho_i = jqb_gibbs_state(params.gamma0, out.beta);
    DensityMatrix rho_ii = rho_i;
    if (params.protocol == Protocol::LocalUncorrelated) {
        rho_ii = DensityMatrix(tensor_product(partial_trace(rho_i, Subsystem::A).matrix(),
                                              partial_trace(rho_i, Subsystem::B).matrix()));
    }

    std::optional<DensityMatrix> rho_iii;
    switch (params.protocol) {
        case Protocol::Single: {
            LocalExtraction ex = single_ergotropy(rho_ii, hq, params.theta);
            out.extracted_work = ex.report.value;
            rho_iii = std::move(ex.after_state);
            break;
        }
        case Protocol::Local:
        case Protocol::LocalUncorrelated: {
            LocalExtraction ex = local_ergotropy(rho_ii, hq, hq, params.theta, 0.0);
            out.extracted_work = ex.report.value;
            rho_iii = std::move(ex.after_state);
            break;
        }
        case Protocol::Global: {
            PassiveState ps = passive_state(rho_ii, h0);
            out.extracted_work = global_ergotropy(rho_ii, h0).value;
            rho_iii = std::move(ps.state);
            break;
        }
    }

    // Disconnection happens on the Gibbs state; for LocalUncorrelated the
    // correlations are lost only afterwards.
    out.e_disconnect = -params.gamma0 * rho_i.expect(interaction_hamiltonian());
    out.e_connect = connection_energy_from_state(*rho_iii, params.gamma0);

    double cost = out.e_disconnect + out.e_connect;
    if (cost <= kNumericPolicy.degenerate_cycle_cost) {
        out.status = CycleStatus::DegenerateCost;
    } else {
        out.efficiency = out.extracted_work / cost;
        out.efficient_work = *out.efficiency * out.extracted_work;
    }
    out.states = {rho_i, rho_ii, *rho_iii, *rho_iii};
    return out;
}

}  // namespace jqb
