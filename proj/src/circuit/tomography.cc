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

#include "jqb/circuit/tomography.h"

#include <numbers>
#include <stdexcept>

namespace jqb {

PauliSetting tomography_setting(size_t index) {
    if (index >= kNumSettings) {
        throw std::invalid_argument("tomography setting index out of range");
    }
    return {static_cast<PauliBasis>(index / 3), static_cast<PauliBasis>(index % 3)};
}

std::string_view setting_label(PauliSetting s) {
    static constexpr std::string_view kLabels[] = {"xx", "xy", "xz", "yx", "yy", "yz", "zx", "zy", "zz"};
    return kLabels[static_cast<int>(s.a) * 3 + static_cast<int>(s.b)];
}

std::string_view estimator_name(Estimator e) {
    return e == Estimator::ExactExpectation ? "exact" : "linear-inversion";
}

namespace {

enum Stream : uint64_t { kFaults = 0, kOutcomes = 1, kReadout = 2 };

void add_basis_gates(Circuit &c, int q, PauliBasis b) {
    if (b == PauliBasis::X) {
        c.push_back(GateOp::h(q));
    } else if (b == PauliBasis::Y) {
        c.push_back(GateOp::rx(q, std::numbers::pi / 2));
    }
}

// Distribution of (a, b) = bits 0, 1 of the register, indexed 2a + b.
std::array<double, 4> ab_distribution(const StateVector &psi) {
    std::array<double, 4> p{};
    const ComplexVector &amp = psi.amplitudes();
    for (Eigen::Index i = 0; i < amp.size(); ++i) {
        int a = static_cast<int>(i & 1);
        int b = static_cast<int>((i >> 1) & 1);
        p[static_cast<size_t>(2 * a + b)] += std::norm(amp(i));
    }
    return p;
}

uint32_t sample(const std::array<double, 4> &p, Rng &rng) {
    double total = p[0] + p[1] + p[2] + p[3];
    double u = rng.uniform() * total;
    double acc = 0;
    for (uint32_t k = 0; k < 3; ++k) {
        acc += p[k];
        if (u < acc) {
            return k;
        }
    }
    return 3;
}

void require_shots(uint64_t shots) {
    if (shots == 0) {
        throw std::invalid_argument("shot count must be at least 1");
    }
}

double pauli_sign(uint32_t outcome, bool on_a, bool on_b) {
    int parity = 0;
    if (on_a) {
        parity ^= static_cast<int>((outcome >> 1) & 1);
    }
    if (on_b) {
        parity ^= static_cast<int>(outcome & 1);
    }
    return parity ? -1.0 : 1.0;
}

}  // namespace

Circuit measurement_basis_circuit(PauliSetting s) {
    Circuit c;
    add_basis_gates(c, kQubitA, s.a);
    add_basis_gates(c, kQubitB, s.b);
    return c;
}

Histogram measure_pauli_setting(const StateVector &psi, PauliSetting s, uint64_t shots, const NoiseModel &noise,
                                Rng &rng) {
    require_shots(shots);
    noise.validate();
    uint64_t seed = rng.engine()();
    Rng outcomes(derive_seed(seed, kOutcomes));
    Rng readout(derive_seed(seed, kReadout));
    StateVector rotated = psi;
    for (const GateOp &g : measurement_basis_circuit(s)) {
        apply_gate(rotated, g);
    }
    std::array<double, 4> p = ab_distribution(rotated);
    Histogram h{};
    for (uint64_t k = 0; k < shots; ++k) {
        h[apply_readout_noise(sample(p, outcomes), 2, noise, readout)]++;
    }
    return h;
}

Histogram measure_pauli_setting(const Circuit &prep, PauliSetting s, uint64_t shots, const NoiseModel &noise,
                                Rng &rng) {
    require_shots(shots);
    noise.validate();
    uint64_t seed = rng.engine()();
    Rng faults(derive_seed(seed, kFaults));
    Rng outcomes(derive_seed(seed, kOutcomes));
    Rng readout(derive_seed(seed, kReadout));
    Circuit full = prep;
    Circuit basis = measurement_basis_circuit(s);
    full.insert(full.end(), basis.begin(), basis.end());
    std::array<double, 4> ideal = ab_distribution(run_circuit(full));
    Histogram h{};
    for (uint64_t k = 0; k < shots; ++k) {
        std::vector<Fault> f = sample_faults(full, noise, faults);
        uint32_t outcome = f.empty() ? sample(ideal, outcomes) : sample(ab_distribution(run_with_faults(full, f)), outcomes);
        h[apply_readout_noise(outcome, 2, noise, readout)]++;
    }
    return h;
}

PauliTable pauli_table_from_counts(const std::array<Histogram, kNumSettings> &counts) {
    PauliTable t{};
    t[0][0] = 1;
    std::array<double, 4> single_a{}, single_b{};
    for (size_t k = 0; k < kNumSettings; ++k) {
        PauliSetting s = tomography_setting(k);
        const Histogram &h = counts[k];
        double total = static_cast<double>(h[0] + h[1] + h[2] + h[3]);
        if (total == 0) {
            throw std::invalid_argument("empty histogram in tomography counts");
        }
        double ea = 0, eb = 0, eab = 0;
        for (uint32_t o = 0; o < 4; ++o) {
            double w = static_cast<double>(h[o]) / total;
            ea += w * pauli_sign(o, true, false);
            eb += w * pauli_sign(o, false, true);
            eab += w * pauli_sign(o, true, true);
        }
        size_t ia = static_cast<size_t>(s.a) + 1;
        size_t ib = static_cast<size_t>(s.b) + 1;
        t[ia][ib] = eab;
        single_a[ia] += ea / 3.0;
        single_b[ib] += eb / 3.0;
    }
    for (size_t i = 1; i < 4; ++i) {
        t[i][0] = single_a[i];
        t[0][i] = single_b[i];
    }
    return t;
}

PauliTable pauli_table_exact(const DensityMatrix &rho) {
    static constexpr Pauli kP[4] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
    PauliTable t{};
    for (size_t i = 0; i < 4; ++i) {
        for (size_t j = 0; j < 4; ++j) {
            t[i][j] = rho.expect(pauli2(kP[i], kP[j]));
        }
    }
    return t;
}

ComplexMatrix linear_inversion(const PauliTable &t) {
    static constexpr Pauli kP[4] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
    ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
    for (size_t i = 0; i < 4; ++i) {
        for (size_t j = 0; j < 4; ++j) {
            rho += 0.25 * t[i][j] * pauli2(kP[i], kP[j]);
        }
    }
    return rho;
}

namespace {

TomographyResult from_counts(std::array<Histogram, kNumSettings> counts, uint64_t shots) {
    DensityMatrix rho = DensityMatrix::project(linear_inversion(pauli_table_from_counts(counts)));
    return TomographyResult{std::move(rho), counts, shots, Estimator::LinearInversionProjected};
}

TomographyResult exact(const DensityMatrix &marginal) {
    DensityMatrix rho = DensityMatrix::project(linear_inversion(pauli_table_exact(marginal)));
    return TomographyResult{std::move(rho), {}, 0, Estimator::ExactExpectation};
}

}  // namespace

TomographyResult tomography(const Circuit &prep, uint64_t shots_per_setting, const NoiseModel &noise,
                            Estimator estimator, Rng &rng) {
    if (estimator == Estimator::ExactExpectation) {
        return exact(reduced_system_state(run_circuit(prep)));
    }
    require_shots(shots_per_setting);
    std::array<Histogram, kNumSettings> counts{};
    for (size_t k = 0; k < kNumSettings; ++k) {
        counts[k] = measure_pauli_setting(prep, tomography_setting(k), shots_per_setting, noise, rng);
    }
    return from_counts(counts, shots_per_setting);
}

TomographyResult tomography(const StateVector &psi, uint64_t shots_per_setting, const NoiseModel &noise,
                            Estimator estimator, Rng &rng) {
    if (estimator == Estimator::ExactExpectation) {
        return exact(reduced_system_state(psi));
    }
    require_shots(shots_per_setting);
    std::array<Histogram, kNumSettings> counts{};
    for (size_t k = 0; k < kNumSettings; ++k) {
        counts[k] = measure_pauli_setting(psi, tomography_setting(k), shots_per_setting, noise, rng);
    }
    return from_counts(counts, shots_per_setting);
}

}  // namespace jqb
