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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "jqb/ergotropy/ergotropy.h"
#include "jqb/model/hamiltonian.h"
#include "random_states.h"

namespace jqb {
namespace {

using std::numbers::pi;
using testing::haar_unitary;
using testing::random_density;
using testing::random_hermitian;

DensityMatrix battery_marginal(double gamma0, double t) {
    return partial_trace(jqb_gibbs_state(gamma0, 1.0 / t), Subsystem::A);
}

TEST(PassiveState, ThermalStateIsPassive) {
    std::mt19937_64 gen(11);
    ComplexMatrix h = random_hermitian(4, gen);
    DensityMatrix tau = gibbs_state(h, 0.9);
    PassiveState ps = passive_state(tau, h);
    EXPECT_LT(max_abs(ps.state.matrix() - tau.matrix()), 1e-12);
    EXPECT_NEAR(ergotropy(tau, h).value, 0.0, 1e-12);
}

TEST(PassiveState, InvertedQubit) {
    DensityMatrix up = DensityMatrix::pure(ComplexVector::Unit(2, 0));
    PassiveState ps = passive_state(up, pauli(Pauli::Z));
    DensityMatrix down = DensityMatrix::pure(ComplexVector::Unit(2, 1));
    EXPECT_LT(max_abs(ps.state.matrix() - down.matrix()), 1e-15);
    EXPECT_NEAR(ergotropy(up, pauli(Pauli::Z)).value, 2.0, 1e-15);
}

TEST(PassiveState, UnitaryMapsStateAndCommutesWithH) {
    std::mt19937_64 gen(12);
    for (int rep = 0; rep < 20; ++rep) {
        DensityMatrix rho(random_density(4, gen));
        ComplexMatrix h = random_hermitian(4, gen);
        PassiveState ps = passive_state(rho, h);
        const ComplexMatrix &u = ps.unitary.matrix;
        EXPECT_LT(max_abs(u * u.adjoint() - identity(4)), 1e-12);
        EXPECT_LT(max_abs(rho.conjugated(u).matrix() - ps.state.matrix()), 1e-12);
        EXPECT_LT(max_abs(ps.state.matrix() * h - h * ps.state.matrix()), 1e-12);
    }
}

// Minimum of sum_k lambda_k e_{perm(k)} over all pairings.
double best_pairing(Eigen::VectorXd lam, Eigen::VectorXd e) {
    std::vector<int> perm(static_cast<size_t>(lam.size()));
    std::iota(perm.begin(), perm.end(), 0);
    double best = 1e300;
    do {
        double s = 0;
        for (size_t k = 0; k < perm.size(); ++k) {
            s += lam(static_cast<Eigen::Index>(k)) * e(perm[k]);
        }
        best = std::min(best, s);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

TEST(PassiveState, HaarSamplingBoundsPassiveEnergyFromAbove) {
    std::mt19937_64 gen(13);
    ComplexMatrix h0 = bare_hamiltonian();
    for (int rep = 0; rep < 5; ++rep) {
        DensityMatrix rho(random_density(4, gen));
        double passive = passive_state(rho, h0).state.expect(h0);
        double haar_min = 1e300;
        for (int s = 0; s < 500; ++s) {
            haar_min = std::min(haar_min, rho.conjugated(haar_unitary(4, gen)).expect(h0));
        }
        EXPECT_GE(haar_min, passive - 1e-12);
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> er(rho.matrix());
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> eh(h0);
        EXPECT_NEAR(passive, best_pairing(er.eigenvalues(), eh.eigenvalues()), 1e-12);
    }
}

TEST(Ergotropy, NonNegativeAndEnergyDecomposition) {
    std::mt19937_64 gen(14);
    for (int rep = 0; rep < 10000; ++rep) {
        Eigen::Index n = 2 + rep % 3;
        DensityMatrix rho(random_density(n, gen));
        ComplexMatrix h = random_hermitian(n, gen);
        ErgotropyReport r = ergotropy(rho, h);
        ASSERT_GE(r.value, -1e-10);
        ASSERT_NEAR(rho.expect(h), r.value + r.passive_state.expect(h), 1e-12);
    }
}

TEST(Ergotropy, DimensionMismatchThrows) {
    EXPECT_THROW(ergotropy(DensityMatrix::maximally_mixed(4), pauli(Pauli::Z)), std::invalid_argument);
    EXPECT_THROW(global_ergotropy(DensityMatrix::maximally_mixed(2), pauli(Pauli::Z)), std::invalid_argument);
    EXPECT_THROW(concurrence(DensityMatrix::maximally_mixed(2)), std::invalid_argument);
}

TEST(Ergotropy, BatteryQubitIsZPlusR) {
    for (double g : {0.3, 0.8, 2.0, -1.5}) {
        for (double t : {0.1, 0.5, 3.0}) {
            DensityMatrix rho = battery_marginal(g, t);
            BlochVector b = bloch_coordinates(rho);
            EXPECT_NEAR(ergotropy(rho, pauli(Pauli::Z)).value, b.z + b.r(), 1e-12);
        }
    }
}

TEST(ExtractionUnitary, PassiveQubitGivesIdentity) {
    ExtractionUnitary u = single_qubit_extraction_unitary(BlochVector{0, 0, -0.4}, 0.0);
    EXPECT_NEAR(u.alpha, 0.0, 1e-15);
    EXPECT_LT(max_abs(u.matrix - identity(2)), 1e-15);
    ExtractionUnitary mixed = single_qubit_extraction_unitary(BlochVector{0, 0, 0}, 0.7);
    EXPECT_LT(max_abs(mixed.matrix - identity(2)), 1e-15);
    EXPECT_THROW(single_qubit_extraction_unitary(BlochVector{0.1, 0.2, 0.1}, 0.0), std::invalid_argument);
}

TEST(ExtractionUnitary, MapsBatteryQubitToPassiveDiagonal) {
    DensityMatrix rho = battery_marginal(0.8, 0.5);
    BlochVector b = bloch_coordinates(rho);
    double r = b.r();
    for (double theta : {0.0, pi / 4, pi / 2}) {
        ExtractionUnitary u = single_qubit_extraction_unitary(b, theta);
        ComplexMatrix out = u.matrix * rho.matrix() * u.matrix.adjoint();
        EXPECT_NEAR(out(0, 0).real(), 0.5 * (1 - r), 1e-12);
        EXPECT_NEAR(out(1, 1).real(), 0.5 * (1 + r), 1e-12);
        EXPECT_NEAR(std::abs(out(0, 1)), 0.0, 1e-12);
        double work = rho.expect(pauli(Pauli::Z)) - std::real((pauli(Pauli::Z) * out).trace());
        EXPECT_NEAR(work, b.z + r, 1e-12);
    }
}

TEST(ExtractionUnitary, DoubleAngleIdentities) {
    for (double g = -3.0; g <= 3.0; g += 0.25) {
        for (double t : {0.2, 0.5, 2.0}) {
            BlochVector b = bloch_coordinates(battery_marginal(g, t));
            if (b.r() <= 1e-12) {
                continue;
            }
            double alpha = single_qubit_extraction_unitary(b, 0.0).alpha;
            EXPECT_NEAR(std::cos(2 * alpha), -b.z / b.r(), 1e-12);
            EXPECT_NEAR(std::sin(2 * alpha), -b.x / b.r(), 1e-12);
            EXPECT_GT(alpha, -pi);
            EXPECT_LE(alpha, 0.0);
        }
    }
}

TEST(ExtractionUnitary, PauliConjugationExpansions) {
    ComplexMatrix sx = pauli(Pauli::X), sy = pauli(Pauli::Y), sz = pauli(Pauli::Z);
    for (double theta = 0; theta < pi; theta += pi / 7) {
        for (double alpha = -pi; alpha <= 0; alpha += pi / 9) {
            Complex ep = std::polar(1.0, theta), em = std::conj(ep);
            ComplexMatrix u(2, 2);
            u << ep * std::cos(alpha), ep * std::sin(alpha), -em * std::sin(alpha), em * std::cos(alpha);
            double c2a = std::cos(2 * alpha), s2a = std::sin(2 * alpha);
            double c2t = std::cos(2 * theta), s2t = std::sin(2 * theta);
            EXPECT_LT(max_abs(u.adjoint() * sz * u - (c2a * sz + s2a * sx)), 1e-12);
            EXPECT_LT(max_abs(u.adjoint() * sx * u - (c2t * (c2a * sx - s2a * sz) + s2t * sy)), 1e-12);
            EXPECT_LT(max_abs(u.adjoint() * sy * u - (-s2t * (c2a * sx - s2a * sz) + c2t * sy)), 1e-12);
        }
    }
}

TEST(ExtractionUnitary, PurityInvariant) {
    std::mt19937_64 gen(15);
    for (int rep = 0; rep < 50; ++rep) {
        DensityMatrix rho(random_density(2, gen));
        for (double theta : {0.0, 1.0, 2.5}) {
            ExtractionUnitary u = qubit_extraction_unitary(rho, pauli(Pauli::Z), theta);
            EXPECT_LT(max_abs(u.matrix * u.matrix.adjoint() - identity(2)), 1e-12);
            DensityMatrix out = rho.conjugated(u.matrix);
            EXPECT_NEAR(bloch_coordinates(out).r(), bloch_coordinates(rho).r(), 1e-12);
            // Generic route also reaches the passive state.
            EXPECT_NEAR(out.expect(pauli(Pauli::Z)), -bloch_coordinates(rho).r(), 1e-12);
        }
    }
}

TEST(LocalErgotropy, TwiceSingleOnBattery) {
    ComplexMatrix sz = qubit_hamiltonian();
    for (double g : {-2.0, 0.4, 0.8, 1.7}) {
        DensityMatrix tau = jqb_gibbs_state(g, 2.0);
        double s = single_ergotropy(tau, sz, 0.0).report.value;
        EXPECT_NEAR(local_ergotropy(tau, sz, sz, 0.3, 0.9).report.value, 2.0 * s, 1e-12);
    }
}

TEST(LocalErgotropy, PassiveProductGivesZero) {
    DensityMatrix q = gibbs_state(pauli(Pauli::Z), 1.3);
    DensityMatrix prod(tensor_product(q.matrix(), q.matrix()));
    EXPECT_NEAR(local_ergotropy(prod, pauli(Pauli::Z), pauli(Pauli::Z), 0, 0).report.value, 0.0, 1e-12);
}

TEST(LocalErgotropy, AfterStateKeepsCorrelations) {
    DensityMatrix tau = jqb_gibbs_state(0.8, 2.0);
    ComplexMatrix sz = qubit_hamiltonian();
    LocalExtraction ex = local_ergotropy(tau, sz, sz, 0.0, 0.0);
    EXPECT_GT(max_abs(ex.after_state.matrix() - ex.report.passive_state.matrix()), 1e-3);
    for (Subsystem s : {Subsystem::A, Subsystem::B}) {
        ComplexMatrix m = partial_trace(ex.after_state, s).matrix();
        EXPECT_NEAR(std::abs(m(0, 1)), 0.0, 1e-12);
        EXPECT_GE(m(1, 1).real(), m(0, 0).real());
    }
}

TEST(LocalErgotropy, ThetaInvariantValueButNotState) {
    DensityMatrix tau = jqb_gibbs_state(1.1, 1.5);
    ComplexMatrix sz = qubit_hamiltonian();
    LocalExtraction ref = local_ergotropy(tau, sz, sz, 0, 0);
    for (double theta = 0.1; theta < pi; theta += 0.3) {
        LocalExtraction ex = local_ergotropy(tau, sz, sz, theta, 0);
        EXPECT_NEAR(ex.report.value, ref.report.value, 1e-12);
        EXPECT_NEAR(single_ergotropy(tau, sz, theta).report.value, 0.5 * ref.report.value, 1e-12);
        EXPECT_GT(max_abs(ex.after_state.matrix() - ref.after_state.matrix()), 1e-6);
    }
}

TEST(GlobalErgotropy, ZeroOnOwnGibbsState) {
    ComplexMatrix h0 = bare_hamiltonian();
    EXPECT_NEAR(global_ergotropy(gibbs_state(h0, 0.7), h0).value, 0.0, 1e-12);
    ComplexMatrix h = jqb_hamiltonian(0.8);
    EXPECT_NEAR(ergotropy(gibbs_state(h, 2.0), h).value, 0.0, 1e-12);
}

TEST(GlobalErgotropy, DominatesLocal) {
    ComplexMatrix h0 = bare_hamiltonian(), sz = qubit_hamiltonian();
    for (double g = -5; g <= 5; g += 0.5) {
        for (double t : {0.1, 0.5, 1.0, 4.0}) {
            DensityMatrix tau = jqb_gibbs_state(g, 1.0 / t);
            double l = local_ergotropy(tau, sz, sz, 0, 0).report.value;
            EXPECT_GE(global_ergotropy(tau, h0).value - l, -1e-10);
        }
    }
}

TEST(ErgotropicGap, MatchesDirectDifference) {
    ComplexMatrix h0 = bare_hamiltonian(), sz = qubit_hamiltonian();
    EXPECT_NEAR(ergotropic_gap(0.0, 2.0), 0.0, 1e-12);
    for (double g : {0.8, -1.3, 3.0}) {
        DensityMatrix tau = jqb_gibbs_state(g, 2.0);
        double direct = global_ergotropy(tau, h0).value - local_ergotropy(tau, sz, sz, 0, 0).report.value;
        EXPECT_NEAR(ergotropic_gap(g, 2.0), direct, 1e-10);
    }
    EXPECT_GT(ergotropic_gap(0.8, 1e3), 1e-3);
    EXPECT_THROW(ergotropic_gap(0.8, 0.0), std::invalid_argument);
}

// Concurrence from the non-Hermitian product rho * rho~: its eigenvalues are
// the squares of the mu_k.
double concurrence_non_hermitian(const ComplexMatrix &rho) {
    ComplexMatrix yy = tensor_product(pauli(Pauli::Y), pauli(Pauli::Y));
    ComplexMatrix tilde = yy * rho.conjugate() * yy;
    Eigen::ComplexEigenSolver<ComplexMatrix> es(rho * tilde);
    std::vector<double> mu;
    for (Eigen::Index k = 0; k < 4; ++k) {
        mu.push_back(std::sqrt(std::max(0.0, es.eigenvalues()(k).real())));
    }
    std::sort(mu.rbegin(), mu.rend());
    return std::max(0.0, mu[0] - mu[1] - mu[2] - mu[3]);
}

ComplexMatrix werner(double p) {
    ComplexVector phi(4);
    phi << 1, 0, 0, 1;
    phi /= std::sqrt(2.0);
    return p * phi * phi.adjoint() + (1 - p) * 0.25 * identity(4);
}

TEST(Concurrence, BellAndProduct) {
    EntanglementReport bell = concurrence(DensityMatrix(werner(1.0)));
    EXPECT_NEAR(bell.concurrence, 1.0, 1e-10);
    EXPECT_NEAR(bell.entanglement_of_formation, 1.0, 1e-10);
    std::mt19937_64 gen(16);
    for (int rep = 0; rep < 20; ++rep) {
        DensityMatrix prod(tensor_product(random_density(2, gen), random_density(2, gen)));
        EntanglementReport e = concurrence(prod);
        EXPECT_NEAR(e.concurrence, 0.0, 1e-10);
        EXPECT_NEAR(e.entanglement_of_formation, 0.0, 1e-9);
    }
}

TEST(Concurrence, WernerTwoRoutes) {
    ComplexMatrix w = werner(0.6);
    double c = concurrence(DensityMatrix(w)).concurrence;
    EXPECT_NEAR(c, concurrence_non_hermitian(w), 1e-10);
    EXPECT_NEAR(c, 0.5 * (3 * 0.6 - 1), 1e-10);
    std::mt19937_64 gen(17);
    for (int rep = 0; rep < 30; ++rep) {
        ComplexMatrix rho = random_density(4, gen);
        EXPECT_NEAR(concurrence(DensityMatrix(rho)).concurrence, concurrence_non_hermitian(rho), 1e-8);
    }
}

TEST(Concurrence, FormationMonotoneInConcurrence) {
    double prev_c = -1, prev_e = -1;
    for (double p = 0.0; p <= 1.0; p += 0.02) {
        EntanglementReport e = concurrence(DensityMatrix(werner(p)));
        if (e.concurrence == 0) {
            EXPECT_EQ(e.entanglement_of_formation, 0.0);
        }
        EXPECT_GE(e.concurrence, prev_c - 1e-12);
        EXPECT_GE(e.entanglement_of_formation, prev_e - 1e-12);
        prev_c = e.concurrence;
        prev_e = e.entanglement_of_formation;
    }
}

TEST(LocalErgotropy, ZzModelOneSideActiveOtherPassive) {
    // H = sz_A + 2 sz_B + 1.5 sz_A sz_B at beta = 2 is diagonal: the thermal
    // marginal of A is active, that of B is already passive.
    ComplexMatrix ha = pauli(Pauli::Z), hb = 2.0 * pauli(Pauli::Z);
    ComplexMatrix h = tensor_product(ha, identity(2)) + tensor_product(identity(2), hb) +
                      1.5 * pauli2(Pauli::Z, Pauli::Z);
    DensityMatrix tau = gibbs_state(h, 2.0);

    // Populations from the Boltzmann weights of the four product levels,
    // index 2a + b with a, b = 0 for spin up (sz = +1).
    double w[4], z = 0;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            double sa = a == 0 ? 1 : -1, sb = b == 0 ? 1 : -1;
            w[2 * a + b] = std::exp(-2.0 * (sa + 2 * sb + 1.5 * sa * sb));
            z += w[2 * a + b];
        }
    }
    double up_a = (w[0] + w[1]) / z, up_b = (w[0] + w[2]) / z;
    double oracle_a = std::max(0.0, 2.0 * (2 * up_a - 1));
    double oracle_b = std::max(0.0, 4.0 * (2 * up_b - 1));
    ASSERT_GT(up_a, 0.5);
    ASSERT_LT(up_b, 0.5);

    LocalExtraction ex = local_ergotropy(tau, ha, hb, 0.0, 0.0);
    EXPECT_NEAR(ergotropy(partial_trace(tau, Subsystem::A), ha).value, oracle_a, 1e-12);
    EXPECT_NEAR(ergotropy(partial_trace(tau, Subsystem::B), hb).value, oracle_b, 1e-12);
    EXPECT_EQ(oracle_b, 0.0);
    EXPECT_NEAR(ex.report.value, oracle_a, 1e-12);
    EXPECT_LT(max_abs(partial_trace(ex.after_state, Subsystem::B).matrix() - partial_trace(tau, Subsystem::B).matrix()),
              1e-12);
}

TEST(Protocol, NamesRoundTrip) {
    for (Protocol p : {Protocol::Single, Protocol::Local, Protocol::Global, Protocol::LocalUncorrelated}) {
        EXPECT_EQ(parse_protocol(protocol_name(p)), p);
    }
    EXPECT_EQ(parse_protocol("u"), Protocol::LocalUncorrelated);
    EXPECT_THROW(parse_protocol("both"), std::invalid_argument);
}

}  // namespace
}  // namespace jqb
