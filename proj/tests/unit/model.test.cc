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

#include <cmath>
#include <numbers>

#include "jqb/model/cycle.h"
#include "jqb/model/flux.h"
#include "jqb/model/hamiltonian.h"
#include "jqb/model/sweep.h"

namespace jqb {
namespace {

using std::numbers::pi;

const Protocol kAll[] = {Protocol::Single, Protocol::Local, Protocol::Global, Protocol::LocalUncorrelated};

TEST(Hamiltonian, DecoupledIsDiagonal) {
    ComplexMatrix h = jqb_hamiltonian(0.0);
    ComplexMatrix want = ComplexMatrix::Zero(4, 4);
    want(0, 0) = 2;
    want(3, 3) = -2;
    EXPECT_LT(max_abs(h - want), 1e-15);
}

TEST(Hamiltonian, TracelessAndSwapSymmetric) {
    ComplexMatrix swap = swap_operator();
    for (double g = -3; g <= 3; g += 0.7) {
        ComplexMatrix h = jqb_hamiltonian(g);
        EXPECT_NEAR(std::abs(h.trace()), 0.0, 1e-14);
        EXPECT_LT(max_abs(swap * h * swap - h), 1e-15);
        EXPECT_LT(hermiticity_residual(h), 1e-15);
    }
}

TEST(Spectrum, ClosedFormDecoupled) {
    auto e = spectrum_closed_form(0.0).ascending();
    const double want[] = {-2, 0, 0, 2};
    for (size_t k = 0; k < 4; ++k) {
        EXPECT_NEAR(e[k], want[k], 1e-12);
    }
}

TEST(Spectrum, ClosedFormMatchesEigenSolver) {
    for (int i = 0; i < 200; ++i) {
        double g = -10.0 + 20.0 * i / 199.0;
        auto e = spectrum_closed_form(g).ascending();
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(jqb_hamiltonian(g));
        double sum = 0;
        bool has_zero = false;
        for (size_t k = 0; k < 4; ++k) {
            EXPECT_NEAR(e[k], es.eigenvalues()(static_cast<Eigen::Index>(k)), 1e-10) << "gamma0=" << g;
            sum += e[k];
            has_zero = has_zero || e[k] == 0.0;
        }
        EXPECT_NEAR(sum, 0.0, 1e-10);
        EXPECT_TRUE(has_zero);
    }
}

TEST(Spectrum, BranchLabels) {
    // n = 1 is the lowest level and n = 0 the highest.
    for (double g : {0.3, 0.8, 2.0, -1.0}) {
        ClosedFormSpectrum s = spectrum_closed_form(g);
        auto asc = s.ascending();
        EXPECT_NEAR(s.levels[2], asc[0], 1e-12);
        EXPECT_NEAR(s.levels[1], asc[3], 1e-12);
    }
}

TEST(Disconnection, TwoRoutesAgree) {
    EXPECT_NEAR(disconnection_energy(jqb_gibbs_state(0.0, 2.0), 0.0), 0.0, 1e-15);
    EXPECT_NEAR(disconnection_energy(jqb_gibbs_state(0.8, 0.0), 0.8), 0.0, 1e-14);
    for (double g : {0.8, -2.0, 5.0}) {
        DensityMatrix tau = jqb_gibbs_state(g, 2.0);
        EXPECT_NEAR(disconnection_energy(tau, g), -g * tau.expect(interaction_hamiltonian()), 1e-12);
        JqbParams p = JqbParams::at_temperature(g, 0.5, 0.0, Protocol::Single);
        EXPECT_NEAR(run_cycle(p).e_disconnect, disconnection_energy(tau, g), 1e-12);
    }
}

TEST(Connection, ClosedFormsMatchStateRoute) {
    for (double g = -6; g <= 6; g += 0.75) {
        for (double t : {0.1, 0.5, 2.0, 10.0}) {
            for (double theta = 0; theta < pi; theta += pi / 8) {
                for (Protocol p : kAll) {
                    CycleEnergetics c = run_cycle(JqbParams::at_temperature(g, t, theta, p));
                    const DensityMatrix &tau = c.states[0];
                    EXPECT_NEAR(connection_energy(p, tau, g, theta), c.e_connect, 1e-12)
                        << protocol_name(p) << " g=" << g << " T=" << t << " theta=" << theta;
                }
            }
        }
    }
}

TEST(Connection, GlobalVanishesLocalVanishesAtQuarterPi) {
    for (double g : {-2.0, 0.4, 0.8, 3.0}) {
        for (double t : {0.1, 0.5, 5.0}) {
            EXPECT_NEAR(run_cycle(JqbParams::at_temperature(g, t, 0.7, Protocol::Global)).e_connect, 0.0, 1e-12);
            EXPECT_NEAR(run_cycle(JqbParams::at_temperature(g, t, pi / 4, Protocol::Local)).e_connect, 0.0, 1e-12);
        }
    }
}

TEST(Connection, AffineInCosTwoTheta) {
    for (Protocol p : {Protocol::Single, Protocol::Local}) {
        for (double g : {0.4, 0.8, -1.5}) {
            // Least-squares fit of E_c = a + b cos(2 theta) over 8 phases.
            Eigen::MatrixXd design(8, 2);
            Eigen::VectorXd y(8);
            for (int k = 0; k < 8; ++k) {
                double theta = k * pi / 8;
                design(k, 0) = 1;
                design(k, 1) = std::cos(2 * theta);
                y(k) = run_cycle(JqbParams::at_temperature(g, 0.5, theta, p)).e_connect;
            }
            Eigen::VectorXd coef = design.colPivHouseholderQr().solve(y);
            EXPECT_LT((design * coef - y).cwiseAbs().maxCoeff(), 1e-12);
        }
    }
}

TEST(Connection, RejectsAsymmetricState) {
    ComplexMatrix m = tensor_product(gibbs_state(pauli(Pauli::Z), 1.0).matrix(), 0.5 * identity(2));
    EXPECT_THROW(connection_energy(Protocol::Single, DensityMatrix(m), 0.5, 0.0), std::invalid_argument);
    EXPECT_THROW(connection_energy(Protocol::Single, DensityMatrix::maximally_mixed(2), 0.5, 0.0),
                 std::invalid_argument);
}

TEST(Cycle, SwapSymmetryAndGibbsIdentity) {
    const Pauli ps[] = {Pauli::X, Pauli::Y, Pauli::Z};
    for (double g : {0.4, 0.8, -2.5}) {
        DensityMatrix tau = jqb_gibbs_state(g, 2.0);
        for (Pauli a : ps) {
            EXPECT_NEAR(tau.expect(pauli2(a, Pauli::I)), tau.expect(pauli2(Pauli::I, a)), 1e-12);
            for (Pauli b : ps) {
                EXPECT_NEAR(tau.expect(pauli2(a, b)), tau.expect(pauli2(b, a)), 1e-12);
            }
        }
        BlochVector bv = bloch_coordinates(partial_trace(tau, Subsystem::A));
        double alpha = single_qubit_extraction_unitary(bv, 0.0).alpha;
        EXPECT_NEAR(bv.x * std::cos(2 * alpha) - bv.z * std::sin(2 * alpha), 0.0, 1e-10);
    }
}

TEST(Cycle, ProtocolRelations) {
    for (double g = -10; g <= 10; g += 0.5) {
        if (g == 0) {
            continue;
        }
        for (double t : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
            for (double theta : {0.0, pi / 4, pi / 2}) {
                CycleEnergetics s = run_cycle(JqbParams::at_temperature(g, t, theta, Protocol::Single));
                CycleEnergetics l = run_cycle(JqbParams::at_temperature(g, t, theta, Protocol::Local));
                CycleEnergetics gl = run_cycle(JqbParams::at_temperature(g, t, theta, Protocol::Global));
                EXPECT_NEAR(l.extracted_work, 2 * s.extracted_work, 1e-10);
                EXPECT_GE(s.extracted_work, -1e-10);
                EXPECT_LE(l.extracted_work, gl.extracted_work + 1e-10);
                for (const CycleEnergetics *c : {&s, &l, &gl}) {
                    ASSERT_TRUE(c->efficiency.has_value());
                    EXPECT_GE(*c->efficiency, -1e-10);
                    EXPECT_LE(*c->efficiency, 1 + 1e-10);
                    EXPECT_GE(c->e_disconnect - c->extracted_work + c->e_connect, -1e-10);
                    EXPECT_NEAR(*c->efficient_work, *c->efficiency * c->extracted_work, 1e-15);
                }
            }
        }
    }
}

TEST(Cycle, UncorrelatedMatchesLocalAtQuarterPi) {
    for (double g : {0.8, 0.4, 2.0, -1.0}) {
        CycleEnergetics u = run_cycle(JqbParams::at_temperature(g, 0.5, 0.0, Protocol::LocalUncorrelated));
        CycleEnergetics l = run_cycle(JqbParams::at_temperature(g, 0.5, pi / 4, Protocol::Local));
        EXPECT_NEAR(u.extracted_work, l.extracted_work, 1e-12);
        EXPECT_NEAR(*u.efficiency, *l.efficiency, 1e-10);
        EXPECT_NEAR(u.e_connect, 0.0, 1e-12);
    }
}

TEST(Cycle, StrokeStates) {
    CycleEnergetics c = run_cycle(JqbParams::at_temperature(0.8, 0.5, 0.3, Protocol::Local));
    ASSERT_EQ(c.states.size(), 4u);
    DensityMatrix tau = jqb_gibbs_state(0.8, 2.0);
    EXPECT_LT(max_abs(c.states[0].matrix() - tau.matrix()), 1e-15);
    EXPECT_LT(max_abs(c.states[1].matrix() - tau.matrix()), 1e-15);
    EXPECT_LT(max_abs(c.states[2].matrix() - c.states[3].matrix()), 1e-15);
    EXPECT_NEAR(tau.expect(bare_hamiltonian()) - c.states[2].expect(bare_hamiltonian()), c.extracted_work, 1e-12);
}

TEST(Cycle, KnownSingleValues) {
    // Regression values of the single-qubit ergotropy at T = 0.5.
    EXPECT_NEAR(run_cycle(JqbParams::at_temperature(0.4, 0.5, 0, Protocol::Single)).extracted_work, 0.110060, 1e-6);
    EXPECT_NEAR(run_cycle(JqbParams::at_temperature(0.8, 0.5, 0, Protocol::Single)).extracted_work, 0.326341, 1e-6);
    EXPECT_NEAR(run_cycle(JqbParams::at_temperature(2.0, 0.5, 0, Protocol::Single)).extracted_work, 0.628188, 1e-6);
}

TEST(Cycle, GlobalClosedForm) {
    for (double g = -10; g <= 10; g += 0.5) {
        for (double t : {0.1, 0.5, 2.0, 10.0}) {
            double def = run_cycle(JqbParams::at_temperature(g, t, 0, Protocol::Global)).extracted_work;
            EXPECT_NEAR(global_ergotropy_closed_form(g, 1.0 / t), def, 1e-10);
        }
    }
}

TEST(Cycle, DegenerateCostIsTagged) {
    CycleEnergetics c = run_cycle(JqbParams::at_temperature(0.0, 0.5, 0.0, Protocol::Single));
    EXPECT_EQ(c.status, CycleStatus::DegenerateCost);
    EXPECT_FALSE(c.efficiency.has_value());
    EXPECT_FALSE(c.efficient_work.has_value());
}

TEST(Cycle, ParamsValidation) {
    JqbParams p;
    p.gamma0 = 0.8;
    EXPECT_THROW(run_cycle(p), std::invalid_argument);
    p.temperature = 0.5;
    p.beta = 2.0;
    EXPECT_THROW(run_cycle(p), std::invalid_argument);
    p.beta.reset();
    p.theta = pi;
    EXPECT_THROW(run_cycle(p), std::invalid_argument);
    p.theta = 0;
    p.temperature = -1;
    EXPECT_THROW(run_cycle(p), std::invalid_argument);
    JqbParams q;
    q.gamma0 = 0.8;
    q.beta = 2.0;
    EXPECT_NEAR(run_cycle(q).extracted_work,
                run_cycle(JqbParams::at_temperature(0.8, 0.5, 0, Protocol::Single)).extracted_work, 1e-15);
}

TEST(Cycle, EfficiencyExtremesAtZeroAndHalfPi) {
    for (Protocol p : {Protocol::Single, Protocol::Local}) {
        double e0 = *run_cycle(JqbParams::at_temperature(0.8, 0.5, 0, p)).efficiency;
        double e1 = *run_cycle(JqbParams::at_temperature(0.8, 0.5, pi / 2, p)).efficiency;
        for (double theta = 0.05; theta < pi; theta += 0.1) {
            double e = *run_cycle(JqbParams::at_temperature(0.8, 0.5, theta, p)).efficiency;
            EXPECT_LE(e, std::max(e0, e1) + 1e-12);
            EXPECT_GE(e, std::min(e0, e1) - 1e-12);
        }
    }
}

TEST(Cycle, LocalCanBeatGlobal) {
    double best = -1e300;
    for (double g = 0.5; g <= 5.0 + 1e-9; g += 0.01) {
        CycleEnergetics l = run_cycle(JqbParams::at_temperature(g, 0.5, 0, Protocol::Local));
        CycleEnergetics gl = run_cycle(JqbParams::at_temperature(g, 0.5, 0, Protocol::Global));
        best = std::max(best, *l.efficient_work - *gl.efficient_work);
    }
    EXPECT_GT(best, 1e-6);
}

TEST(Grid, LinearAndLog) {
    std::vector<double> g = linear_grid(-10, 10, 0.05);
    EXPECT_EQ(g.size(), 401u);
    EXPECT_EQ(g[200], 0.0);
    EXPECT_DOUBLE_EQ(g.back(), 10.0);
    std::vector<double> t = log_grid(0.01, 10, 200);
    ASSERT_EQ(t.size(), 200u);
    EXPECT_DOUBLE_EQ(t.front(), 0.01);
    EXPECT_NEAR(t.back(), 10.0, 1e-12);
    EXPECT_NEAR(t[1] / t[0], t[199] / t[198], 1e-9);
}

TEST(Sweep, SinglePointEqualsRunCycle) {
    SweepGrid grid{{0.8}, {0.5}, {0.3}, {Protocol::Local}};
    std::vector<CycleEnergetics> rows = sweep(grid);
    ASSERT_EQ(rows.size(), 1u);
    CycleEnergetics c = run_cycle(JqbParams::at_temperature(0.8, 0.5, 0.3, Protocol::Local));
    EXPECT_EQ(rows[0].extracted_work, c.extracted_work);
    EXPECT_EQ(rows[0].e_connect, c.e_connect);
    EXPECT_EQ(*rows[0].efficiency, *c.efficiency);
}

TEST(Sweep, OrderAndThreadIndependence) {
    SweepGrid grid{{-1.0, 0.5, 2.0}, {0.2, 1.0}, {0.0, pi / 4}, {Protocol::Single, Protocol::Global}};
    std::vector<CycleEnergetics> one = sweep(grid, {1, false});
    std::vector<CycleEnergetics> four = sweep(grid, {4, false});
    ASSERT_EQ(one.size(), grid.size());
    ASSERT_EQ(four.size(), grid.size());
    size_t i = 0;
    for (double g : grid.gamma0) {
        for (double t : grid.temperature) {
            for (double th : grid.theta) {
                for (Protocol p : grid.protocols) {
                    EXPECT_EQ(one[i].gamma0, g);
                    EXPECT_NEAR(one[i].temperature(), t, 1e-15);
                    EXPECT_EQ(one[i].theta, th);
                    EXPECT_EQ(one[i].protocol, p);
                    EXPECT_EQ(one[i].extracted_work, four[i].extracted_work);
                    EXPECT_EQ(one[i].e_connect, four[i].e_connect);
                    EXPECT_TRUE(one[i].states.empty());
                    ++i;
                }
            }
        }
    }
}

bool dominates(const CycleEnergetics &a, const CycleEnergetics &b) {
    return a.extracted_work >= b.extracted_work && *a.efficiency >= *b.efficiency &&
           (a.extracted_work > b.extracted_work || *a.efficiency > *b.efficiency);
}

TEST(Pareto, BruteForceOracleAndIdempotence) {
    SweepGrid grid{linear_grid(-3, 3, 0.25), {0.5}, {0.0, pi / 4, pi / 2}, {Protocol::Single}};
    std::vector<CycleEnergetics> rows;
    for (const auto &r : sweep(grid)) {
        if (r.efficiency) {
            rows.push_back(r);
        }
    }
    std::vector<CycleEnergetics> front = pareto_front(rows);
    size_t expected = 0;
    for (const auto &r : rows) {
        bool dominated = false;
        for (const auto &o : rows) {
            dominated = dominated || dominates(o, r);
        }
        expected += dominated ? 0 : 1;
    }
    EXPECT_EQ(front.size(), expected);
    EXPECT_EQ(pareto_front(front).size(), front.size());
    EXPECT_EQ(pareto_front(std::vector<CycleEnergetics>{rows[3]}).size(), 1u);
    // Exact duplicates are both kept.
    std::vector<CycleEnergetics> twice = {front[0], front[0]};
    EXPECT_EQ(pareto_front(twice).size(), 2u);
    EXPECT_THROW(pareto_front(std::vector<CycleEnergetics>{}), std::invalid_argument);
}

TEST(Pareto, LocalFrontOnZeroPhasePositiveCoupling) {
    std::vector<double> gammas;
    for (double g : linear_grid(-10, 10, 0.05)) {
        if (g != 0) {
            gammas.push_back(g);
        }
    }
    SweepGrid grid{gammas, {0.5}, {0.0, pi / 4, pi / 2}, {Protocol::Local}};
    for (const auto &r : pareto_front(sweep(grid), Protocol::Local)) {
        EXPECT_EQ(r.theta, 0.0);
        EXPECT_GT(r.gamma0, 0.0);
    }
}

TEST(Flux, Coupling) {
    FluxConfig cfg{1.0, 86.0, 0.515, 0.0};
    EXPECT_NEAR(qubit_splitting(cfg), 86.0 * 0.015, 1e-12);
    EXPECT_NEAR(flux_to_coupling(cfg), 1.0 / (86.0 * 0.015), 1e-12);
    EXPECT_NEAR(flux_to_coupling(cfg), 0.78, 0.01);
    cfg.flux_ratio = 0.5;
    EXPECT_NEAR(flux_to_coupling(cfg), 0.0, 1e-12);
    cfg.flux_ratio = 0.3;
    double g = flux_to_coupling(cfg);
    cfg.flux_ratio = 2.3;
    EXPECT_NEAR(flux_to_coupling(cfg), g, 1e-12);
    EXPECT_TRUE(flux_warnings(cfg).empty());
    cfg.e_j = 30;
    EXPECT_FALSE(flux_warnings(cfg).empty());
    cfg.n_g = 0.5;
    EXPECT_THROW(flux_to_coupling(cfg), std::invalid_argument);
}

}  // namespace
}  // namespace jqb
