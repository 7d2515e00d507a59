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

// Acceptance suite: one PASS/FAIL line per criterion, detail lines indented
// below it. Exit status is 0 only if every criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "jqb/circuit/hardware_cycle.h"
#include "jqb/model/cycle.h"
#include "jqb/model/hamiltonian.h"
#include "jqb/model/sweep.h"
#include "jqb/optimizer/infidelity.h"

namespace {

using namespace jqb;
using std::numbers::pi;

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;

    void check(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
            if (details.size() < 12) {
                details.push_back("violated: " + what);
            }
        }
    }
    void note(const std::string &what) {
        details.push_back(what);
    }
};

std::string fmt(const char *f, double a) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

std::string fmt(const char *f, double a, double b) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

std::string fmt(const char *f, double a, double b, double c) {
    char buf[200];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

std::vector<double> coupling_grid() {
    std::vector<double> g;
    for (int k = -20; k <= 20; ++k) {
        if (k != 0) {
            g.push_back(0.5 * k);
        }
    }
    return g;
}

const double kTemps[] = {0.1, 0.5, 1.0, 2.0, 5.0, 10.0};
const double kThetas[] = {0.0, pi / 4, pi / 2};

CycleEnergetics cycle(double g, double t, double theta, Protocol p) {
    return run_cycle(JqbParams::at_temperature(g, t, theta, p));
}

Outcome criterion_protocol_relations() {
    Outcome o;
    for (double g : coupling_grid()) {
        for (double t : kTemps) {
            for (double th : kThetas) {
                CycleEnergetics s = cycle(g, t, th, Protocol::Single);
                CycleEnergetics l = cycle(g, t, th, Protocol::Local);
                CycleEnergetics gl = cycle(g, t, th, Protocol::Global);
                std::string at = fmt("g0=%g T=%g theta=%g", g, t, th);
                o.check(std::abs(l.extracted_work - 2 * s.extracted_work) <= 1e-10, "E(l) = 2E(s) at " + at);
                o.check(s.extracted_work >= -1e-10, "E(s) >= 0 at " + at);
                o.check(l.extracted_work <= gl.extracted_work + 1e-10, "E(l) <= E(g) at " + at);
                o.check(std::abs(gl.e_connect) <= 1e-12, "Ec(g) = 0 at " + at);
                for (const CycleEnergetics *c : {&s, &l, &gl}) {
                    std::string who = std::string(protocol_name(c->protocol)) + " " + at;
                    o.check(c->efficiency.has_value(), "efficiency defined for " + who);
                    if (c->efficiency) {
                        o.check(*c->efficiency >= -1e-10 && *c->efficiency <= 1 + 1e-10, "0 <= eta <= 1 for " + who);
                    }
                    o.check(c->e_disconnect - c->extracted_work + c->e_connect >= -1e-10, "energy balance for " + who);
                }
            }
        }
    }
    return o;
}

Outcome criterion_closed_forms() {
    Outcome o;
    ComplexMatrix h0 = bare_hamiltonian(), sz = qubit_hamiltonian();
    double worst_global = 0, worst_gap = 0, worst_spectrum = 0;
    for (double g : coupling_grid()) {
        for (double t : kTemps) {
            DensityMatrix tau = jqb_gibbs_state(g, 1.0 / t);
            double eg = global_ergotropy(tau, h0).value;
            double el = local_ergotropy(tau, sz, sz, 0, 0).report.value;
            worst_global = std::max(worst_global, std::abs(global_ergotropy_closed_form(g, 1.0 / t) - eg));
            worst_gap = std::max(worst_gap, std::abs(ergotropic_gap(g, 1.0 / t) - (eg - el)));
        }
    }
    for (int i = 0; i < 200; ++i) {
        double g = -10.0 + 20.0 * i / 199.0;
        auto closed = spectrum_closed_form(g).ascending();
        EigenDecomposition e = hermitian_eig(jqb_hamiltonian(g));
        double sum = 0;
        bool zero = false;
        for (size_t k = 0; k < 4; ++k) {
            worst_spectrum = std::max(worst_spectrum, std::abs(closed[k] - e.eigenvalues(static_cast<Eigen::Index>(k))));
            sum += closed[k];
            zero = zero || std::abs(closed[k]) <= 1e-10;
        }
        o.check(std::abs(sum) <= 1e-10, fmt("spectrum sums to 0 at g0=%g", g));
        o.check(zero, fmt("0 in spectrum at g0=%g", g));
    }
    o.check(worst_global <= 1e-10, fmt("global ergotropy closed form, max diff %.3g", worst_global));
    o.check(worst_gap <= 1e-10, fmt("ergotropic gap closed form, max diff %.3g", worst_gap));
    o.check(worst_spectrum <= 1e-10, fmt("closed-form spectrum, max diff %.3g", worst_spectrum));
    o.note(fmt("max diffs: global %.2g, gap %.2g, spectrum %.2g", worst_global, worst_gap, worst_spectrum));
    return o;
}

Outcome criterion_phase_structure() {
    Outcome o;
    for (double g : coupling_grid()) {
        for (double t : kTemps) {
            std::string at = fmt("g0=%g T=%g", g, t);
            for (Protocol p : {Protocol::Single, Protocol::Local}) {
                std::string who = std::string(protocol_name(p)) + " " + at;
                double e0 = cycle(g, t, 0, p).extracted_work;
                Eigen::MatrixXd design(8, 2);
                Eigen::VectorXd ec(8);
                for (int k = 0; k < 8; ++k) {
                    double th = k * pi / 8;
                    CycleEnergetics c = cycle(g, t, th, p);
                    o.check(std::abs(c.extracted_work - e0) <= 1e-12, "theta invariance of E for " + who);
                    design(k, 0) = 1;
                    design(k, 1) = std::cos(2 * th);
                    ec(k) = c.e_connect;
                }
                Eigen::VectorXd coef = design.colPivHouseholderQr().solve(ec);
                double resid = (design * coef - ec).cwiseAbs().maxCoeff();
                o.check(resid < 1e-12, fmt("Ec affine in cos 2theta, residual %.3g, ", resid) + who);
            }
            CycleEnergetics lq = cycle(g, t, pi / 4, Protocol::Local);
            o.check(std::abs(lq.e_connect) <= 1e-12, "Ec(l)(pi/4) = 0 at " + at);
            CycleEnergetics u = cycle(g, t, 0, Protocol::LocalUncorrelated);
            o.check(u.efficiency && lq.efficiency && std::abs(*u.efficiency - *lq.efficiency) <= 1e-10,
                    "uncorrelated eta = eta(l)(pi/4) at " + at);
        }
    }
    return o;
}

Outcome criterion_front_structure() {
    Outcome o;
    std::vector<double> gammas;
    for (double g : linear_grid(-10, 10, 0.05)) {
        if (g != 0) {
            gammas.push_back(g);
        }
    }
    SweepGrid grid{gammas, {0.5}, {0.0, pi / 4, pi / 2}, {Protocol::Single, Protocol::Local}};
    std::vector<CycleEnergetics> rows = sweep(grid);
    for (Protocol p : {Protocol::Single, Protocol::Local}) {
        std::vector<CycleEnergetics> front = pareto_front(rows, p);
        size_t off = 0;
        for (const auto &r : front) {
            bool on = r.theta == 0.0 && r.gamma0 > 0;
            if (!on) {
                ++off;
                o.check(false, std::string(protocol_name(p)) +
                                   fmt(" front row off theta=0, g0>0: g0=%g theta=%g eta=%.9f", r.gamma0, r.theta,
                                       *r.efficiency));
            }
        }
        o.note(std::string(protocol_name(p)) + ": " + std::to_string(front.size()) + " front rows, " +
               std::to_string(off) + " off theta=0, g0>0");
    }
    std::vector<double> temps = log_grid(0.1, 10.0, 100);
    double prev = 1e300;
    for (double t : temps) {
        double e = cycle(0.8, t, 0, Protocol::Single).extracted_work;
        o.check(e < prev, fmt("ergotropy at g0=0.8 decreases with T, T=%g", t));
        prev = e;
    }
    return o;
}

Outcome criterion_local_beats_global() {
    Outcome o;
    double best = -1e300, at = 0;
    for (int k = 0; k <= 450; ++k) {
        double g = 0.5 + 0.01 * k;
        CycleEnergetics l = cycle(g, 0.5, 0, Protocol::Local);
        CycleEnergetics gl = cycle(g, 0.5, 0, Protocol::Global);
        double margin = *l.efficiency * l.extracted_work - *gl.efficiency * gl.extracted_work;
        if (margin > best) {
            best = margin;
            at = g;
        }
    }
    o.check(best > 1e-6, fmt("max margin %.3g", best));
    o.note(fmt("largest margin eta(l)E(l) - eta(g)E(g) = %.4f at g0 = %.2f", best, at));
    return o;
}

double formation_at(double g, double t) {
    return concurrence(jqb_gibbs_state(g, 1.0 / t)).entanglement_of_formation;
}

Outcome criterion_entanglement() {
    Outcome o;
    ComplexVector phi(4);
    phi << 1, 0, 0, 1;
    phi /= std::sqrt(2.0);
    double bell = concurrence(DensityMatrix::pure(phi)).entanglement_of_formation;
    o.check(std::abs(bell - 1) <= 1e-10, fmt("E_F(Bell) = %.12f", bell));
    DensityMatrix prod(tensor_product(gibbs_state(pauli(Pauli::Z), 0.7).matrix(),
                                      gibbs_state(pauli(Pauli::X), 1.9).matrix()));
    o.check(concurrence(prod).entanglement_of_formation <= 1e-10, "E_F(product) = 0");
    double prev = -1;
    for (double g : {0.5, 1.0, 2.0}) {
        double lo = 0.01, hi = 10.0;
        bool bracket = formation_at(g, lo) > 0 && formation_at(g, hi) == 0;
        o.check(bracket, fmt("entangled at T=0.01 and separable at T=10 for g0=%g", g));
        if (!bracket) {
            continue;
        }
        while (hi - lo > 1e-3) {
            double mid = 0.5 * (lo + hi);
            (formation_at(g, mid) > 0 ? lo : hi) = mid;
        }
        bool zero_above = true;
        for (double t = hi; t <= 10.0; t += 0.01) {
            zero_above = zero_above && formation_at(g, t) == 0;
        }
        o.check(zero_above, fmt("E_F = 0 above threshold for g0=%g", g));
        o.check(hi >= prev, fmt("threshold non-decreasing at g0=%g", g));
        o.note(fmt("g0=%.1f: threshold temperature %.4f", g, hi));
        prev = hi;
    }
    return o;
}

// BO fits shared by the two TFD criteria, keyed by gamma0.
std::map<double, TfdFit> &fits() {
    static std::map<double, TfdFit> cache;
    return cache;
}

const TfdFit &fit_for(double g) {
    auto it = fits().find(g);
    if (it == fits().end()) {
        BayesOptions opt;
        opt.budget = 600;
        opt.seed = 7;
        it = fits().emplace(g, fit_tfd(jqb_gibbs_state(g, 2.0), 1, opt)).first;
    }
    return it->second;
}

Outcome criterion_tfd_noiseless() {
    Outcome o;
    for (double g : {0.4, 0.8, 1.2, 1.6, 2.0}) {
        const TfdFit &f = fit_for(g);
        o.check(f.fidelity >= 0.95, fmt("fidelity %.4f at g0=%g", f.fidelity, g));
        o.note(fmt("g0=%.1f: fidelity %.5f (", g, f.fidelity) + f.trace.convergence.describe() + ")");
    }
    return o;
}

Outcome criterion_tomography() {
    Outcome o;
    std::mt19937_64 gen(1);
    std::uniform_real_distribution<double> u(-pi, pi);
    Rng rng(5);
    double worst = 1;
    for (int rep = 0; rep < 50; ++rep) {
        VariationalParams p;
        for (double &v : p.xi) {
            v = u(gen);
        }
        for (double &v : p.zeta) {
            v = u(gen);
        }
        Circuit prep = ansatz_circuit(p);
        TomographyResult t = tomography(prep, 0, NoiseModel{}, Estimator::ExactExpectation, rng);
        worst = std::min(worst, fidelity(t.rho_estimate, ansatz_marginal(p)));
        if (rep < 5) {
            Rng a(100 + static_cast<uint64_t>(rep)), b(100 + static_cast<uint64_t>(rep));
            TomographyResult x = tomography(prep, 500, NoiseModel::hardware(), Estimator::LinearInversionProjected, a);
            TomographyResult y = tomography(prep, 500, NoiseModel::hardware(), Estimator::LinearInversionProjected, b);
            o.check(x.counts == y.counts && x.rho_estimate.matrix() == y.rho_estimate.matrix(),
                    "seeded shot run reproducible");
        }
    }
    o.check(worst >= 1 - 1e-10, fmt("exact round-trip fidelity %.14f", worst));

    const double p = 0.05;
    const uint64_t shots = 10000;
    NoiseModel readout{0, 0, p};
    double sum = 0;
    for (int rep = 0; rep < 100; ++rep) {
        Histogram h = measure_pauli_setting(StateVector(kTfdQubits), {PauliBasis::Z, PauliBasis::Z}, shots, readout, rng);
        sum += static_cast<double>(static_cast<int64_t>(h[0] + h[1]) - static_cast<int64_t>(h[2] + h[3])) /
               static_cast<double>(shots);
    }
    double mean = sum / 100, want = 1 - 2 * p;
    double sigma = std::sqrt((1 - want * want) / (100.0 * static_cast<double>(shots)));
    o.check(std::abs(mean - want) <= 3 * sigma, fmt("readout bias: mean %.6f vs %.6f", mean, want));
    o.note(fmt("readout bias <sz> = %.6f, expected %.6f, 3 sigma = %.6f", mean, want, 3 * sigma));
    return o;
}

Outcome criterion_noisy_end_to_end() {
    Outcome o;
    std::vector<double> grid = linear_grid(0.4, 2.0, 0.2);
    size_t good = 0;
    RunProfile prof = RunProfile::hardware();
    for (size_t i = 0; i < grid.size(); ++i) {
        double g = grid[i];
        const TfdFit &f = fit_for(g);
        Rng rng(11 + i);
        HardwareCycleResult hw = hardware_single_cycle(f.steps, g, 0.0, jqb_gibbs_state(g, 2.0), prof, rng);
        CycleEnergetics ideal = cycle(g, 0.5, 0.0, Protocol::Single);
        Rng unused(0);
        RunProfile exact{NoiseModel::noiseless(), 1, 1, Estimator::ExactExpectation};
        HardwareCycleResult ansatz = hardware_single_cycle(f.steps, g, 0.0, jqb_gibbs_state(g, 2.0), exact, unused);
        double de = std::abs(hw.extracted_work - ideal.extracted_work) / ideal.extracted_work;
        double deta = hw.efficiency ? std::abs(*hw.efficiency - *ideal.efficiency) / *ideal.efficiency : 1e300;
        bool ok = de <= 0.20 && deta <= 0.40;
        good += ok ? 1 : 0;
        char buf[320];
        std::snprintf(buf, sizeof buf,
                      "g0=%.1f: E %.4f vs %.4f (%+.1f%%), eta %.4f vs %.4f (%+.1f%%), fit F %.4f, tomo F %.4f, "
                      "noiseless ansatz E %.4f eta %.4f%s",
                      g,
                      hw.extracted_work, ideal.extracted_work,
                      100 * (hw.extracted_work - ideal.extracted_work) / ideal.extracted_work,
                      hw.efficiency.value_or(NAN), *ideal.efficiency,
                      100 * (hw.efficiency.value_or(NAN) - *ideal.efficiency) / *ideal.efficiency, f.fidelity,
                      hw.fidelity_to_target, ansatz.extracted_work, ansatz.efficiency.value_or(NAN),
                      ok ? "" : "  <- outside band");
        o.note(buf);
    }
    double frac = static_cast<double>(good) / static_cast<double>(grid.size());
    o.check(frac >= 0.8, fmt("%.1f%% of grid points inside the bands (need 80%%)", 100 * frac));
    o.note(fmt("%.0f of %.0f points inside both bands", static_cast<double>(good), static_cast<double>(grid.size())));
    return o;
}

Outcome criterion_single_range() {
    Outcome o;
    double lo = 1e300, hi = -1e300;
    for (double g : linear_grid(0.4, 2.0, 0.01)) {
        double e = cycle(g, 0.5, 0, Protocol::Single).extracted_work;
        lo = std::min(lo, e);
        hi = std::max(hi, e);
        o.check(e >= 0.15 && e <= 0.7, fmt("E(s) = %.4f at g0=%g", e, g));
    }
    o.note(fmt("E(s) over g0 in [0.4, 2] spans [%.4f, %.4f]", lo, hi));
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char *name;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {"1 exact protocol relations", criterion_protocol_relations},
        {"2 closed forms vs definitions", criterion_closed_forms},
        {"3 phase structure", criterion_phase_structure},
        {"4 Pareto fronts and temperature monotonicity", criterion_front_structure},
        {"5 local efficient work exceeds global", criterion_local_beats_global},
        {"6 entanglement of formation", criterion_entanglement},
        {"7 TFD preparation, noiseless", criterion_tfd_noiseless},
        {"8 tomography", criterion_tomography},
        {"9 noisy end-to-end cycle", criterion_noisy_end_to_end},
        {"10 single-qubit ergotropy range", criterion_single_range},
    };
    int failed = 0;
    for (const Criterion &c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o = c.run();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s  criterion %s  (%.1f s)\n", o.pass ? "PASS" : "FAIL", c.name, secs);
        for (const auto &d : o.details) {
            std::printf("      %s\n", d.c_str());
        }
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
