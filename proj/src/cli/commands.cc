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

#include "jqb/cli/commands.h"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <iostream>
#include <json.hpp>
#include <numbers>
#include <set>

#include "jqb/circuit/hardware_cycle.h"
#include "jqb/cli/records.h"
#include "jqb/model/flux.h"
#include "jqb/model/hamiltonian.h"
#include "jqb/optimizer/infidelity.h"

namespace jqb::cli {

namespace {

struct Common {
    std::string format = "csv";
    std::string output;
    std::string config;
    uint64_t seed = 0;
};

void add_common(CLI::App *sub, Common &c) {
    sub->add_option("--format", c.format, "Output format: csv or jsonl");
    sub->add_option("--output,-o", c.output, "Output file (default stdout; relative to $JQB_OUTPUT_DIR if set)");
    sub->add_option("--config", c.config, "JSON file with option values; flags override it");
    sub->add_option("--seed", c.seed, "Master random seed");
}

// Keys of the config file that were applied, by option name.
using ConfigKeys = std::set<std::string>;

std::string json_to_option_text(const nlohmann::json &v, const std::string &key) {
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_boolean()) {
        return v.get<bool>() ? "true" : "false";
    }
    if (v.is_number()) {
        return v.dump();
    }
    if (v.is_array()) {
        std::string out;
        for (size_t i = 0; i < v.size(); ++i) {
            if (v[i].is_array() || v[i].is_object()) {
                throw UsageError("config key '" + key + "': nested values are not supported");
            }
            out += (i ? "," : "") + json_to_option_text(v[i], key);
        }
        return out;
    }
    throw UsageError("config key '" + key + "' has an unsupported value");
}

// Reads --config (if any) of the selected subcommand and installs its values
// as option defaults, so that flags given on the command line win.
ConfigKeys apply_config_file(CLI::App &app, int argc, const char *const *argv) {
    CLI::App *sub = nullptr;
    std::string path;
    for (int i = 1; i < argc; ++i) {
        std::string_view a = argv[i];
        if (sub == nullptr) {
            for (CLI::App *s : app.get_subcommands({})) {
                if (s->get_name() == a) {
                    sub = s;
                }
            }
            continue;
        }
        if (a == "--config" && i + 1 < argc) {
            path = argv[i + 1];
        } else if (a.rfind("--config=", 0) == 0) {
            path = std::string(a.substr(9));
        }
    }
    ConfigKeys keys;
    if (sub == nullptr || path.empty()) {
        return keys;
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_text_file(path));
    } catch (const nlohmann::json::exception &e) {
        throw UsageError("config '" + path + "' is not valid JSON: " + e.what());
    }
    if (!j.is_object()) {
        throw UsageError("config '" + path + "' must hold a JSON object");
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string &key = it.key();
        CLI::Option *opt = key == "config" || key == "help" ? nullptr : sub->get_option_no_throw("--" + key);
        if (opt == nullptr) {
            throw UsageError("unknown config key '" + key + "' for command " + sub->get_name());
        }
        opt->default_val(json_to_option_text(it.value(), key));
        keys.insert(key);
    }
    return keys;
}

uint64_t config_hash(const CLI::App *sub) {
    nlohmann::json j = nlohmann::json::object();
    j["command"] = sub->get_name();
    for (const CLI::Option *opt : sub->get_options()) {
        std::string name = opt->get_single_name();
        if (name == "help" || name == "config" || name == "output" || name == "threads") {
            continue;
        }
        if (opt->count() > 0) {
            std::string joined;
            for (const std::string &r : opt->results()) {
                joined += (joined.empty() ? "" : ",") + r;
            }
            j[name] = joined;
        } else {
            j[name] = opt->get_default_str();
        }
    }
    return fnv1a(j.dump());
}

bool option_given(const CLI::App *sub, const ConfigKeys &keys, const std::string &name) {
    return sub->get_option("--" + name)->count() > 0 || keys.count(name) > 0;
}

void emit(const Common &c, const std::string &text) {
    write_output(resolve_output_path(c.output), text);
}

double resolve_beta(CLI::App *sub, const ConfigKeys &keys, const std::string &temperature, const std::string &beta) {
    bool t_cli = sub->get_option("--temperature")->count() > 0;
    bool b_cli = sub->get_option("--beta")->count() > 0;
    bool use_t = t_cli || (!b_cli && keys.count("temperature") > 0);
    bool use_b = b_cli || (!t_cli && keys.count("beta") > 0);
    if (use_t && use_b) {
        throw UsageError("give either --temperature or --beta, not both");
    }
    if (use_t) {
        double t = parse_value(temperature);
        if (!(t > 0)) {
            throw UsageError("temperature must be > 0");
        }
        return 1.0 / t;
    }
    if (use_b) {
        double b = parse_value(beta);
        if (!(b > 0)) {
            throw UsageError("beta must be > 0");
        }
        return b;
    }
    throw UsageError("one of --temperature or --beta is required");
}

// ---- cycle ----

struct CycleArgs {
    Common common;
    std::string protocol = "single";
    double gamma0 = 0;
    std::string temperature;
    std::string beta;
    std::string theta = "0";
};

int cmd_cycle(CLI::App *sub, const CycleArgs &a, const ConfigKeys &keys) {
    if (!option_given(sub, keys, "gamma0")) {
        throw UsageError("--gamma0 is required");
    }
    JqbParams p;
    p.gamma0 = a.gamma0;
    p.beta = resolve_beta(sub, keys, a.temperature, a.beta);
    p.theta = parse_value(a.theta);
    p.protocol = parse_protocols(a.protocol).at(0);
    CycleEnergetics c = run_cycle(p);
    TableWriter w(parse_format(a.common.format), cycle_columns(), {"cycle", config_hash(sub), a.common.seed});
    w.row(cycle_cells(c));
    emit(a.common, w.str());
    return kExitOk;
}

// ---- sweep ----

struct SweepArgs {
    Common common;
    std::string figure;
    std::string gamma0 = "0.8";
    std::string temperature = "0.5";
    std::string theta = "0";
    std::string protocols = "single,local,global";
    bool exclude_zero = false;
    unsigned threads = 1;
};

std::vector<double> without_zero(std::vector<double> v) {
    v.erase(std::remove(v.begin(), v.end(), 0.0), v.end());
    return v;
}

int cmd_sweep(CLI::App *sub, const SweepArgs &a, const ConfigKeys &keys) {
    SweepGrid grid;
    if (!a.figure.empty()) {
        grid = figure_grid(a.figure);
    } else {
        grid.gamma0 = parse_grid(a.gamma0);
        grid.temperature = parse_grid(a.temperature);
        grid.theta = parse_grid(a.theta);
        grid.protocols = parse_protocols(a.protocols);
    }
    if (!a.figure.empty()) {
        if (option_given(sub, keys, "gamma0")) {
            grid.gamma0 = parse_grid(a.gamma0);
        }
        if (option_given(sub, keys, "temperature")) {
            grid.temperature = parse_grid(a.temperature);
        }
        if (option_given(sub, keys, "theta")) {
            grid.theta = parse_grid(a.theta);
        }
        if (option_given(sub, keys, "protocols")) {
            grid.protocols = parse_protocols(a.protocols);
        }
    }
    if (a.exclude_zero) {
        grid.gamma0 = without_zero(grid.gamma0);
    }
    if (grid.size() == 0) {
        throw UsageError("empty sweep grid");
    }
    std::vector<CycleEnergetics> rows = sweep(grid, SweepOptions{a.threads, false});
    TableWriter w(parse_format(a.common.format), cycle_columns(), {"sweep", config_hash(sub), a.common.seed});
    for (const auto &r : rows) {
        w.row(cycle_cells(r));
    }
    emit(a.common, w.str());
    return kExitOk;
}

// ---- pareto ----

struct ParetoArgs {
    Common common;
    std::string input;
    std::string protocols;
};

int cmd_pareto(CLI::App *sub, const ParetoArgs &a) {
    std::vector<CycleEnergetics> rows = read_cycle_csv(read_text_file(a.input));
    if (rows.empty()) {
        throw UsageError("input table has no rows");
    }
    std::vector<Protocol> wanted = a.protocols.empty()
                                       ? std::vector<Protocol>{Protocol::Single, Protocol::Local, Protocol::Global,
                                                               Protocol::LocalUncorrelated}
                                       : parse_protocols(a.protocols);
    TableWriter w(parse_format(a.common.format), cycle_columns(), {"pareto", config_hash(sub), a.common.seed});
    for (Protocol p : wanted) {
        bool present = std::any_of(rows.begin(), rows.end(), [p](const auto &r) { return r.protocol == p; });
        if (!present) {
            continue;
        }
        for (const auto &r : pareto_front(rows, p)) {
            w.row(cycle_cells(r));
        }
    }
    emit(a.common, w.str());
    return kExitOk;
}

// ---- tfd ----

struct TfdArgs {
    Common common;
    std::string gamma0_grid = "0.4:2.0:0.2";
    std::string temperature = "0.5";
    std::string theta = "0";
    std::string profile = "noiseless";
    uint64_t shots = 0;
    int runs = 0;
    size_t budget = 600;
    size_t depth = 1;
    std::string trace_output;
};

int cmd_tfd(CLI::App *sub, const TfdArgs &a) {
    std::vector<double> gammas = parse_grid(a.gamma0_grid);
    double t = parse_value(a.temperature);
    double theta = parse_value(a.theta);
    if (!(t > 0)) {
        throw UsageError("temperature must be > 0");
    }
    if (!(theta >= 0 && theta < std::numbers::pi)) {
        throw UsageError("theta must lie in [0, pi)");
    }
    RunProfile profile;
    try {
        profile = RunProfile::named(a.profile);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    if (a.shots > 0) {
        profile.shots = a.shots;
    }
    if (a.runs > 0) {
        profile.runs = a.runs;
    }
    if (a.budget < 20) {
        throw UsageError("--budget must be at least 20 (the initial design)");
    }
    if (a.depth < 1) {
        throw UsageError("--depth must be at least 1");
    }

    uint64_t hash = config_hash(sub);
    Format fmt = parse_format(a.common.format);
    TableWriter w(fmt,
                  {"gamma0", "T", "theta", "profile", "shots", "runs", "fidelity", "tomography_fidelity", "alpha",
                   "ergotropy", "Ed", "Ec", "eta", "ideal_ergotropy", "ideal_eta", "converged", "warning"},
                  {"tfd", hash, a.common.seed});
    std::vector<std::string> trace_cols = {"gamma0", "evaluation", "cost", "best_so_far"};
    for (size_t k = 0; k < VariationalParams::kSize * a.depth; ++k) {
        trace_cols.push_back("p" + std::to_string(k));
    }
    TableWriter tw(fmt, trace_cols, {"tfd-trace", hash, a.common.seed});

    for (size_t i = 0; i < gammas.size(); ++i) {
        double g = gammas[i];
        DensityMatrix target = jqb_gibbs_state(g, 1.0 / t);
        BayesOptions bo;
        bo.budget = a.budget;
        bo.seed = derive_seed(a.common.seed, 2 * i);
        TfdFit fit = fit_tfd(target, a.depth, bo);
        Rng rng(derive_seed(a.common.seed, 2 * i + 1));
        HardwareCycleResult hw = hardware_single_cycle(fit.steps, g, theta, target, profile, rng);
        CycleEnergetics ideal = run_cycle(JqbParams::at_temperature(g, t, theta, Protocol::Single));

        std::string warning;
        if (!fit.trace.convergence.converged) {
            warning = "not-converged";
        }
        if (fit.fidelity < 0.95) {
            warning += warning.empty() ? "low-fidelity" : ";low-fidelity";
        }
        Cell eta = hw.efficiency ? Cell(*hw.efficiency) : Cell(std::string("degenerate"));
        Cell ideal_eta = ideal.efficiency ? Cell(*ideal.efficiency) : Cell(std::string("degenerate"));
        w.row({g, t, theta, a.profile, static_cast<int64_t>(profile.shots), static_cast<int64_t>(profile.runs),
               fit.fidelity, hw.fidelity_to_target, hw.alpha, hw.extracted_work, hw.e_disconnect, hw.e_connect, eta,
               ideal.extracted_work, ideal_eta, fit.trace.convergence.converged, warning});
        if (!warning.empty()) {
            std::cerr << "warning: gamma0=" << format_number(g) << ": " << warning << " ("
                      << fit.trace.convergence.describe() << ")\n";
        }
        for (size_t k = 0; k < fit.trace.iterations.size(); ++k) {
            const TraceEntry &e = fit.trace.iterations[k];
            std::vector<Cell> cells = {g, static_cast<int64_t>(k), e.cost, e.best_so_far};
            for (double v : e.params) {
                cells.emplace_back(v);
            }
            tw.row(cells);
        }
    }
    emit(a.common, w.str());
    if (!a.trace_output.empty()) {
        write_output(resolve_output_path(a.trace_output), tw.str());
    }
    return kExitOk;
}

// ---- flux ----

struct FluxArgs {
    Common common;
    FluxConfig cfg;
};

int cmd_flux(CLI::App *sub, const FluxArgs &a) {
    double gamma = 0;
    try {
        gamma = flux_to_coupling(a.cfg);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    for (const auto &msg : flux_warnings(a.cfg)) {
        std::cerr << "warning: " << msg << "\n";
    }
    TableWriter w(parse_format(a.common.format), {"E_J", "E_C", "n_g", "flux_ratio", "Omega", "gamma0"},
                  {"flux", config_hash(sub), a.common.seed});
    w.row({a.cfg.e_j, a.cfg.e_c, a.cfg.n_g, a.cfg.flux_ratio, qubit_splitting(a.cfg), gamma});
    emit(a.common, w.str());
    return kExitOk;
}

}  // namespace

SweepGrid figure_grid(std::string_view name) {
    const double pi = std::numbers::pi;
    SweepGrid g;
    std::vector<double> gamma_axis;
    for (double v : linear_grid(-10.0, 10.0, 0.05)) {
        if (v != 0.0) {
            gamma_axis.push_back(v);
        }
    }
    std::vector<double> t_axis = log_grid(0.01, 10.0, 200);
    if (name == "fig3a" || name == "fig3b") {
        g.theta = {0.0, pi / 4, pi / 2};
        g.protocols = {Protocol::Single, Protocol::Local, Protocol::Global, Protocol::LocalUncorrelated};
        if (name == "fig3a") {
            g.gamma0 = gamma_axis;
            g.temperature = {0.5};
        } else {
            g.gamma0 = {0.8};
            g.temperature = t_axis;
        }
        return g;
    }
    if (name == "fig4a" || name == "fig4b" || name == "fig4c") {
        g.theta = {0.0};
        g.protocols = {Protocol::Single, Protocol::Local, Protocol::Global};
        if (name == "fig4a") {
            g.gamma0 = gamma_axis;
            g.temperature = {0.5};
        } else {
            g.gamma0 = {name == "fig4b" ? 0.8 : 2.0};
            g.temperature = t_axis;
        }
        return g;
    }
    throw UsageError("unknown figure '" + std::string(name) + "' (fig3a, fig3b, fig4a, fig4b, fig4c)");
}

int run(int argc, const char *const *argv) {
    CLI::App app{"Cyclic two-qubit Josephson quantum battery: cycle energetics, sweeps and TFD emulation"};
    app.name("jqb");
    app.require_subcommand(1);
    app.set_version_flag("--version", JQB_VERSION);
    app.option_defaults()->always_capture_default();

    CycleArgs ca;
    CLI::App *cyc = app.add_subcommand("cycle", "Run one cycle and print its energetics");
    cyc->option_defaults()->always_capture_default();
    add_common(cyc, ca.common);
    cyc->add_option("--protocol", ca.protocol, "single, local, global or local-uncorrelated");
    cyc->add_option("--gamma0", ca.gamma0, "Coupling in units of the qubit splitting");
    cyc->add_option("--temperature,-T", ca.temperature, "Temperature in units of the qubit splitting");
    cyc->add_option("--beta", ca.beta, "Inverse temperature");
    cyc->add_option("--theta", ca.theta, "Extraction phase in [0, pi)");

    SweepArgs sa;
    CLI::App *swp = app.add_subcommand("sweep", "Cycle energetics over a parameter grid");
    swp->option_defaults()->always_capture_default();
    add_common(swp, sa.common);
    swp->add_option("--figure", sa.figure, "Preset grid: fig3a, fig3b, fig4a, fig4b, fig4c");
    swp->add_option("--gamma0", sa.gamma0, "Grid first:last:step or comma list");
    swp->add_option("--temperature,-T", sa.temperature, "Grid of temperatures");
    swp->add_option("--theta", sa.theta, "Grid of phases, e.g. 0,pi/4,pi/2");
    swp->add_option("--protocols", sa.protocols, "Comma list of protocols");
    swp->add_flag("--exclude-zero", sa.exclude_zero, "Drop gamma0 = 0 from the grid");
    swp->add_option("--threads", sa.threads, "Worker threads");

    ParetoArgs pa;
    CLI::App *par = app.add_subcommand("pareto", "Pareto fronts (ergotropy, efficiency) of a sweep table");
    par->option_defaults()->always_capture_default();
    add_common(par, pa.common);
    par->add_option("--input,-i", pa.input, "CSV written by sweep")->required();
    par->add_option("--protocols", pa.protocols, "Protocols to report (default: all present)");

    TfdArgs ta;
    CLI::App *tfd = app.add_subcommand("tfd", "Variational Gibbs-state preparation and emulated extraction cycle");
    tfd->option_defaults()->always_capture_default();
    add_common(tfd, ta.common);
    tfd->add_option("--gamma0-grid", ta.gamma0_grid, "Grid of couplings");
    tfd->add_option("--temperature,-T", ta.temperature, "Temperature");
    tfd->add_option("--theta", ta.theta, "Extraction phase");
    tfd->add_option("--profile", ta.profile, "noiseless (1000 shots x 30 runs) or hardware (noisy, 4000 shots)");
    tfd->add_option("--shots", ta.shots, "Shots per tomography setting (0: profile default)");
    tfd->add_option("--runs", ta.runs, "Repetitions (0: profile default)");
    tfd->add_option("--budget", ta.budget, "Cost evaluations per optimization");
    tfd->add_option("--depth", ta.depth, "Ansatz steps");
    tfd->add_option("--trace-output", ta.trace_output, "Write optimization traces to this file");

    FluxArgs fa;
    CLI::App *flx = app.add_subcommand("flux", "Coupling from circuit parameters");
    flx->option_defaults()->always_capture_default();
    add_common(flx, fa.common);
    flx->add_option("--ej", fa.cfg.e_j, "Josephson energy (GHz h)")->required();
    flx->add_option("--ec", fa.cfg.e_c, "Charging energy (GHz h)")->required();
    flx->add_option("--ng", fa.cfg.n_g, "Gate charge")->required();
    flx->add_option("--flux", fa.cfg.flux_ratio, "External flux over the flux quantum");

    try {
        ConfigKeys keys = apply_config_file(app, argc, argv);
        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError &e) {
            int code = app.exit(e);
            return code == 0 ? kExitOk : kExitUsage;
        }
        if (*cyc) {
            return cmd_cycle(cyc, ca, keys);
        }
        if (*swp) {
            return cmd_sweep(swp, sa, keys);
        }
        if (*par) {
            return cmd_pareto(par, pa);
        }
        if (*tfd) {
            return cmd_tfd(tfd, ta);
        }
        if (*flx) {
            return cmd_flux(flx, fa);
        }
        return kExitUsage;
    } catch (const CLI::ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}

}  // namespace jqb::cli
