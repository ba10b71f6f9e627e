// Copyright 2026 The distsampler Authors
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

// distsampler command-line tool: Haar unitaries, outcome probabilities,
// truncation thresholds, ensemble scans and MCMC sampling.

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "distsampler/combinatorics.hpp"
#include "distsampler/error_budget.hpp"
#include "distsampler/errors.hpp"
#include "distsampler/json_io.hpp"
#include "distsampler/oracle.hpp"
#include "distsampler/probability.hpp"
#include "distsampler/sampler.hpp"
#include "distsampler/scan.hpp"

#ifndef DISTSAMPLER_VERSION
#define DISTSAMPLER_VERSION "0.1.0"
#endif

namespace ds = distsampler;
using ds::io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitRuntime = 3;
constexpr int kExitCostGuard = 4;

int exit_code_for(ds::ErrorKind kind) {
    switch (kind) {
        case ds::ErrorKind::InvalidDimension:
        case ds::ErrorKind::InvalidPattern:
        case ds::ErrorKind::InvalidInput:
        case ds::ErrorKind::InvalidOrder:
            return kExitInvalid;
        case ds::ErrorKind::CostGuard:
            return kExitCostGuard;
        case ds::ErrorKind::NumericalInconsistency:
        case ds::ErrorKind::ChainStuck:
        case ds::ErrorKind::Io:
            return kExitRuntime;
    }
    return kExitRuntime;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

json manifest(const std::string &command, json parameters, std::optional<std::uint64_t> seed) {
    json m{{"command", command},
           {"parameters", std::move(parameters)},
           {"tool_version", DISTSAMPLER_VERSION},
           {"timestamp", utc_timestamp()}};
    m["seed"] = seed ? json(*seed) : json(nullptr);
    return m;
}

void emit(const std::string &out, const std::string &payload) {
    if (out.empty() || out == "-") {
        std::cout << payload;
    } else {
        ds::io::write_text_file(out, payload);
    }
}

void emit_manifest(const std::string &out, const json &m) {
    if (out.empty() || out == "-") {
        std::cerr << m.dump() << '\n';
    } else {
        ds::io::write_text_file(out + ".manifest.json", m.dump(2) + "\n");
    }
}

ds::ComplexMatrix load_unitary(const std::string &path) {
    const ds::ComplexMatrix u = ds::io::matrix_from_json(ds::io::read_json_file(path));
    if (!u.is_square()) throw ds::Error(ds::ErrorKind::InvalidDimension, "invalid dimension: unitary must be square");
    return u;
}

std::vector<std::size_t> default_inputs(const std::vector<std::size_t> &given, std::size_t n) {
    if (!given.empty()) return given;
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

ds::DistinguishabilityModel load_model(const std::optional<double> &x, const std::string &s_path) {
    if (!s_path.empty()) {
        if (x) throw ds::Error(ds::ErrorKind::InvalidInput, "invalid input: give either --x or --s-matrix");
        return ds::io::overlap_from_json(ds::io::read_json_file(s_path));
    }
    if (!x) throw ds::Error(ds::ErrorKind::InvalidInput, "invalid input: --x or --s-matrix is required");
    return ds::DistinguishabilityModel::uniform(*x);
}

// Options shared by several subcommands.
struct Options {
    std::size_t n = 0;
    std::size_t n_modes = 0;
    std::optional<double> x;
    std::optional<std::size_t> k;
    double epsilon = 0.0;
    std::size_t trials = 500;
    std::uint64_t seed = 0;
    std::string out;
    std::string unitary;
    std::vector<std::size_t> inputs;
    std::vector<std::size_t> outputs;
    std::string s_matrix;
    std::string mode = "exact";
    std::size_t burn_in = 1000;
    std::size_t thin = 1;
    std::string proposal = "swap";
    std::size_t count = 1000;
    std::size_t chains = 1;
    std::vector<double> x_grid;
    std::vector<std::size_t> k_list;
};

int cmd_gen_unitary(const Options &o) {
    const ds::ComplexMatrix u = ds::haar_unitary(o.n_modes, o.seed);
    emit(o.out, ds::io::matrix_to_json(u).dump() + "\n");
    emit_manifest(o.out, manifest("gen-unitary", {{"N", o.n_modes}}, o.seed));
    return kExitOk;
}

int cmd_prob(const Options &o) {
    const ds::ComplexMatrix u = load_unitary(o.unitary);
    const auto pattern = ds::OutcomePattern::make(u.rows(), o.inputs, o.outputs);
    const ds::ComplexMatrix m = ds::extract_submatrix(u, pattern);
    const std::size_t n = pattern.photons();
    const double p0 = ds::baseline_probability(n, u.rows());
    json result{{"n", n}, {"N", u.rows()}, {"mode", o.mode}, {"p0", p0}};
    json params{{"unitary", o.unitary}, {"inputs", o.inputs}, {"outputs", o.outputs}, {"mode", o.mode}};
    if (o.x) params["x"] = *o.x;
    if (!o.s_matrix.empty()) params["s_matrix"] = o.s_matrix;

    if (o.mode == "exact") {
        const auto model = load_model(o.x, o.s_matrix);
        result["p"] = ds::exact_probability(m, model);
        result["permanents_evaluated"] = ds::factorial(n);
    } else if (o.mode == "truncated") {
        if (!o.s_matrix.empty()) {
            throw ds::Error(ds::ErrorKind::InvalidInput, "invalid input: truncated mode supports uniform --x only");
        }
        if (!o.x) throw ds::Error(ds::ErrorKind::InvalidInput, "invalid input: --x is required");
        const std::size_t k = o.k.value_or(n);
        params["k"] = k;
        const ds::TruncationResult r = ds::truncated_probability(m, *o.x, k);
        result["p"] = r.p_k;
        result["k"] = k;
        // Figure-style label: the distinguishable-only truncation is called k = 1.
        result["k_figure_label"] = std::max<std::size_t>(k, 1);
        result["permanents_evaluated"] = r.permanents_evaluated;
        json contributions = json::array();
        for (const auto &c : r.contributions) {
            contributions.push_back({{"j", c.j}, {"c_j", c.coefficient}, {"term", c.term}});
        }
        result["contributions"] = contributions;
        if (r.p_k < -1e-9 * p0) std::cerr << "warning: truncated probability is negative (" << r.p_k << ")\n";
    } else {
        throw ds::Error(ds::ErrorKind::InvalidInput, "invalid input: --mode must be exact or truncated");
    }
    result["manifest"] = manifest("prob", params, std::nullopt);
    std::cout << result.dump(2) << '\n';
    return kExitOk;
}

int cmd_threshold(const Options &o) {
    if (!o.x) throw ds::Error(ds::ErrorKind::InvalidInput, "invalid input: --x is required");
    std::optional<std::size_t> n_modes;
    if (o.n_modes > 0) n_modes = o.n_modes;
    const ds::ErrorBudget b = ds::required_order(*o.x, o.epsilon, o.n, n_modes);
    json r{{"n", b.n},
           {"x", b.x},
           {"epsilon", b.epsilon},
           {"k_required", b.k_required},
           {"feasible", b.feasible},
           {"error_bound_at_k", b.k_required < 1000 ? ds::error_bound(b.k_required, b.x) : 0.0},
           {"boundary_x", b.boundary_x},
           {"criteria",
            {{"solid_k_below_n", b.feasible},
             {"dashed_first_term_only", b.first_term_feasible},
             {"dashed_first_term_order", b.first_term_order},
             {"dash_dotted_within_permanent_budget", b.within_permanent_budget}}},
           {"log10_estimated_steps", std::isfinite(b.log10_estimated_steps) ? json(b.log10_estimated_steps) : json(nullptr)},
           {"log10_full_permanent_steps", b.log10_full_permanent_steps}};
    r["estimated_steps"] = b.estimated_steps ? json(*b.estimated_steps) : json(nullptr);
    r["p0"] = b.p0 ? json(*b.p0) : json(nullptr);
    r["manifest"] = manifest("threshold", {{"x", b.x}, {"epsilon", b.epsilon}, {"n", b.n}}, std::nullopt);
    std::cout << r.dump(2) << '\n';
    return kExitOk;
}

std::vector<double> default_x_grid() {
    std::vector<double> g;
    for (int i = 0; i <= 19; ++i) g.push_back(i * 0.05);
    return g;
}

void emit_scan(const std::string &out, const std::string &csv, const json &rows, const json &m) {
    emit(out, csv);
    if (out.empty() || out == "-") {
        std::cerr << m.dump() << '\n';
        return;
    }
    ds::io::write_text_file(out + ".json", json{{"manifest", m}, {"rows", rows}}.dump(2) + "\n");
    ds::io::write_text_file(out + ".manifest.json", m.dump(2) + "\n");
}

int cmd_figure2(const Options &o) {
    ds::ErrorScanConfig cfg;
    cfg.n = o.n;
    cfg.n_modes = o.n_modes;
    cfg.x_grid = o.x_grid.empty() ? default_x_grid() : o.x_grid;
    cfg.k_list = o.k_list.empty() ? std::vector<std::size_t>{0, 2, 3, 4} : o.k_list;
    cfg.trials = o.trials;
    cfg.seed = o.seed;
    const auto rows = ds::ensemble_error_scan(cfg);
    std::ostringstream csv;
    ds::io::write_error_scan_csv(csv, rows);
    const json m = manifest("figure2",
                            {{"n", cfg.n}, {"N", cfg.n_modes}, {"trials", cfg.trials}, {"x_grid", cfg.x_grid},
                             {"k_list", cfg.k_list}},
                            cfg.seed);
    emit_scan(o.out, csv.str(), ds::io::error_scan_to_json(rows), m);
    return kExitOk;
}

int cmd_figure3(const Options &o) {
    const auto rows = ds::coefficient_scan(o.n, o.n_modes, o.trials, o.seed);
    std::ostringstream csv;
    ds::io::write_coefficient_scan_csv(csv, rows);
    if (o.trials < 30) std::cerr << "warning: " << o.trials << " trial(s); RMS estimates are high-variance\n";
    const json m = manifest("figure3", {{"n", o.n}, {"N", o.n_modes}, {"trials", o.trials}}, o.seed);
    emit_scan(o.out, csv.str(), ds::io::coefficient_scan_to_json(rows), m);
    return kExitOk;
}

int cmd_sample(const Options &o) {
    if (!o.x) throw ds::Error(ds::ErrorKind::InvalidInput, "invalid input: --x is required");
    const ds::ComplexMatrix u = load_unitary(o.unitary);
    const std::size_t k = o.k.value_or(o.inputs.size());
    ds::ChainConfig cfg;
    cfg.burn_in = o.burn_in;
    cfg.thinning = o.thin;
    cfg.seed = o.seed;
    if (o.proposal == "swap") {
        cfg.proposal = ds::Proposal::SingleModeSwap;
    } else if (o.proposal == "uniform") {
        cfg.proposal = ds::Proposal::UniformPattern;
    } else {
        throw ds::Error(ds::ErrorKind::InvalidInput, "invalid input: --proposal must be swap or uniform");
    }
    const ds::SampleRun run = o.chains > 1 ? ds::mh_sample_chains(u, o.inputs, *o.x, k, o.count, o.chains, cfg)
                                           : ds::mh_sample(u, o.inputs, *o.x, k, o.count, cfg);
    std::string lines;
    for (const auto &s : run.samples) lines += json{{"outputs", s.output_modes}}.dump() + "\n";
    emit(o.out, lines);

    const json m = manifest("sample",
                            {{"unitary", o.unitary}, {"inputs", o.inputs}, {"x", *o.x}, {"k", k}, {"count", o.count},
                             {"burn_in", o.burn_in}, {"thin", o.thin}, {"proposal", o.proposal},
                             {"chains", o.chains}},
                            o.seed);
    const json summary{{"manifest", m},
                       {"samples", run.samples.size()},
                       {"steps", run.diagnostics.steps},
                       {"accepted", run.diagnostics.accepted},
                       {"acceptance_rate", run.diagnostics.acceptance_rate()},
                       {"states_evaluated", run.diagnostics.states_evaluated},
                       {"start_attempts", run.diagnostics.start_attempts}};
    if (o.out.empty() || o.out == "-") {
        std::cerr << summary.dump() << '\n';
    } else {
        ds::io::write_text_file(o.out + ".summary.json", summary.dump(2) + "\n");
    }
    return kExitOk;
}

int cmd_oracle(const Options &o) {
    const ds::ComplexMatrix u = load_unitary(o.unitary);
    const auto model = load_model(o.x, o.s_matrix);
    const auto state = ds::oracle::prepare_input(model, o.inputs, u.rows());
    const double p = ds::oracle::evolve_and_project(state, u, o.outputs);
    json r{{"p", p}, {"inputs", o.inputs}, {"outputs", o.outputs}};
    std::cout << r.dump(2) << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Boson sampling with partially distinguishable photons"};
    app.require_subcommand(1);
    app.set_version_flag("--version", DISTSAMPLER_VERSION);
    Options o;

    auto add_seed = [&](CLI::App *c) { c->add_option("--seed", o.seed, "RNG seed"); };
    auto add_out = [&](CLI::App *c) { c->add_option("--out", o.out, "Output path (stdout if omitted)"); };

    auto *gen = app.add_subcommand("gen-unitary", "Write a Haar-random unitary as JSON");
    gen->add_option("--N", o.n_modes, "Number of modes")->required();
    add_seed(gen);
    add_out(gen);

    auto *prob = app.add_subcommand("prob", "Probability of one collision-free outcome");
    prob->add_option("--unitary", o.unitary, "Unitary JSON")->required();
    prob->add_option("--inputs", o.inputs, "Input modes")->delimiter(',')->required();
    prob->add_option("--outputs", o.outputs, "Output modes")->delimiter(',')->required();
    prob->add_option("--x", o.x, "Uniform indistinguishability in [0,1]");
    prob->add_option("--s-matrix", o.s_matrix, "Overlap matrix JSON (exact mode)");
    prob->add_option("--mode", o.mode, "exact | truncated");
    prob->add_option("--k", o.k, "Truncation order (largest displaced-photon count)");

    auto *thr = app.add_subcommand("threshold", "Truncation order needed for a target error");
    thr->add_option("--x", o.x, "Indistinguishability in [0,1)")->required();
    thr->add_option("--epsilon", o.epsilon, "Target relative error")->required();
    thr->add_option("--n", o.n, "Photon count")->required();
    thr->add_option("--N", o.n_modes, "Mode count (adds P_0 to the report)");

    auto *fig2 = app.add_subcommand("figure2", "Ensemble truncation error vs x and k (CSV)");
    o.n = 5;
    o.n_modes = 100;
    fig2->add_option("--n", o.n, "Photon count");
    fig2->add_option("--N", o.n_modes, "Mode count");
    fig2->add_option("--trials", o.trials, "Haar trials");
    fig2->add_option("--x,--x-grid", o.x_grid, "Comma-separated x values")->delimiter(',');
    fig2->add_option("--k,--k-list", o.k_list, "Comma-separated truncation orders")->delimiter(',');
    add_seed(fig2);
    add_out(fig2);

    auto *fig3 = app.add_subcommand("figure3", "Ensemble RMS of the polynomial coefficients (CSV)");
    fig3->add_option("--n", o.n, "Photon count (default 8)");
    fig3->add_option("--N", o.n_modes, "Mode count");
    fig3->add_option("--trials", o.trials, "Haar trials");
    add_seed(fig3);
    add_out(fig3);

    auto *sample = app.add_subcommand("sample", "Metropolis-Hastings samples of output patterns (JSONL)");
    sample->add_option("--unitary", o.unitary, "Unitary JSON")->required();
    sample->add_option("--inputs", o.inputs, "Input modes")->delimiter(',')->required();
    sample->add_option("--x", o.x, "Indistinguishability in [0,1]")->required();
    sample->add_option("--k", o.k, "Truncation order (default n)");
    sample->add_option("--count", o.count, "Number of samples");
    sample->add_option("--burn-in", o.burn_in, "Burn-in steps");
    sample->add_option("--thin", o.thin, "Steps between kept samples");
    sample->add_option("--proposal", o.proposal, "swap | uniform");
    sample->add_option("--chains", o.chains, "Independent chains run in parallel");
    add_seed(sample);
    add_out(sample);

    auto *orc = app.add_subcommand("oracle", "Brute-force Fock-space probability (debugging)");
    orc->add_option("--unitary", o.unitary, "Unitary JSON")->required();
    orc->add_option("--inputs", o.inputs, "Input modes")->delimiter(',')->required();
    orc->add_option("--outputs", o.outputs, "Output modes, repeats allowed")->delimiter(',')->required();
    orc->add_option("--x", o.x, "Uniform indistinguishability");
    orc->add_option("--s-matrix", o.s_matrix, "Overlap matrix JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }
    if (fig3->parsed() && fig3->count("--n") == 0) o.n = 8;

    try {
        if (gen->parsed()) return cmd_gen_unitary(o);
        if (prob->parsed()) return cmd_prob(o);
        if (thr->parsed()) return cmd_threshold(o);
        if (fig2->parsed()) return cmd_figure2(o);
        if (fig3->parsed()) return cmd_figure3(o);
        if (sample->parsed()) return cmd_sample(o);
        if (orc->parsed()) return cmd_oracle(o);
    } catch (const ds::Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitInvalid;
}
