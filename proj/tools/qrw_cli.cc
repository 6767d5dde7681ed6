// Copyright 2026 The qrw Authors
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

// qrw: command-line driver for the quantum-random-walk linear solver.
//
//   qrw generate  emit problem instances
//   qrw solve     solve one instance and print the report
//   qrw sweep     run an experiment plan, write rows.csv + manifest.json
//   qrw aggregate per-cell mean / SEM / median from rows.csv
//   qrw plot      SVG plots from an aggregate CSV
//   qrw table1    N=16 relative-error table (un-mitigated vs mitigated)
//
// Exit codes: 0 ok, 1 usage error, 2 runtime/solver error, 3 incomplete data.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qrw/errors.h"
#include "qrw/harness.h"
#include "qrw/matrix_model.h"
#include "qrw/noise_params.h"
#include "qrw/plot.h"
#include "qrw/rng.h"
#include "qrw/solver.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;
constexpr int kExitIncomplete = 3;

/// Output stream that is either a file or stdout.
class Output {
   public:
    explicit Output(const std::string &path) {
        if (!path.empty() && path != "-") {
            if (auto parent = std::filesystem::path(path).parent_path(); !parent.empty()) {
                std::filesystem::create_directories(parent);
            }
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open '" + path + "' for writing");
        }
    }
    std::ostream &stream() { return file_.is_open() ? static_cast<std::ostream &>(file_) : std::cout; }

   private:
    std::ofstream file_;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<bool> parse_mitigation_modes(const std::vector<std::string> &values) {
    std::vector<bool> modes;
    for (const auto &v : values) {
        if (v == "off") {
            modes.push_back(false);
        } else if (v == "on") {
            modes.push_back(true);
        } else if (v == "both") {
            modes.push_back(false);
            modes.push_back(true);
        } else {
            throw qrw::ParameterError("--mitigate expects on, off or both, got '" + v + "'");
        }
    }
    return modes;
}

struct GenerateArgs {
    int n = 2;
    int k = 0;
    double gamma = 0.5;
    uint64_t seed = 0;
    int samples = 1;
    std::string out;
};

int run_generate(const GenerateArgs &a) {
    Output out(a.out);
    for (int s = 0; s < a.samples; ++s) {
        const uint64_t seed = a.samples == 1 ? a.seed : qrw::derive_seed(a.seed, {static_cast<uint64_t>(s)});
        qrw::write_problem(out.stream(), qrw::generate_problem(a.n, a.k, a.gamma, seed));
    }
    return kExitOk;
}

struct SolveArgs {
    std::string instance;
    int n = 2;
    int k = 0;
    double gamma = 0.5;
    double epsilon = 0.01;
    std::optional<int> c;
    int shots = 1008;
    std::string backend = "noiseless";
    std::string mitigate = "off";
    int max_retries = 1000;
    uint64_t seed = 0;
    std::string out;
};

int run_solve(const SolveArgs &a) {
    qrw::ProblemInstance inst = [&] {
        if (!a.instance.empty()) {
            std::ifstream in(a.instance);
            if (!in) throw std::runtime_error("cannot open instance file '" + a.instance + "'");
            return qrw::read_problem(in);
        }
        return qrw::generate_problem(a.n, a.k, a.gamma, a.seed);
    }();
    qrw::SolverConfig cfg;
    cfg.shots = a.shots;
    cfg.epsilon = a.epsilon;
    cfg.c_override = a.c;
    cfg.noise = qrw::resolve_backend(a.backend);
    const auto modes = parse_mitigation_modes({a.mitigate});
    if (modes.size() != 1) throw qrw::ParameterError("solve takes a single --mitigate mode");
    cfg.mitigation = modes.front();
    cfg.max_retries = a.max_retries;
    cfg.master_seed = a.seed;
    const auto report = qrw::solve(inst, cfg);
    Output out(a.out);
    out.stream() << "sparsity_level " << inst.sparsity_level << "\n";
    qrw::write_report(out.stream(), report);
    return kExitOk;
}

struct SweepArgs {
    std::vector<int> sizes{2};
    std::vector<int> ks;
    std::vector<int> shot_grid;
    std::optional<int> shots;
    bool any_shots = false;
    int samples = 50;
    double gamma = 0.5;
    double epsilon = 0.01;
    std::optional<int> c;
    std::vector<std::string> backends{"noiseless"};
    std::vector<std::string> mitigate{"off"};
    int max_retries = 1000;
    uint64_t seed = 0;
    std::string rhs = "shared-per-size";
    std::string out;
    int workers = 1;
    std::string manifest;
    bool progress = false;
};

int run_sweep(const SweepArgs &a) {
    qrw::ExperimentPlan plan;
    if (!a.manifest.empty()) {
        plan = qrw::plan_from_manifest(read_file(a.manifest));
    } else {
        plan.sizes = a.sizes;
        if (!a.ks.empty()) {
            for (int n : a.sizes) plan.sparsity_ks[n] = a.ks;
        }
        if (a.shots) {
            plan.shot_grid = {*a.shots};
        } else if (!a.shot_grid.empty()) {
            plan.shot_grid = a.shot_grid;
        }
        plan.require_multiple_of_24 = !a.any_shots;
        plan.samples_per_cell = a.samples;
        plan.gamma = a.gamma;
        plan.epsilon = a.epsilon;
        plan.c_override = a.c;
        plan.backends.clear();
        for (const auto &b : a.backends) plan.backends.push_back(qrw::resolve_backend(b));
        plan.mitigation_modes = parse_mitigation_modes(a.mitigate);
        plan.max_retries = a.max_retries;
        plan.master_seed = a.seed;
        if (a.rhs == "shared-per-size") {
            plan.rhs_policy = qrw::RhsPolicy::kSharedPerSize;
        } else if (a.rhs == "per-sample") {
            plan.rhs_policy = qrw::RhsPolicy::kPerSample;
        } else {
            throw qrw::ParameterError("--rhs expects shared-per-size or per-sample");
        }
    }
    plan.workers = a.workers;
    plan.validate();

    qrw::ProgressFn progress;
    if (a.progress) {
        progress = [](int64_t done, int64_t total) {
            if (done == total || done % 50 == 0) std::cerr << "\r" << done << "/" << total << " cells" << std::flush;
            if (done == total) std::cerr << '\n';
        };
    }
    const auto result = qrw::run_plan(plan, progress);
    qrw::write_sweep_outputs(plan, result, a.out);
    std::cerr << "run " << result.run_id << ": " << result.rows.size() << " rows (" << result.error_rows
              << " errors) -> " << a.out << '\n';
    return result.error_rows > 0 ? kExitRuntime : kExitOk;
}

std::string rows_path(const std::string &in) {
    if (std::filesystem::is_directory(in)) return (std::filesystem::path(in) / "rows.csv").string();
    return in;
}

int run_aggregate(const std::string &in_path, const std::string &out_path) {
    std::ifstream in(rows_path(in_path));
    if (!in) throw std::runtime_error("cannot open '" + in_path + "'");
    const auto rows = qrw::read_rows_csv(in);
    std::vector<qrw::AggregateRow> agg;
    try {
        agg = qrw::aggregate(rows);
    } catch (const qrw::ParameterError &e) {
        std::cerr << "qrw aggregate: " << e.what() << '\n';
        return kExitIncomplete;
    }
    Output out(out_path);
    qrw::write_aggregate_csv(out.stream(), agg);
    int64_t failed = 0;
    for (const auto &r : rows) failed += r.failed() ? 1 : 0;
    if (failed > 0) {
        std::cerr << "qrw aggregate: skipped " << failed << " error rows\n";
        return kExitIncomplete;
    }
    return kExitOk;
}

std::vector<qrw::AggregateRow> load_aggregate(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return qrw::read_aggregate_csv(in);
}

struct PlotArgs {
    std::string in;
    std::string out;
    std::optional<int> n;
    std::string backend;
    std::string metric = "error";
};

int run_plot(const PlotArgs &a) {
    const auto rows = load_aggregate(a.in);
    if (rows.empty()) {
        std::cerr << "qrw plot: no aggregated data\n";
        return kExitIncomplete;
    }
    if (a.metric != "error" && a.metric != "invalid") throw qrw::ParameterError("--metric expects error or invalid");
    const auto metric = a.metric == "error" ? qrw::plot::Metric::kRelativeError : qrw::plot::Metric::kInvalidSteps;

    std::set<std::pair<int, std::string>> slices;
    for (const auto &r : rows) {
        if (a.n && r.n != *a.n) continue;
        if (!a.backend.empty() && r.backend != a.backend) continue;
        slices.insert({r.n, r.backend});
    }
    if (slices.empty()) {
        std::cerr << "qrw plot: no rows match the requested size/backend\n";
        return kExitIncomplete;
    }
    std::filesystem::create_directories(a.out);
    for (const auto &[n, backend] : slices) {
        // Mitigation modes of one slice share axes so the pair is comparable.
        std::vector<bool> modes;
        std::vector<std::vector<qrw::plot::Series>> groups;
        for (bool m : {false, true}) {
            auto s = qrw::plot::series_from_aggregate(rows, n, backend, m, metric);
            if (s.empty()) continue;
            modes.push_back(m);
            groups.push_back(std::move(s));
        }
        const auto axes = qrw::plot::axes_for(groups);
        for (size_t i = 0; i < groups.size(); ++i) {
            qrw::plot::Spec spec;
            spec.title = "N=" + std::to_string(1 << n) + ", " + backend + ", mitigation " + (modes[i] ? "on" : "off");
            spec.y_label = metric == qrw::plot::Metric::kRelativeError ? "mean relative error" : "mean invalid steps";
            spec.axes = axes;
            std::vector<std::string> warnings;
            const auto svg = qrw::plot::render_svg(groups[i], spec, &warnings);
            for (const auto &w : warnings) std::cerr << "qrw plot: warning: " << w << '\n';
            const auto file = std::filesystem::path(a.out) /
                              ((a.metric == "error" ? "relative_error" : "invalid_steps") + std::string("_n") +
                               std::to_string(n) + "_" + backend + "_mitigation-" + (modes[i] ? "on" : "off") +
                               ".svg");
            std::ofstream f(file);
            if (!f) throw std::runtime_error("cannot write " + file.string());
            f << svg;
            std::cerr << "wrote " << file.string() << '\n';
        }
    }
    return kExitOk;
}

int run_table1(const std::string &in, const std::string &backend, int shots, const std::string &out_path) {
    const auto rows = load_aggregate(in);
    const auto table = qrw::build_table1(rows, backend, shots);
    Output out(out_path);
    out.stream() << table.render();
    if (!table.complete()) {
        std::cerr << "qrw table1: missing cells (N=16, " << shots << " shots) for one or both mitigation modes\n";
        return kExitIncomplete;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum random walk linear solver: simulation, sweeps and reporting"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto *generate = app.add_subcommand("generate", "Emit problem instances as plain-text records");
    generate->add_option("--n", gen.n, "Qubit count; N = 2^n")->required();
    generate->add_option("--k", gen.k, "Number of zeroed thetas (sparsity increments)");
    generate->add_option("--gamma", gen.gamma, "gamma in A = 1 - gamma P")->capture_default_str();
    generate->add_option("--seed", gen.seed, "Random seed");
    generate->add_option("--samples", gen.samples, "Number of instances")->check(CLI::PositiveNumber);
    generate->add_option("--out", gen.out, "Output file (default stdout)");

    SolveArgs sol;
    auto *solve = app.add_subcommand("solve", "Solve a single instance");
    solve->add_option("--instance", sol.instance, "Instance record file (otherwise generated)");
    solve->add_option("--n", sol.n, "Qubit count");
    solve->add_option("--k", sol.k, "Number of zeroed thetas");
    solve->add_option("--gamma", sol.gamma, "gamma")->capture_default_str();
    solve->add_option("--epsilon", sol.epsilon, "Target sampling error")->capture_default_str();
    solve->add_option("--c", sol.c, "Explicit truncation length");
    solve->add_option("--shots", sol.shots, "Walks per solution component")->capture_default_str();
    solve->add_option("--backend", sol.backend, "noiseless|fake-boeblingen|fake-casablanca|<config-file>")
        ->capture_default_str();
    solve->add_option("--mitigate", sol.mitigate, "on|off")->capture_default_str();
    solve->add_option("--max-retries", sol.max_retries, "Retry cap per step with mitigation");
    solve->add_option("--seed", sol.seed, "Seed for instance generation and walks");
    solve->add_option("--out", sol.out, "Report file (default stdout)");

    SweepArgs sw;
    auto *sweep = app.add_subcommand("sweep", "Run an experiment sweep");
    sweep->add_option("--n", sw.sizes, "Qubit counts")->delimiter(',');
    sweep->add_option("--k", sw.ks, "Sparsity increments (default 0..n)")->delimiter(',');
    sweep->add_option("--shot-grid", sw.shot_grid, "Shot counts (default 24,48,96,216,456,1008)")->delimiter(',');
    sweep->add_option("--shots", sw.shots, "Single shot count instead of a grid");
    sweep->add_flag("--any-shots", sw.any_shots, "Allow shot counts that are not multiples of 24");
    sweep->add_option("--samples", sw.samples, "Instances per (size, sparsity)")->capture_default_str();
    sweep->add_option("--gamma", sw.gamma, "gamma")->capture_default_str();
    sweep->add_option("--epsilon", sw.epsilon, "Target sampling error")->capture_default_str();
    sweep->add_option("--c", sw.c, "Explicit truncation length");
    sweep->add_option("--backend", sw.backends, "Backends (presets or config files)")->delimiter(',');
    sweep->add_option("--mitigate", sw.mitigate, "on, off or both")->delimiter(',');
    sweep->add_option("--max-retries", sw.max_retries, "Retry cap per step with mitigation");
    sweep->add_option("--seed", sw.seed, "Master seed");
    sweep->add_option("--rhs", sw.rhs, "shared-per-size|per-sample")->capture_default_str();
    sweep->add_option("--out", sw.out, "Output directory")->required();
    sweep->add_option("--workers", sw.workers, "Worker threads")->check(CLI::PositiveNumber);
    sweep->add_option("--manifest", sw.manifest, "Re-run the plan stored in a manifest.json");
    sweep->add_flag("--progress", sw.progress, "Report progress on stderr");

    std::string agg_in, agg_out;
    auto *aggregate = app.add_subcommand("aggregate", "Aggregate sweep rows per cell");
    aggregate->add_option("--in", agg_in, "rows.csv or sweep directory")->required();
    aggregate->add_option("--out", agg_out, "Output CSV (default stdout)");

    PlotArgs pl;
    auto *plot = app.add_subcommand("plot", "Render SVG plots from aggregated data");
    plot->add_option("--in", pl.in, "Aggregate CSV")->required();
    plot->add_option("--out", pl.out, "Output directory")->required();
    plot->add_option("--n", pl.n, "Restrict to one size");
    plot->add_option("--backend", pl.backend, "Restrict to one backend");
    plot->add_option("--metric", pl.metric, "error|invalid")->capture_default_str();

    std::string t1_in, t1_backend, t1_out;
    int t1_shots = 1008;
    auto *table1 = app.add_subcommand("table1", "Relative error (%) table for N=16");
    table1->add_option("--in", t1_in, "Aggregate CSV")->required();
    table1->add_option("--backend", t1_backend, "Backend (default: first noisy backend)");
    table1->add_option("--shots", t1_shots, "Shot count")->capture_default_str();
    table1->add_option("--out", t1_out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*generate) return run_generate(gen);
        if (*solve) return run_solve(sol);
        if (*sweep) return run_sweep(sw);
        if (*aggregate) return run_aggregate(agg_in, agg_out);
        if (*plot) return run_plot(pl);
        if (*table1) return run_table1(t1_in, t1_backend, t1_shots, t1_out);
    } catch (const qrw::ParameterError &e) {
        std::cerr << "qrw: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "qrw: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitUsage;
}
