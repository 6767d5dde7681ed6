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

#include "qrw/solver.h"

#include <chrono>
#include <cmath>
#include <ostream>
#include <string>

#include "qrw/errors.h"
#include "qrw/oracle.h"
#include "text_util.h"

namespace qrw {

int truncation_length(double gamma, double epsilon) {
    if (!(gamma > 0.0 && gamma < 1.0)) throw ParameterError("gamma must lie in (0, 1)");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw ParameterError("epsilon must lie in (0, 1)");
    const double ratio = std::log(1.0 / epsilon) / std::log(1.0 / gamma);
    const double nearest = std::round(ratio);
    const double snapped = std::abs(ratio - nearest) <= 1e-12 * std::max(1.0, nearest) ? nearest : ratio;
    return std::max(1, static_cast<int>(std::ceil(snapped)));
}

void SolverConfig::validate() const {
    if (shots < 1) throw ParameterError("shots must be positive");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw ParameterError("epsilon must lie in (0, 1)");
    if (c_override && *c_override < 0) throw ParameterError("truncation length must be non-negative");
    if (mitigation && max_retries < 1) throw ParameterError("max_retries must be at least 1 with mitigation");
    if (noise.enabled) noise.validate();
}

void InvalidStepStats::add(const WalkRecord &record) {
    total_invalid += record.invalid_steps;
    total_retries += record.retries;
    ++walks;
    if (by_step_index.size() < record.invalid_by_step.size()) by_step_index.resize(record.invalid_by_step.size(), 0);
    for (size_t s = 0; s < record.invalid_by_step.size(); ++s) by_step_index[s] += record.invalid_by_step[s];
    per_shot_mean = static_cast<double>(total_invalid) / static_cast<double>(walks);
}

void InvalidStepStats::merge(const InvalidStepStats &other) {
    total_invalid += other.total_invalid;
    total_retries += other.total_retries;
    walks += other.walks;
    if (by_step_index.size() < other.by_step_index.size()) by_step_index.resize(other.by_step_index.size(), 0);
    for (size_t s = 0; s < other.by_step_index.size(); ++s) by_step_index[s] += other.by_step_index[s];
    per_shot_mean = walks > 0 ? static_cast<double>(total_invalid) / static_cast<double>(walks) : 0.0;
}

RetryExhaustedError::RetryExhaustedError(int start_component, int step, int node, int max_retries)
    : std::runtime_error("retry limit " + std::to_string(max_retries) + " exhausted at step " + std::to_string(step) +
                         " from node " + std::to_string(node) + " (component " + std::to_string(start_component) +
                         ")"),
      start_component_(start_component),
      step_(step),
      node_(node) {}

WalkRecord run_walk(int start, const ProblemInstance &instance, const SolverConfig &config, const StepCircuit &circuit,
                    Rng &rng) {
    const int dim = instance.dim();
    if (start < 0 || start >= dim) {
        throw ParameterError("start component " + std::to_string(start) + " outside [0, " + std::to_string(dim) + ")");
    }
    const int c = config.truncation(instance.gamma);
    const auto &p = instance.matrix;
    const auto &b = instance.b;

    WalkRecord rec;
    rec.start_component = start;
    rec.trajectory.reserve(static_cast<size_t>(c) + 1);
    rec.trajectory.push_back(start);
    rec.invalid_by_step.assign(static_cast<size_t>(c), 0);
    rec.contribution = b[static_cast<size_t>(start)];

    double weight = 1.0;
    int current = start;
    for (int s = 0; s < c; ++s) {
        int next = circuit.sample(current, rng);
        if (config.mitigation) {
            int rejected = 0;
            while (detect_invalid(p, current, next)) {
                ++rec.retries;
                ++rec.invalid_by_step[static_cast<size_t>(s)];
                if (++rejected >= config.max_retries) {
                    throw RetryExhaustedError(start, s, current, config.max_retries);
                }
                next = circuit.sample(current, rng);
            }
        } else if (detect_invalid(p, current, next)) {
            ++rec.invalid_steps;
            ++rec.invalid_by_step[static_cast<size_t>(s)];
        }
        weight *= instance.gamma;
        rec.contribution += weight * b[static_cast<size_t>(next)];
        rec.trajectory.push_back(next);
        current = next;
    }
    return rec;
}

WalkRecord run_walk(int start, const ProblemInstance &instance, const SolverConfig &config, Rng &rng) {
    StepCircuit circuit(instance.angles, config.noise);
    return run_walk(start, instance, config, circuit, rng);
}

namespace {

ComponentEstimate estimate_with(int start, const ProblemInstance &instance, const SolverConfig &config,
                                const StepCircuit &circuit) {
    ComponentEstimate out;
    double sum = 0.0;
    for (int shot = 0; shot < config.shots; ++shot) {
        Rng rng(walk_seed(config.master_seed, start, shot));
        auto rec = run_walk(start, instance, config, circuit, rng);
        sum += rec.contribution;
        out.stats.add(rec);
    }
    out.estimate = sum / static_cast<double>(config.shots);
    return out;
}

}  // namespace

ComponentEstimate estimate_component(int start, const ProblemInstance &instance, const SolverConfig &config) {
    config.validate();
    StepCircuit circuit(instance.angles, config.noise);
    return estimate_with(start, instance, config, circuit);
}

SolveReport solve(const ProblemInstance &instance, const SolverConfig &config) {
    config.validate();
    const auto t0 = std::chrono::steady_clock::now();
    StepCircuit circuit(instance.angles, config.noise);

    SolveReport report;
    report.config = config;
    report.truncation = config.truncation(instance.gamma);
    const int dim = instance.dim();
    report.estimate.resize(static_cast<size_t>(dim));
    report.component_stats.resize(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i) {
        auto est = estimate_with(i, instance, config, circuit);
        report.estimate[static_cast<size_t>(i)] = est.estimate;
        report.invalid_stats.merge(est.stats);
        report.component_stats[static_cast<size_t>(i)] = std::move(est.stats);
    }
    report.exact = oracle::exact_solve(instance).x;
    report.relative_error = oracle::relative_error(report.estimate, report.exact);
    report.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

void write_report(std::ostream &out, const SolveReport &report) {
    using text::format_double;
    const auto &cfg = report.config;
    out << "report\n";
    out << "backend " << cfg.noise.name << '\n';
    out << "mitigation " << (cfg.mitigation ? "on" : "off") << '\n';
    out << "shots " << cfg.shots << '\n';
    out << "epsilon " << format_double(cfg.epsilon) << '\n';
    out << "c " << report.truncation << '\n';
    out << "max_retries " << cfg.max_retries << '\n';
    out << "master_seed " << cfg.master_seed << '\n';
    out << "estimate";
    for (double v : report.estimate) out << ' ' << format_double(v);
    out << "\nexact";
    for (double v : report.exact) out << ' ' << format_double(v);
    out << "\nrelative_error " << format_double(report.relative_error) << '\n';
    out << "total_invalid " << report.invalid_stats.total_invalid << '\n';
    out << "total_retries " << report.invalid_stats.total_retries << '\n';
    out << "walks " << report.invalid_stats.walks << '\n';
    out << "per_shot_mean " << format_double(report.invalid_stats.per_shot_mean) << '\n';
    out << "invalid_by_step";
    for (auto v : report.invalid_stats.by_step_index) out << ' ' << v;
    out << "\nwall_time_ms " << format_double(report.wall_time_ms) << '\n';
    out << "end\n";
}

}  // namespace qrw
