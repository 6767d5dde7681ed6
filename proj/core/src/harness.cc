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

#include "qrw/harness.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>

#include "json.hpp"
#include "qrw/errors.h"
#include "qrw/rng.h"
#include "qrw/solver.h"
#include "text_util.h"

namespace qrw {

using nlohmann::json;

namespace {

constexpr uint64_t kAngleStream = 0x41;
constexpr uint64_t kRhsStream = 0x42;
constexpr uint64_t kWalkStream = 0x57;

std::string_view rhs_policy_name(RhsPolicy p) {
    return p == RhsPolicy::kSharedPerSize ? "shared-per-size" : "per-sample";
}

RhsPolicy rhs_policy_from(std::string_view s) {
    if (s == "shared-per-size") return RhsPolicy::kSharedPerSize;
    if (s == "per-sample") return RhsPolicy::kPerSample;
    throw FormatError("unknown rhs policy '" + std::string(s) + "'");
}

json noise_to_json(const NoiseParams &p) {
    return json{{"name", p.name},
                {"t1_us", p.t1_us},
                {"t2_us", p.t2_us},
                {"cnot_error", p.cnot_error},
                {"readout_error", p.readout_error},
                {"single_qubit_gate_ns", p.single_qubit_gate_ns},
                {"cnot_gate_ns", p.cnot_gate_ns},
                {"measurement_ns", p.measurement_ns},
                {"enabled", p.enabled}};
}

NoiseParams noise_from_json(const json &j) {
    NoiseParams p;
    p.name = j.at("name").get<std::string>();
    p.t1_us = j.at("t1_us").get<double>();
    p.t2_us = j.at("t2_us").get<double>();
    p.cnot_error = j.at("cnot_error").get<double>();
    p.readout_error = j.at("readout_error").get<double>();
    p.single_qubit_gate_ns = j.at("single_qubit_gate_ns").get<double>();
    p.cnot_gate_ns = j.at("cnot_gate_ns").get<double>();
    p.measurement_ns = j.at("measurement_ns").get<double>();
    p.enabled = j.at("enabled").get<bool>();
    return p;
}

json plan_to_json(const ExperimentPlan &plan) {
    json ks = json::object();
    for (int n : plan.sizes) ks[std::to_string(n)] = plan.ks_for(n);
    json backends = json::array();
    for (const auto &b : plan.backends) backends.push_back(noise_to_json(b));
    json modes = json::array();
    for (bool m : plan.mitigation_modes) modes.push_back(m ? "on" : "off");
    return json{{"sizes", plan.sizes},
                {"sparsity_ks", ks},
                {"shot_grid", plan.shot_grid},
                {"require_multiple_of_24", plan.require_multiple_of_24},
                {"samples_per_cell", plan.samples_per_cell},
                {"gamma", plan.gamma},
                {"epsilon", plan.epsilon},
                {"c_override", plan.c_override ? json(*plan.c_override) : json(nullptr)},
                {"backends", backends},
                {"mitigation_modes", modes},
                {"max_retries", plan.max_retries},
                {"master_seed", plan.master_seed},
                {"rhs_policy", rhs_policy_name(plan.rhs_policy)}};
}

ExperimentPlan plan_from_json(const json &j) {
    ExperimentPlan plan;
    plan.sizes = j.at("sizes").get<std::vector<int>>();
    plan.sparsity_ks.clear();
    for (const auto &[key, value] : j.at("sparsity_ks").items()) {
        plan.sparsity_ks[text::parse_int<int>(key)] = value.get<std::vector<int>>();
    }
    plan.shot_grid = j.at("shot_grid").get<std::vector<int>>();
    plan.require_multiple_of_24 = j.at("require_multiple_of_24").get<bool>();
    plan.samples_per_cell = j.at("samples_per_cell").get<int>();
    plan.gamma = j.at("gamma").get<double>();
    plan.epsilon = j.at("epsilon").get<double>();
    if (const auto &c = j.at("c_override"); !c.is_null()) plan.c_override = c.get<int>();
    plan.backends.clear();
    for (const auto &b : j.at("backends")) plan.backends.push_back(noise_from_json(b));
    plan.mitigation_modes.clear();
    for (const auto &m : j.at("mitigation_modes")) {
        const auto s = m.get<std::string>();
        if (s != "on" && s != "off") throw FormatError("mitigation mode must be 'on' or 'off'");
        plan.mitigation_modes.push_back(s == "on");
    }
    plan.max_retries = j.at("max_retries").get<int>();
    plan.master_seed = j.at("master_seed").get<uint64_t>();
    plan.rhs_policy = rhs_policy_from(j.at("rhs_policy").get<std::string>());
    return plan;
}

uint64_t fnv1a(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string bool_field(bool b) {
    return b ? "on" : "off";
}

bool parse_bool_field(std::string_view s) {
    if (s == "on") return true;
    if (s == "off") return false;
    throw FormatError("expected 'on' or 'off', got '" + std::string(s) + "'");
}

std::string row_line(const SweepResultRow &r, bool include_wall_time) {
    using text::format_double;
    std::string out;
    out.reserve(160);
    auto add = [&](std::string_view v) {
        if (!out.empty()) out.push_back(',');
        out.append(v);
    };
    add(r.run_id);
    add(std::to_string(r.n));
    add(std::to_string(r.N));
    add(format_double(r.sparsity_level));
    add(std::to_string(r.k));
    add(std::to_string(r.shots));
    add(std::to_string(r.sample_index));
    add(r.backend);
    add(bool_field(r.mitigation));
    add(format_double(r.gamma));
    add(std::to_string(r.c));
    add(r.relative_error ? format_double(*r.relative_error) : std::string(kErrorMarker));
    add(std::to_string(r.total_invalid));
    add(std::to_string(r.total_retries));
    add(format_double(r.condition_number));
    add(std::to_string(r.seed));
    out.push_back(',');
    if (include_wall_time) out.append(format_double(r.wall_time_ms));
    return out;
}

template <size_t N>
void check_header(std::string_view line, const std::array<std::string_view, N> &expected) {
    auto fields = text::split(text::trim(line), ',');
    if (fields.size() != N || !std::equal(fields.begin(), fields.end(), expected.begin())) {
        throw FormatError("unexpected CSV header: '" + std::string(line) + "'");
    }
}

template <size_t N>
std::string header_line(const std::array<std::string_view, N> &names) {
    std::string out;
    for (size_t i = 0; i < N; ++i) {
        if (i) out.push_back(',');
        out.append(names[i]);
    }
    return out;
}

}  // namespace

std::vector<int> ExperimentPlan::ks_for(int n) const {
    if (auto it = sparsity_ks.find(n); it != sparsity_ks.end()) return it->second;
    std::vector<int> ks;
    for (int k = 0; k <= n; ++k) ks.push_back(k);
    return ks;
}

void ExperimentPlan::validate() const {
    if (sizes.empty()) throw ParameterError("plan has no sizes");
    for (int n : sizes) {
        if (n < 1 || n > CoinAngles::kMaxQubits) throw ParameterError("size n must be in [1, 8]");
        for (int k : ks_for(n)) {
            if (k < 0 || k > n) {
                throw ParameterError("sparsity increment k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
            }
        }
    }
    if (std::adjacent_find(sizes.begin(), sizes.end(), [](int a, int b) { return a >= b; }) != sizes.end()) {
        throw ParameterError("sizes must be strictly increasing");
    }
    if (shot_grid.empty()) throw ParameterError("shot grid is empty");
    for (int s : shot_grid) {
        if (s < 1) throw ParameterError("shot counts must be positive");
        if (require_multiple_of_24 && s % 24 != 0) {
            throw ParameterError("shot count " + std::to_string(s) + " is not a multiple of 24");
        }
    }
    if (samples_per_cell < 1) throw ParameterError("samples per cell must be positive");
    if (!(gamma > 0.0 && gamma < 1.0)) throw ParameterError("gamma must lie in (0, 1)");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw ParameterError("epsilon must lie in (0, 1)");
    if (c_override && *c_override < 0) throw ParameterError("truncation length must be non-negative");
    if (backends.empty()) throw ParameterError("plan has no backends");
    for (const auto &b : backends) {
        if (b.name.empty() || b.name.find_first_of(",\"\n") != std::string::npos) {
            throw ParameterError("backend name '" + b.name + "' must be non-empty without commas or quotes");
        }
        if (b.enabled) b.validate();
    }
    if (mitigation_modes.empty()) throw ParameterError("plan has no mitigation modes");
    if (max_retries < 1) throw ParameterError("max_retries must be at least 1");
    if (workers < 1) throw ParameterError("workers must be at least 1");
}

int64_t ExperimentPlan::cell_count() const {
    int64_t instances = 0;
    for (int n : sizes) instances += static_cast<int64_t>(ks_for(n).size());
    return instances * samples_per_cell * static_cast<int64_t>(backends.size()) *
           static_cast<int64_t>(mitigation_modes.size()) * static_cast<int64_t>(shot_grid.size());
}

ProblemInstance plan_instance(const ExperimentPlan &plan, int n, int k, int sample) {
    const auto un = static_cast<uint64_t>(n);
    const auto us = static_cast<uint64_t>(sample);
    const uint64_t angle_seed = derive_seed(plan.master_seed, {kAngleStream, un, us});
    const uint64_t rhs_seed = plan.rhs_policy == RhsPolicy::kSharedPerSize
                                  ? derive_seed(plan.master_seed, {kRhsStream, un})
                                  : derive_seed(plan.master_seed, {kRhsStream, un, us});
    auto angles = apply_sparsity(random_coin_angles(n, angle_seed), k);
    return make_problem(std::move(angles), k, plan.gamma, random_rhs(1 << n, rhs_seed), angle_seed);
}

uint64_t plan_walk_seed(const ExperimentPlan &plan, int n, int sample) {
    return derive_seed(plan.master_seed, {kWalkStream, static_cast<uint64_t>(n), static_cast<uint64_t>(sample)});
}

std::string plan_run_id(const ExperimentPlan &plan) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fnv1a(plan_to_json(plan).dump())));
    return buf;
}

SweepResult run_plan(const ExperimentPlan &plan, const ProgressFn &progress) {
    plan.validate();

    struct Job {
        int n;
        int k;
        int sample;
    };
    std::vector<Job> jobs;
    for (int n : plan.sizes) {
        for (int k : plan.ks_for(n)) {
            for (int s = 0; s < plan.samples_per_cell; ++s) jobs.push_back({n, k, s});
        }
    }

    SweepResult result;
    result.run_id = plan_run_id(plan);
    const int64_t rows_per_job = static_cast<int64_t>(plan.backends.size() * plan.mitigation_modes.size() *
                                                      plan.shot_grid.size());
    const int64_t total_rows = rows_per_job * static_cast<int64_t>(jobs.size());
    std::vector<std::vector<SweepResultRow>> per_job(jobs.size());

    std::atomic<size_t> next_job{0};
    std::atomic<int64_t> done_rows{0};
    std::mutex progress_mu;

    auto run_job = [&](const Job &job) {
        std::vector<SweepResultRow> rows;
        rows.reserve(static_cast<size_t>(rows_per_job));
        const auto instance = plan_instance(plan, job.n, job.k, job.sample);
        for (const auto &backend : plan.backends) {
            for (bool mitigate : plan.mitigation_modes) {
                for (int shots : plan.shot_grid) {
                    SolverConfig cfg;
                    cfg.shots = shots;
                    cfg.epsilon = plan.epsilon;
                    cfg.c_override = plan.c_override;
                    cfg.mitigation = mitigate;
                    cfg.max_retries = plan.max_retries;
                    cfg.noise = backend;
                    cfg.master_seed = plan_walk_seed(plan, job.n, job.sample);

                    SweepResultRow row;
                    row.run_id = result.run_id;
                    row.n = job.n;
                    row.N = 1 << job.n;
                    row.sparsity_level = instance.sparsity_level;
                    row.k = job.k;
                    row.shots = shots;
                    row.sample_index = job.sample;
                    row.backend = backend.name;
                    row.mitigation = mitigate;
                    row.gamma = plan.gamma;
                    row.c = cfg.truncation(plan.gamma);
                    row.condition_number = instance.condition_number.value_or(0.0);
                    row.seed = instance.seed;
                    const auto t0 = std::chrono::steady_clock::now();
                    try {
                        auto report = solve(instance, cfg);
                        row.relative_error = report.relative_error;
                        row.total_invalid = report.invalid_stats.total_invalid;
                        row.total_retries = report.invalid_stats.total_retries;
                    } catch (const std::exception &e) {
                        row.relative_error.reset();
                        row.error = e.what();
                    }
                    row.wall_time_ms =
                        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
                    rows.push_back(std::move(row));
                    const int64_t done = ++done_rows;
                    if (progress) {
                        std::lock_guard lock(progress_mu);
                        progress(done, total_rows);
                    }
                }
            }
        }
        return rows;
    };

    auto worker = [&] {
        for (size_t i = next_job++; i < jobs.size(); i = next_job++) per_job[i] = run_job(jobs[i]);
    };

    const int threads = std::min<int>(plan.workers, static_cast<int>(std::max<size_t>(jobs.size(), 1)));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    result.rows.reserve(static_cast<size_t>(total_rows));
    for (auto &rows : per_job) {
        for (auto &r : rows) {
            if (r.failed()) ++result.error_rows;
            result.rows.push_back(std::move(r));
        }
    }
    return result;
}

std::string manifest_json(const ExperimentPlan &plan, const SweepResult &result) {
    json instances = json::array();
    for (int n : plan.sizes) {
        for (int s = 0; s < plan.samples_per_cell; ++s) {
            const auto inst = plan_instance(plan, n, 0, s);
            instances.push_back({{"n", n},
                                 {"sample", s},
                                 {"instance_seed", inst.seed},
                                 {"walk_seed", plan_walk_seed(plan, n, s)}});
        }
    }
    json errors = json::array();
    for (const auto &r : result.rows) {
        if (!r.failed()) continue;
        errors.push_back({{"n", r.n},
                          {"k", r.k},
                          {"shots", r.shots},
                          {"sample_index", r.sample_index},
                          {"backend", r.backend},
                          {"mitigation", bool_field(r.mitigation)},
                          {"error", r.error}});
    }
    json m{{"format", "qrw-sweep-manifest/1"},
           {"run_id", result.run_id},
           {"plan", plan_to_json(plan)},
           {"row_count", result.rows.size()},
           {"error_rows", errors},
           {"instances", instances}};
    return m.dump(2) + "\n";
}

ExperimentPlan plan_from_manifest(std::string_view json_text) {
    try {
        const auto j = json::parse(json_text);
        if (j.at("format").get<std::string>() != "qrw-sweep-manifest/1") {
            throw FormatError("unsupported manifest format");
        }
        return plan_from_json(j.at("plan"));
    } catch (const json::exception &e) {
        throw FormatError(std::string("malformed manifest: ") + e.what());
    }
}

void write_rows_csv(std::ostream &out, std::span<const SweepResultRow> rows) {
    out << header_line(kSweepCsvHeader) << '\n';
    for (const auto &r : rows) out << row_line(r, true) << '\n';
}

std::string row_fingerprint(const SweepResultRow &row) {
    return row_line(row, false);
}

std::vector<SweepResultRow> read_rows_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line)) throw FormatError("empty CSV");
    check_header(line, kSweepCsvHeader);
    std::vector<SweepResultRow> rows;
    while (std::getline(in, line)) {
        auto view = text::trim(line);
        if (view.empty()) continue;
        auto f = text::split(view, ',');
        if (f.size() != kSweepCsvHeader.size()) throw FormatError("wrong field count in row: '" + line + "'");
        SweepResultRow r;
        r.run_id = std::string(f[0]);
        r.n = text::parse_int<int>(f[1]);
        r.N = text::parse_int<int>(f[2]);
        r.sparsity_level = text::parse_double(f[3]);
        r.k = text::parse_int<int>(f[4]);
        r.shots = text::parse_int<int>(f[5]);
        r.sample_index = text::parse_int<int>(f[6]);
        r.backend = std::string(f[7]);
        r.mitigation = parse_bool_field(f[8]);
        r.gamma = text::parse_double(f[9]);
        r.c = text::parse_int<int>(f[10]);
        if (f[11] != kErrorMarker) r.relative_error = text::parse_double(f[11]);
        r.total_invalid = text::parse_int<int64_t>(f[12]);
        r.total_retries = text::parse_int<int64_t>(f[13]);
        r.condition_number = text::parse_double(f[14]);
        r.seed = text::parse_int<uint64_t>(f[15]);
        r.wall_time_ms = f[16].empty() ? 0.0 : text::parse_double(f[16]);
        rows.push_back(std::move(r));
    }
    return rows;
}

void write_sweep_outputs(const ExperimentPlan &plan, const SweepResult &result, const std::string &dir) {
    std::filesystem::create_directories(dir);
    const auto base = std::filesystem::path(dir);
    {
        std::ofstream out(base / "rows.csv");
        if (!out) throw std::runtime_error("cannot write " + (base / "rows.csv").string());
        write_rows_csv(out, result.rows);
    }
    std::ofstream out(base / "manifest.json");
    if (!out) throw std::runtime_error("cannot write " + (base / "manifest.json").string());
    out << manifest_json(plan, result);
}

MeanSem mean_and_sem(std::span<const double> values) {
    if (values.empty()) throw ParameterError("mean_and_sem of an empty group");
    MeanSem out;
    out.count = static_cast<int64_t>(values.size());
    double sum = 0.0;
    for (double v : values) sum += v;
    out.mean = sum / static_cast<double>(out.count);
    if (out.count > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - out.mean) * (v - out.mean);
        const double stddev = std::sqrt(ss / static_cast<double>(out.count - 1));
        out.sem = stddev / std::sqrt(static_cast<double>(out.count));
    }
    return out;
}

double median(std::vector<double> values) {
    if (values.empty()) throw ParameterError("median of an empty group");
    std::sort(values.begin(), values.end());
    const size_t m = values.size() / 2;
    return values.size() % 2 ? values[m] : 0.5 * (values[m - 1] + values[m]);
}

std::vector<AggregateRow> aggregate(std::span<const SweepResultRow> rows) {
    using Key = std::tuple<int, std::string, bool, int, int>;
    struct Group {
        double sparsity = 0.0;
        std::vector<double> errors;
        std::vector<double> invalid;
        std::vector<double> retries;
    };
    std::map<Key, Group> groups;
    for (const auto &r : rows) {
        if (r.failed()) continue;
        auto &g = groups[Key{r.n, r.backend, r.mitigation, r.k, r.shots}];
        g.sparsity = r.sparsity_level;
        g.errors.push_back(*r.relative_error);
        g.invalid.push_back(static_cast<double>(r.total_invalid));
        g.retries.push_back(static_cast<double>(r.total_retries));
    }
    if (groups.empty()) throw ParameterError("aggregate: no usable rows");

    std::vector<AggregateRow> out;
    out.reserve(groups.size());
    for (const auto &[key, g] : groups) {
        const auto &[n, backend, mitigation, k, shots] = key;
        const auto err = mean_and_sem(g.errors);
        const auto inv = mean_and_sem(g.invalid);
        const auto ret = mean_and_sem(g.retries);
        AggregateRow a;
        a.n = n;
        a.N = 1 << n;
        a.k = k;
        a.sparsity_level = g.sparsity;
        a.backend = backend;
        a.mitigation = mitigation;
        a.shots = shots;
        a.count = err.count;
        a.mean_relative_error = err.mean;
        a.sem_relative_error = err.sem;
        a.median_relative_error = median(g.errors);
        a.mean_total_invalid = inv.mean;
        a.sem_total_invalid = inv.sem;
        a.mean_total_retries = ret.mean;
        a.single_sample = err.count == 1;
        out.push_back(std::move(a));
    }
    return out;
}

void write_aggregate_csv(std::ostream &out, std::span<const AggregateRow> rows) {
    using text::format_double;
    out << header_line(kAggregateCsvHeader) << '\n';
    for (const auto &a : rows) {
        out << a.n << ',' << a.N << ',' << a.k << ',' << format_double(a.sparsity_level) << ',' << a.backend << ','
            << bool_field(a.mitigation) << ',' << a.shots << ',' << a.count << ','
            << format_double(a.mean_relative_error) << ',' << format_double(a.sem_relative_error) << ','
            << format_double(a.median_relative_error) << ',' << format_double(a.mean_total_invalid) << ','
            << format_double(a.sem_total_invalid) << ',' << format_double(a.mean_total_retries) << ','
            << (a.single_sample ? 1 : 0) << '\n';
    }
}

std::vector<AggregateRow> read_aggregate_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line)) throw FormatError("empty CSV");
    check_header(line, kAggregateCsvHeader);
    std::vector<AggregateRow> rows;
    while (std::getline(in, line)) {
        auto view = text::trim(line);
        if (view.empty()) continue;
        auto f = text::split(view, ',');
        if (f.size() != kAggregateCsvHeader.size()) throw FormatError("wrong field count in row: '" + line + "'");
        AggregateRow a;
        a.n = text::parse_int<int>(f[0]);
        a.N = text::parse_int<int>(f[1]);
        a.k = text::parse_int<int>(f[2]);
        a.sparsity_level = text::parse_double(f[3]);
        a.backend = std::string(f[4]);
        a.mitigation = parse_bool_field(f[5]);
        a.shots = text::parse_int<int>(f[6]);
        a.count = text::parse_int<int64_t>(f[7]);
        a.mean_relative_error = text::parse_double(f[8]);
        a.sem_relative_error = text::parse_double(f[9]);
        a.median_relative_error = text::parse_double(f[10]);
        a.mean_total_invalid = text::parse_double(f[11]);
        a.sem_total_invalid = text::parse_double(f[12]);
        a.mean_total_retries = text::parse_double(f[13]);
        a.single_sample = text::parse_int<int>(f[14]) != 0;
        rows.push_back(std::move(a));
    }
    return rows;
}

bool Table1::complete() const {
    for (int i = 0; i < kLevels; ++i) {
        if (!unmitigated[static_cast<size_t>(i)] || !mitigated[static_cast<size_t>(i)]) return false;
    }
    return true;
}

std::string Table1::render() const {
    std::ostringstream out;
    char buf[64];
    out << "Relative error (%), N=16, " << shots << " shots, backend " << (backend.empty() ? "(none)" : backend)
        << '\n';
    std::snprintf(buf, sizeof(buf), "%-14s", "Sparsity");
    out << buf;
    for (int i = 0; i < kLevels; ++i) {
        const double s = sparsity[static_cast<size_t>(i)];
        if (i == 0) {
            std::snprintf(buf, sizeof(buf), "%11s", "0 (dense)");
        } else if (s == 0.5 || s == 0.75) {
            std::snprintf(buf, sizeof(buf), "%11.2f", s);
        } else {
            std::snprintf(buf, sizeof(buf), "%11s", text::format_double(s).c_str());
        }
        out << buf;
    }
    out << '\n';
    auto emit_row = [&](const char *label, const std::array<std::optional<double>, kLevels> &cells) {
        std::snprintf(buf, sizeof(buf), "%-14s", label);
        out << buf;
        for (const auto &c : cells) {
            if (c) {
                std::snprintf(buf, sizeof(buf), "%11.2f", *c);
            } else {
                std::snprintf(buf, sizeof(buf), "%11s", "--");
            }
            out << buf;
        }
        out << '\n';
    };
    emit_row("Un-mitigated", unmitigated);
    emit_row("Mitigated", mitigated);
    return out.str();
}

Table1 build_table1(std::span<const AggregateRow> rows, std::string_view backend, int shots) {
    Table1 t;
    t.shots = shots;
    if (backend.empty()) {
        for (const auto &a : rows) {
            if (a.n == 4 && a.backend != "noiseless") {
                t.backend = a.backend;
                break;
            }
        }
    } else {
        t.backend = std::string(backend);
    }
    for (const auto &a : rows) {
        if (a.n != 4 || a.shots != shots || a.backend != t.backend) continue;
        if (a.k < 0 || a.k >= Table1::kLevels) continue;
        auto &cell = a.mitigation ? t.mitigated[static_cast<size_t>(a.k)] : t.unmitigated[static_cast<size_t>(a.k)];
        cell = 100.0 * a.mean_relative_error;
    }
    return t;
}

}  // namespace qrw
