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

#ifndef QRW_HARNESS_H
#define QRW_HARNESS_H

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qrw/matrix_model.h"
#include "qrw/noise_params.h"

namespace qrw {

/// How right-hand sides are drawn across the samples of one matrix size.
enum class RhsPolicy {
    /// One b per size, shared by every sample and sparsity level.
    kSharedPerSize,
    /// A fresh b per (size, sample).
    kPerSample,
};

inline const std::vector<int> kDefaultShotGrid = {24, 48, 96, 216, 456, 1008};

/// A sweep over size x sparsity x backend x mitigation x shots, with
/// `samples_per_cell` random instances per (size, sparsity).
struct ExperimentPlan {
    std::vector<int> sizes = {2};
    /// Sparsity increments per size; a size missing here sweeps k = 0..n.
    std::map<int, std::vector<int>> sparsity_ks;
    std::vector<int> shot_grid = kDefaultShotGrid;
    bool require_multiple_of_24 = true;
    int samples_per_cell = 50;
    double gamma = 0.5;
    double epsilon = 0.01;
    std::optional<int> c_override;
    std::vector<NoiseParams> backends = {presets::noiseless()};
    std::vector<bool> mitigation_modes = {false};
    int max_retries = 1000;
    uint64_t master_seed = 0;
    RhsPolicy rhs_policy = RhsPolicy::kSharedPerSize;

    /// Execution knob only; never changes results.
    int workers = 1;

    std::vector<int> ks_for(int n) const;
    /// Throws ParameterError.
    void validate() const;
    /// Number of rows run_plan produces.
    int64_t cell_count() const;
};

/// Instance for (size, k, sample). Identical across shots, backends and
/// mitigation modes, and the thetas are shared across k.
ProblemInstance plan_instance(const ExperimentPlan &plan, int n, int k, int sample);
/// Master seed for the walks of (size, sample), shared by every other axis.
uint64_t plan_walk_seed(const ExperimentPlan &plan, int n, int sample);

struct SweepResultRow {
    std::string run_id;
    int n = 0;
    int N = 0;
    double sparsity_level = 0.0;
    int k = 0;
    int shots = 0;
    int sample_index = 0;
    std::string backend;
    bool mitigation = false;
    double gamma = 0.0;
    int c = 0;
    /// Empty when the solve failed; serialized as "ERROR".
    std::optional<double> relative_error;
    int64_t total_invalid = 0;
    int64_t total_retries = 0;
    double condition_number = 0.0;
    uint64_t seed = 0;
    double wall_time_ms = 0.0;
    /// Failure description; not part of the CSV schema.
    std::string error;

    bool failed() const { return !relative_error.has_value(); }
};

inline constexpr std::array<std::string_view, 17> kSweepCsvHeader = {
    "run_id", "n",      "N",     "sparsity_level", "k",    "shots",         "sample_index",
    "backend", "mitigation", "gamma", "c", "relative_error", "total_invalid", "total_retries",
    "condition_number", "seed", "wall_time_ms"};
inline constexpr std::string_view kErrorMarker = "ERROR";

struct SweepResult {
    std::string run_id;
    std::vector<SweepResultRow> rows;
    int64_t error_rows = 0;
};

/// Progress callback: (rows finished, rows total).
using ProgressFn = std::function<void(int64_t, int64_t)>;

/// Hex digest of the plan's canonical JSON. Identifies the sweep in rows.
std::string plan_run_id(const ExperimentPlan &plan);

/// Runs every cell. Solver failures become error-marked rows; the sweep
/// continues. Row order is fixed by the plan, independent of `workers`.
SweepResult run_plan(const ExperimentPlan &plan, const ProgressFn &progress = {});

/// JSON manifest: the full plan, resolved backend parameters, per-instance
/// seeds and any error rows.
std::string manifest_json(const ExperimentPlan &plan, const SweepResult &result);
/// Rebuilds the plan from a manifest. Throws FormatError.
ExperimentPlan plan_from_manifest(std::string_view json_text);

void write_rows_csv(std::ostream &out, std::span<const SweepResultRow> rows);
/// Throws FormatError on a header mismatch or malformed field.
std::vector<SweepResultRow> read_rows_csv(std::istream &in);
/// The CSV line of a row with wall_time_ms blanked, for determinism checks.
std::string row_fingerprint(const SweepResultRow &row);

/// Writes rows.csv and manifest.json under `dir` (created if missing).
void write_sweep_outputs(const ExperimentPlan &plan, const SweepResult &result, const std::string &dir);

struct MeanSem {
    double mean = 0.0;
    /// Sample standard deviation / sqrt(count); 0 when count == 1.
    double sem = 0.0;
    int64_t count = 0;
};

/// Throws ParameterError on empty input.
MeanSem mean_and_sem(std::span<const double> values);
double median(std::vector<double> values);

struct AggregateRow {
    int n = 0;
    int N = 0;
    int k = 0;
    double sparsity_level = 0.0;
    std::string backend;
    bool mitigation = false;
    int shots = 0;
    int64_t count = 0;
    double mean_relative_error = 0.0;
    double sem_relative_error = 0.0;
    double median_relative_error = 0.0;
    double mean_total_invalid = 0.0;
    double sem_total_invalid = 0.0;
    double mean_total_retries = 0.0;
    /// Only one sample: SEM reported as 0 by convention.
    bool single_sample = false;
};

inline constexpr std::array<std::string_view, 15> kAggregateCsvHeader = {
    "n", "N", "k", "sparsity_level", "backend", "mitigation", "shots", "count",
    "mean_relative_error", "sem_relative_error", "median_relative_error",
    "mean_total_invalid", "sem_total_invalid", "mean_total_retries", "single_sample"};

/// Groups by (n, k, backend, mitigation, shots), skipping error rows.
/// Throws ParameterError if no usable rows remain or a group is empty.
std::vector<AggregateRow> aggregate(std::span<const SweepResultRow> rows);

void write_aggregate_csv(std::ostream &out, std::span<const AggregateRow> rows);
std::vector<AggregateRow> read_aggregate_csv(std::istream &in);

/// Mean relative error (%) at N = 16 and a fixed shot count, by sparsity
/// level and mitigation mode.
struct Table1 {
    static constexpr int kLevels = 5;
    std::string backend;
    int shots = 1008;
    std::array<double, kLevels> sparsity{0.0, 0.5, 0.75, 0.875, 0.9375};
    std::array<std::optional<double>, kLevels> unmitigated;
    std::array<std::optional<double>, kLevels> mitigated;

    bool complete() const;
    /// Fixed-width text; missing cells print as "--".
    std::string render() const;
};

/// Empty `backend` picks the first noisy backend present at n = 4.
Table1 build_table1(std::span<const AggregateRow> rows, std::string_view backend = {}, int shots = 1008);

}  // namespace qrw

#endif  // QRW_HARNESS_H
