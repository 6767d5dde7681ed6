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

#ifndef QRW_SOLVER_H
#define QRW_SOLVER_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qrw/circuit_sim.h"
#include "qrw/matrix_model.h"
#include "qrw/noise_params.h"
#include "qrw/rng.h"

namespace qrw {

/// ceil(log(1/epsilon) / log(1/gamma)), at least 1. Ratios within 1e-12 of
/// an integer are snapped to it before the ceiling.
/// Throws ParameterError unless 0 < gamma < 1 and 0 < epsilon < 1.
int truncation_length(double gamma, double epsilon);

/// Shots are per solution component: solving an N-vector runs N * shots walks.
struct SolverConfig {
    int shots = 1008;
    double epsilon = 0.01;
    std::optional<int> c_override;
    bool mitigation = false;
    int max_retries = 1000;
    NoiseParams noise = presets::noiseless();
    uint64_t master_seed = 0;

    int truncation(double gamma) const {
        return c_override ? *c_override : truncation_length(gamma, epsilon);
    }
    /// Throws ParameterError.
    void validate() const;
};

/// O(1) lookup: was the sampled step i -> j a structural zero of P?
inline bool detect_invalid(const TransitionMatrix &p, int i, int j) {
    return p.is_structural_zero(i, j);
}

struct WalkRecord {
    int start_component = 0;
    /// I_0 ... I_c.
    std::vector<int> trajectory;
    /// sum_{s=0}^{c} gamma^s b[I_s].
    double contribution = 0.0;
    /// Accepted structural-zero transitions (mitigation off).
    int64_t invalid_steps = 0;
    /// Rejected and re-sampled transitions (mitigation on).
    int64_t retries = 0;
    /// Per step index s (transition I_s -> I_{s+1}): invalid or retried samples.
    std::vector<int64_t> invalid_by_step;
};

struct InvalidStepStats {
    int64_t total_invalid = 0;
    int64_t total_retries = 0;
    int64_t walks = 0;
    /// total_invalid / walks.
    double per_shot_mean = 0.0;
    std::vector<int64_t> by_step_index;

    void add(const WalkRecord &record);
    void merge(const InvalidStepStats &other);
};

/// Mitigated walk exceeded max_retries on one step.
class RetryExhaustedError : public std::runtime_error {
   public:
    RetryExhaustedError(int start_component, int step, int node, int max_retries);

    int start_component() const { return start_component_; }
    int step() const { return step_; }
    int node() const { return node_; }

   private:
    int start_component_;
    int step_;
    int node_;
};

/// One shot starting at `start`. Takes exactly c sampled steps.
WalkRecord run_walk(int start, const ProblemInstance &instance, const SolverConfig &config, Rng &rng);
/// Same, with a prebuilt step circuit for the instance's angles.
WalkRecord run_walk(int start, const ProblemInstance &instance, const SolverConfig &config,
                    const StepCircuit &circuit, Rng &rng);

/// Seed of shot `shot` of component `component`.
inline uint64_t walk_seed(uint64_t master_seed, int component, int shot) {
    return derive_seed(master_seed, {static_cast<uint64_t>(component), static_cast<uint64_t>(shot)});
}

struct ComponentEstimate {
    double estimate = 0.0;
    InvalidStepStats stats;
};

/// Mean contribution over config.shots walks from `start`.
ComponentEstimate estimate_component(int start, const ProblemInstance &instance, const SolverConfig &config);

struct SolveReport {
    std::vector<double> estimate;
    std::vector<double> exact;
    double relative_error = 0.0;
    InvalidStepStats invalid_stats;
    /// Per-component breakdown, index = component.
    std::vector<InvalidStepStats> component_stats;
    SolverConfig config;
    int truncation = 0;
    double wall_time_ms = 0.0;
};

SolveReport solve(const ProblemInstance &instance, const SolverConfig &config);

void write_report(std::ostream &out, const SolveReport &report);

}  // namespace qrw

#endif  // QRW_SOLVER_H
