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

#ifndef QRW_NOISE_PARAMS_H
#define QRW_NOISE_PARAMS_H

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace qrw {

/// Backend-averaged noise description. Times for T1/T2 are in microseconds,
/// gate durations in nanoseconds.
struct NoiseParams {
    std::string name = "noiseless";
    double t1_us = 1.0e300;
    double t2_us = 1.0e300;
    double cnot_error = 0.0;
    double readout_error = 0.0;
    double single_qubit_gate_ns = 50.0;
    double cnot_gate_ns = 300.0;
    double measurement_ns = 1000.0;
    bool enabled = false;

    /// min(T2, 2 T1): the largest T2 a physical relaxation channel allows.
    double t2_effective_us() const;

    /// Throws ParameterError for probabilities outside [0, 1] or
    /// non-positive times.
    void validate() const;

    bool operator==(const NoiseParams &) const = default;
};

namespace presets {
NoiseParams noiseless();
NoiseParams fake_boeblingen();
NoiseParams fake_casablanca();
}  // namespace presets

/// Names accepted by noise_preset().
std::vector<std::string> noise_preset_names();
/// "noiseless", "fake-boeblingen" or "fake-casablanca". Throws ParameterError.
NoiseParams noise_preset(std::string_view name);

/// Key-value config, one `key = value` per line, '#' comments. Keys:
///   name, Avg. T1 (μs), Avg. T2 (μs), Avg. CNOT Error, Avg. Readout Error,
///   Single-qubit gate (ns), CNOT gate (ns), Measurement (ns), enabled
/// "us" is accepted in place of "μs". Unspecified keys keep the defaults of
/// a noise-enabled model with ideal gates. Throws FormatError.
NoiseParams parse_noise_config(std::istream &in);
NoiseParams load_noise_config(const std::string &path);
void write_noise_config(std::ostream &out, const NoiseParams &noise);

/// Preset name or path of a config file.
NoiseParams resolve_backend(std::string_view name_or_path);

}  // namespace qrw

#endif  // QRW_NOISE_PARAMS_H
