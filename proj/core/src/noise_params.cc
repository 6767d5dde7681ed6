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

#include "qrw/noise_params.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "qrw/errors.h"
#include "text_util.h"

namespace qrw {

double NoiseParams::t2_effective_us() const {
    return std::min(t2_us, 2.0 * t1_us);
}

void NoiseParams::validate() const {
    auto prob = [](double p, const char *what) {
        if (!(p >= 0.0 && p <= 1.0)) throw ParameterError(std::string(what) + " must lie in [0, 1]");
    };
    auto positive = [](double t, const char *what) {
        if (!(t > 0.0)) throw ParameterError(std::string(what) + " must be positive");
    };
    prob(cnot_error, "CNOT error");
    prob(readout_error, "readout error");
    positive(t1_us, "T1");
    positive(t2_us, "T2");
    positive(single_qubit_gate_ns, "single-qubit gate duration");
    positive(cnot_gate_ns, "CNOT gate duration");
    positive(measurement_ns, "measurement duration");
}

namespace presets {

NoiseParams noiseless() {
    return NoiseParams{};
}

// Backend averages: T1 (us), T2 (us), CNOT error, readout error.
NoiseParams fake_boeblingen() {
    NoiseParams p;
    p.name = "fake-boeblingen";
    p.t1_us = 72.775;
    p.t2_us = 153.457;
    p.cnot_error = 0.03211;
    p.readout_error = 0.05258;
    p.enabled = true;
    return p;
}

NoiseParams fake_casablanca() {
    NoiseParams p;
    p.name = "fake-casablanca";
    p.t1_us = 89.968;
    p.t2_us = 85.496;
    p.cnot_error = 0.01274;
    p.readout_error = 0.01898;
    p.enabled = true;
    return p;
}

}  // namespace presets

std::vector<std::string> noise_preset_names() {
    return {"noiseless", "fake-boeblingen", "fake-casablanca"};
}

NoiseParams noise_preset(std::string_view name) {
    if (name == "noiseless") return presets::noiseless();
    if (name == "fake-boeblingen") return presets::fake_boeblingen();
    if (name == "fake-casablanca") return presets::fake_casablanca();
    throw ParameterError("unknown noise preset '" + std::string(name) + "'");
}

namespace {

// Canonical keys as written; parse also accepts "us" for "μs".
constexpr std::string_view kT1Key = "Avg. T1 (μs)";
constexpr std::string_view kT2Key = "Avg. T2 (μs)";
constexpr std::string_view kCnotKey = "Avg. CNOT Error";
constexpr std::string_view kReadoutKey = "Avg. Readout Error";
constexpr std::string_view k1qKey = "Single-qubit gate (ns)";
constexpr std::string_view kCxKey = "CNOT gate (ns)";
constexpr std::string_view kMeasKey = "Measurement (ns)";

std::string normalize_key(std::string_view key) {
    std::string k(key);
    const std::string micro = "μs";
    if (auto pos = k.find(micro); pos != std::string::npos) k.replace(pos, micro.size(), "us");
    return k;
}

bool parse_bool(std::string_view v) {
    if (v == "true" || v == "1" || v == "on" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "off" || v == "no") return false;
    throw FormatError("not a boolean: '" + std::string(v) + "'");
}

}  // namespace

NoiseParams parse_noise_config(std::istream &in) {
    NoiseParams p;
    p.name = "custom";
    p.enabled = true;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto view = text::trim(line);
        if (view.empty() || view.front() == '#') continue;
        auto eq = view.find('=');
        if (eq == std::string_view::npos) {
            throw FormatError("line " + std::to_string(lineno) + ": expected 'key = value'");
        }
        const std::string key = normalize_key(text::trim(view.substr(0, eq)));
        const auto value = text::trim(view.substr(eq + 1));
        if (key == "name") {
            p.name = std::string(value);
        } else if (key == normalize_key(kT1Key)) {
            p.t1_us = text::parse_double(value);
        } else if (key == normalize_key(kT2Key)) {
            p.t2_us = text::parse_double(value);
        } else if (key == kCnotKey) {
            p.cnot_error = text::parse_double(value);
        } else if (key == kReadoutKey) {
            p.readout_error = text::parse_double(value);
        } else if (key == k1qKey) {
            p.single_qubit_gate_ns = text::parse_double(value);
        } else if (key == kCxKey) {
            p.cnot_gate_ns = text::parse_double(value);
        } else if (key == kMeasKey) {
            p.measurement_ns = text::parse_double(value);
        } else if (key == "enabled") {
            p.enabled = parse_bool(value);
        } else {
            throw FormatError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    try {
        p.validate();
    } catch (const ParameterError &e) {
        throw FormatError(std::string("invalid noise config: ") + e.what());
    }
    return p;
}

NoiseParams load_noise_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open noise config '" + path + "'");
    auto p = parse_noise_config(in);
    if (p.name == "custom") p.name = std::filesystem::path(path).stem().string();
    return p;
}

void write_noise_config(std::ostream &out, const NoiseParams &noise) {
    using text::format_double;
    out << "name = " << noise.name << '\n';
    out << kT1Key << " = " << format_double(noise.t1_us) << '\n';
    out << kT2Key << " = " << format_double(noise.t2_us) << '\n';
    out << kCnotKey << " = " << format_double(noise.cnot_error) << '\n';
    out << kReadoutKey << " = " << format_double(noise.readout_error) << '\n';
    out << k1qKey << " = " << format_double(noise.single_qubit_gate_ns) << '\n';
    out << kCxKey << " = " << format_double(noise.cnot_gate_ns) << '\n';
    out << kMeasKey << " = " << format_double(noise.measurement_ns) << '\n';
    out << "enabled = " << (noise.enabled ? "true" : "false") << '\n';
}

NoiseParams resolve_backend(std::string_view name_or_path) {
    for (const auto &name : noise_preset_names()) {
        if (name == name_or_path) return noise_preset(name);
    }
    if (std::filesystem::exists(std::filesystem::path(name_or_path))) {
        return load_noise_config(std::string(name_or_path));
    }
    throw ParameterError("'" + std::string(name_or_path) + "' is neither a noise preset nor a readable config file");
}

}  // namespace qrw
