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

#include <sstream>

#include "gtest/gtest.h"
#include "qrw/errors.h"

using namespace qrw;

TEST(NoisePresets, CarryBackendAverages) {
    const auto b = noise_preset("fake-boeblingen");
    EXPECT_EQ(b.t1_us, 72.775);
    EXPECT_EQ(b.t2_us, 153.457);
    EXPECT_EQ(b.cnot_error, 0.03211);
    EXPECT_EQ(b.readout_error, 0.05258);
    EXPECT_TRUE(b.enabled);

    const auto c = noise_preset("fake-casablanca");
    EXPECT_EQ(c.t1_us, 89.968);
    EXPECT_EQ(c.t2_us, 85.496);
    EXPECT_EQ(c.cnot_error, 0.01274);
    EXPECT_EQ(c.readout_error, 0.01898);

    EXPECT_FALSE(noise_preset("noiseless").enabled);
    EXPECT_THROW(noise_preset("fake-nowhere"), ParameterError);
}

TEST(NoiseConfig, ParsesTableHeaders) {
    std::istringstream in(
        "# custom backend\n"
        "name = lab-a\n"
        "Avg. T1 (μs) = 50.5\n"
        "Avg. T2 (us) = 40\n"
        "Avg. CNOT Error = 0.02\n"
        "Avg. Readout Error = 0.03\n"
        "CNOT gate (ns) = 420\n");
    const auto p = parse_noise_config(in);
    EXPECT_EQ(p.name, "lab-a");
    EXPECT_EQ(p.t1_us, 50.5);
    EXPECT_EQ(p.t2_us, 40.0);
    EXPECT_EQ(p.cnot_error, 0.02);
    EXPECT_EQ(p.readout_error, 0.03);
    EXPECT_EQ(p.cnot_gate_ns, 420.0);
    EXPECT_EQ(p.single_qubit_gate_ns, 50.0);
    EXPECT_EQ(p.measurement_ns, 1000.0);
    EXPECT_TRUE(p.enabled);
}

TEST(NoiseConfig, WriteThenParseIsIdentity) {
    for (const auto &name : noise_preset_names()) {
        const auto p = noise_preset(name);
        std::stringstream ss;
        write_noise_config(ss, p);
        EXPECT_EQ(parse_noise_config(ss), p) << name;
    }
}

TEST(NoiseConfig, RejectsBadInput) {
    std::istringstream unknown("Avg. T3 (us) = 1\n");
    EXPECT_THROW(parse_noise_config(unknown), FormatError);
    std::istringstream prob("Avg. Readout Error = 1.5\n");
    EXPECT_THROW(parse_noise_config(prob), FormatError);
    std::istringstream time("Avg. T1 (us) = -3\n");
    EXPECT_THROW(parse_noise_config(time), FormatError);
    std::istringstream syntax("Avg. T1 (us) 3\n");
    EXPECT_THROW(parse_noise_config(syntax), FormatError);
    EXPECT_THROW(resolve_backend("/definitely/not/here.cfg"), ParameterError);
}
