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

#include "qrw/oracle.h"

#include <cmath>

#include "gtest/gtest.h"
#include "qrw/errors.h"

using namespace qrw;

namespace {

ProblemInstance identity_instance(int n, double gamma, uint64_t seed) {
    return generate_problem(n, n, gamma, seed);
}

}  // namespace

TEST(ExactSolve, IdentityIsScalar) {
    const auto inst = identity_instance(3, 0.5, 4);
    const auto sol = oracle::exact_solve(inst);
    for (int i = 0; i < 8; ++i) EXPECT_NEAR(sol.x[static_cast<size_t>(i)], inst.b[static_cast<size_t>(i)] / 0.5, 1e-15);
}

TEST(ExactSolve, TinyGammaIsIdentity) {
    const auto inst = generate_problem(3, 0, 1e-12, 9);
    const auto sol = oracle::exact_solve(inst);
    EXPECT_LT(oracle::relative_error(sol.x, inst.b), 1e-10);
}

TEST(ExactSolve, ResidualBound) {
    for (uint64_t seed = 0; seed < 100; ++seed) {
        const int n = 1 + static_cast<int>(seed % 8);
        const auto inst = generate_problem(n, static_cast<int>(seed % static_cast<uint64_t>(n + 1)), 0.9, seed);
        const auto sol = oracle::exact_solve(inst);
        double bnorm = 0.0;
        for (double v : inst.b) bnorm += v * v;
        EXPECT_LE(sol.residual_norm, 1e-10 * std::sqrt(bnorm));
    }
}

TEST(NeumannTruncated, ZeroTermsIsRhs) {
    const auto inst = generate_problem(2, 0, 0.5, 1);
    EXPECT_EQ(oracle::neumann_truncated(inst, 0), inst.b);
    EXPECT_THROW(oracle::neumann_truncated(inst, -1), ParameterError);
}

TEST(NeumannTruncated, IdentityIsGeometric) {
    const auto inst = identity_instance(2, 0.5, 3);
    for (int c : {1, 3, 7}) {
        const auto x = oracle::neumann_truncated(inst, c);
        const double factor = (1 - std::pow(0.5, c + 1)) / (1 - 0.5);
        for (int i = 0; i < 4; ++i) EXPECT_NEAR(x[static_cast<size_t>(i)], inst.b[static_cast<size_t>(i)] * factor, 1e-15);
    }
}

TEST(NeumannTruncated, ConvergesToExactSolve) {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        const auto inst = generate_problem(4, static_cast<int>(seed % 5), 0.5, seed);
        const auto x = oracle::neumann_truncated(inst, 200);
        EXPECT_LT(oracle::relative_error(x, oracle::exact_solve(inst).x), 1e-10);
    }
}

TEST(NeumannTruncated, ErrorDecreasesWithLength) {
    const auto inst = generate_problem(3, 1, 0.8, 17);
    const auto exact = oracle::exact_solve(inst).x;
    double prev = oracle::relative_error(oracle::neumann_truncated(inst, 0), exact);
    for (int c = 1; c <= 30; ++c) {
        const double e = oracle::relative_error(oracle::neumann_truncated(inst, c), exact);
        EXPECT_LE(e, prev);
        prev = e;
    }
}

TEST(EnumerateWalkExpectation, BaseCases) {
    const auto inst = generate_problem(2, 0, 0.5, 2);
    EXPECT_EQ(oracle::enumerate_walk_expectation(inst, 1, 0), inst.b[1]);
    const auto id = identity_instance(2, 0.5, 2);
    EXPECT_NEAR(oracle::enumerate_walk_expectation(id, 3, 3), id.b[3] * 1.875, 1e-15);
}

TEST(EnumerateWalkExpectation, AgreesWithNeumann) {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        const int n = 2 + static_cast<int>(seed % 2);
        const auto inst = generate_problem(n, static_cast<int>(seed % 3), 0.6, seed);
        const int c = static_cast<int>(seed % 7);
        const auto x = oracle::neumann_truncated(inst, c);
        for (int i = 0; i < inst.dim(); ++i) {
            EXPECT_NEAR(oracle::enumerate_walk_expectation(inst, i, c), x[static_cast<size_t>(i)], 1e-10);
        }
    }
}

TEST(EnumerateWalkExpectation, GuardsSize) {
    const auto big = generate_problem(4, 0, 0.5, 1);
    EXPECT_THROW(oracle::enumerate_walk_expectation(big, 0, 2), ParameterError);
    const auto small = generate_problem(2, 0, 0.5, 1);
    EXPECT_THROW(oracle::enumerate_walk_expectation(small, 0, 9), ParameterError);
}

TEST(RelativeError, Examples) {
    const std::vector<double> x{3.0, -4.0};
    EXPECT_EQ(oracle::relative_error(x, x), 0.0);
    EXPECT_EQ(oracle::relative_error(std::vector<double>{6.0, -8.0}, x), 1.0);
    EXPECT_EQ(oracle::relative_error(std::vector<double>{8.0, -4.0}, x), 1.0);
    EXPECT_THROW(oracle::relative_error(x, std::vector<double>{0.0, 0.0}), MetricError);
    EXPECT_THROW(oracle::relative_error(x, std::vector<double>{1.0}), ParameterError);
}
