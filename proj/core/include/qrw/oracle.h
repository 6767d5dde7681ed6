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

#ifndef QRW_ORACLE_H
#define QRW_ORACLE_H

#include <span>
#include <vector>

#include "qrw/matrix_model.h"

namespace qrw::oracle {

struct ExactSolution {
    std::vector<double> x;
    /// ||(1 - gamma P) x - b||_2.
    double residual_norm = 0.0;
};

/// Dense LU solve of (1 - gamma P) x = b with partial pivoting.
/// Throws NumericalError if the residual exceeds 1e-10 ||b||.
ExactSolution exact_solve(const ProblemInstance &instance);

/// sum_{s=0}^{c} gamma^s P^s b by repeated matrix-vector products.
std::vector<double> neumann_truncated(const ProblemInstance &instance, int c);

inline constexpr int kMaxEnumerationDim = 8;
inline constexpr int kMaxEnumerationLength = 8;

/// Exact expectation of the walk estimator from `start`, by enumerating all
/// N^c paths. Throws ParameterError when N > 8 or c > 8.
double enumerate_walk_expectation(const ProblemInstance &instance, int start, int c);

/// ||estimate - exact||_2 / ||exact||_2. Throws MetricError on zero norm,
/// ParameterError on length mismatch.
double relative_error(std::span<const double> estimate, std::span<const double> exact);

}  // namespace qrw::oracle

#endif  // QRW_ORACLE_H
