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
#include <string>

#include "qrw/dense.h"
#include "qrw/errors.h"

namespace qrw::oracle {

namespace {

dense::Matrix system_matrix(const ProblemInstance &instance) {
    const int n = instance.dim();
    dense::Matrix a(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a(i, j) = (i == j ? 1.0 : 0.0) - instance.gamma * instance.matrix(i, j);
    }
    return a;
}

std::vector<double> residual(const dense::Matrix &a, std::span<const double> x, std::span<const double> b) {
    auto r = dense::multiply(a, x);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

}  // namespace

ExactSolution exact_solve(const ProblemInstance &instance) {
    const auto a = system_matrix(instance);
    const dense::LuDecomposition lu(a);
    ExactSolution sol;
    sol.x = lu.solve(instance.b);

    // One step of iterative refinement.
    auto r = residual(a, sol.x, instance.b);
    auto dx = lu.solve(r);
    for (size_t i = 0; i < sol.x.size(); ++i) sol.x[i] -= dx[i];

    sol.residual_norm = dense::norm2(residual(a, sol.x, instance.b));
    const double bound = 1e-10 * dense::norm2(instance.b);
    if (sol.residual_norm > bound) {
        throw NumericalError("exact solve residual " + std::to_string(sol.residual_norm) + " exceeds 1e-10 ||b||");
    }
    return sol;
}

std::vector<double> neumann_truncated(const ProblemInstance &instance, int c) {
    if (c < 0) throw ParameterError("truncation length must be non-negative");
    const int n = instance.dim();
    const auto &p = instance.matrix;
    std::vector<double> term = instance.b;
    std::vector<double> sum = instance.b;
    std::vector<double> next(static_cast<size_t>(n));
    for (int s = 1; s <= c; ++s) {
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int j = 0; j < n; ++j) acc += p(i, j) * term[static_cast<size_t>(j)];
            next[static_cast<size_t>(i)] = instance.gamma * acc;
        }
        term.swap(next);
        for (int i = 0; i < n; ++i) sum[static_cast<size_t>(i)] += term[static_cast<size_t>(i)];
    }
    return sum;
}

namespace {

// Sum over all continuations of length `remaining` from `node`, weighted by
// path probability, of the discounted b values they visit.
double expand(const ProblemInstance &inst, int node, int depth, int remaining, double path_prob) {
    if (remaining == 0 || path_prob == 0.0) return 0.0;
    const int n = inst.dim();
    double acc = 0.0;
    const double discount = std::pow(inst.gamma, depth + 1);
    for (int next = 0; next < n; ++next) {
        const double q = path_prob * inst.matrix(node, next);
        if (q == 0.0) continue;
        acc += q * discount * inst.b[static_cast<size_t>(next)];
        acc += expand(inst, next, depth + 1, remaining - 1, q);
    }
    return acc;
}

}  // namespace

double enumerate_walk_expectation(const ProblemInstance &instance, int start, int c) {
    if (instance.dim() > kMaxEnumerationDim || c > kMaxEnumerationLength) {
        throw ParameterError("path enumeration limited to N <= 8 and c <= 8");
    }
    if (c < 0) throw ParameterError("truncation length must be non-negative");
    if (start < 0 || start >= instance.dim()) throw ParameterError("start node out of range");
    return instance.b[static_cast<size_t>(start)] + expand(instance, start, 0, c, 1.0);
}

double relative_error(std::span<const double> estimate, std::span<const double> exact) {
    if (estimate.size() != exact.size()) throw ParameterError("relative_error: length mismatch");
    const double denom = dense::norm2(exact);
    if (denom == 0.0) throw MetricError("relative_error: reference vector has zero norm");
    double s = 0.0;
    for (size_t i = 0; i < exact.size(); ++i) {
        const double d = estimate[i] - exact[i];
        s += d * d;
    }
    return std::sqrt(s) / denom;
}

}  // namespace qrw::oracle
