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

#include "qrw/dense.h"

#include <cmath>
#include <numeric>
#include <utility>

#include "qrw/errors.h"

namespace qrw::dense {

LuDecomposition::LuDecomposition(Matrix a) : lu_(std::move(a)), perm_(static_cast<size_t>(lu_.n)) {
    const int n = lu_.n;
    std::iota(perm_.begin(), perm_.end(), 0);
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::abs(lu_(col, col));
        for (int r = col + 1; r < n; ++r) {
            double v = std::abs(lu_(r, col));
            if (v > best) {
                best = v;
                pivot = r;
            }
        }
        if (best == 0.0) {
            throw NumericalError("singular matrix: zero pivot in column " + std::to_string(col));
        }
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(lu_(col, j), lu_(pivot, j));
            std::swap(perm_[static_cast<size_t>(col)], perm_[static_cast<size_t>(pivot)]);
        }
        const double inv = 1.0 / lu_(col, col);
        for (int r = col + 1; r < n; ++r) {
            double f = lu_(r, col) * inv;
            lu_(r, col) = f;
            if (f == 0.0) continue;
            for (int j = col + 1; j < n; ++j) lu_(r, j) -= f * lu_(col, j);
        }
    }
}

std::vector<double> LuDecomposition::solve(std::span<const double> rhs) const {
    const int n = lu_.n;
    std::vector<double> y(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double s = rhs[static_cast<size_t>(perm_[static_cast<size_t>(i)])];
        for (int j = 0; j < i; ++j) s -= lu_(i, j) * y[static_cast<size_t>(j)];
        y[static_cast<size_t>(i)] = s;
    }
    for (int i = n - 1; i >= 0; --i) {
        double s = y[static_cast<size_t>(i)];
        for (int j = i + 1; j < n; ++j) s -= lu_(i, j) * y[static_cast<size_t>(j)];
        y[static_cast<size_t>(i)] = s / lu_(i, i);
    }
    return y;
}

Matrix LuDecomposition::inverse() const {
    const int n = lu_.n;
    Matrix inv(n);
    std::vector<double> e(static_cast<size_t>(n), 0.0);
    for (int j = 0; j < n; ++j) {
        e[static_cast<size_t>(j)] = 1.0;
        auto col = solve(e);
        for (int i = 0; i < n; ++i) inv(i, j) = col[static_cast<size_t>(i)];
        e[static_cast<size_t>(j)] = 0.0;
    }
    return inv;
}

std::vector<double> multiply(const Matrix &a, std::span<const double> x) {
    std::vector<double> y(static_cast<size_t>(a.n), 0.0);
    for (int i = 0; i < a.n; ++i) {
        double s = 0.0;
        for (int j = 0; j < a.n; ++j) s += a(i, j) * x[static_cast<size_t>(j)];
        y[static_cast<size_t>(i)] = s;
    }
    return y;
}

double norm2(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

double norm1(const Matrix &a) {
    double best = 0.0;
    for (int j = 0; j < a.n; ++j) {
        double s = 0.0;
        for (int i = 0; i < a.n; ++i) s += std::abs(a(i, j));
        best = std::max(best, s);
    }
    return best;
}

double condition_number_1(const Matrix &a) {
    return norm1(a) * norm1(LuDecomposition(a).inverse());
}

}  // namespace qrw::dense
