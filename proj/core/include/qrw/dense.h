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

#ifndef QRW_DENSE_H
#define QRW_DENSE_H

#include <span>
#include <vector>

namespace qrw::dense {

/// Row-major square matrix of doubles. Only what the oracle and the
/// condition-number diagnostic need.
struct Matrix {
    int n = 0;
    std::vector<double> data;

    Matrix() = default;
    explicit Matrix(int n) : n(n), data(static_cast<size_t>(n) * n, 0.0) {}

    double &operator()(int i, int j) { return data[static_cast<size_t>(i) * n + j]; }
    double operator()(int i, int j) const { return data[static_cast<size_t>(i) * n + j]; }
};

/// LU factorization with partial (row) pivoting, stored in place.
class LuDecomposition {
   public:
    /// Throws NumericalError if a pivot is exactly zero.
    explicit LuDecomposition(Matrix a);

    std::vector<double> solve(std::span<const double> rhs) const;
    Matrix inverse() const;

   private:
    Matrix lu_;
    std::vector<int> perm_;
};

std::vector<double> multiply(const Matrix &a, std::span<const double> x);
double norm2(std::span<const double> v);
/// Max absolute column sum.
double norm1(const Matrix &a);
/// ||A||_1 * ||A^-1||_1.
double condition_number_1(const Matrix &a);

}  // namespace qrw::dense

#endif  // QRW_DENSE_H
