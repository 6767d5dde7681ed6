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

#ifndef QRW_ERRORS_H
#define QRW_ERRORS_H

#include <stdexcept>
#include <string>

namespace qrw {

/// Invalid caller-supplied parameter (out-of-range n, k, gamma, node, ...).
class ParameterError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A numerical routine could not produce a result meeting its contract.
class NumericalError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Relative error requested against a zero-norm reference vector.
class MetricError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Malformed text input (instance records, noise configs, CSV, manifests).
class FormatError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace qrw

#endif  // QRW_ERRORS_H
