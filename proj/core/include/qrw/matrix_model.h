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

#ifndef QRW_MATRIX_MODEL_H
#define QRW_MATRIX_MODEL_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace qrw {

/// Angles (theta, phi, lambda) of one coin, in radians.
struct AngleTriplet {
    double theta = 0.0;
    double phi = 0.0;
    double lambda = 0.0;

    bool operator==(const AngleTriplet &) const = default;
};

/// The n coin angle triplets that define both the walk circuit and the
/// Hamming-cube transition matrix. Triplet l drives bit l of the node index.
class CoinAngles {
   public:
    static constexpr int kMaxQubits = 8;

    /// Throws ParameterError unless 1 <= size <= kMaxQubits and every angle
    /// lies in [-pi, pi].
    explicit CoinAngles(std::vector<AngleTriplet> triplets);

    int num_qubits() const { return static_cast<int>(triplets_.size()); }
    int dim() const { return 1 << num_qubits(); }
    const std::vector<AngleTriplet> &triplets() const { return triplets_; }
    const AngleTriplet &operator[](int l) const { return triplets_[static_cast<size_t>(l)]; }

    /// Number of triplets whose theta is exactly 0.
    int zeroed_count() const;

    bool operator==(const CoinAngles &) const = default;

   private:
    std::vector<AngleTriplet> triplets_;
};

struct CoinProbabilities {
    double p_stay = 1.0;
    double p_flip = 0.0;
};

/// Per-bit stay/flip probabilities cos^2(theta/2), sin^2(theta/2).
/// theta == 0 gives exactly (1, 0) and theta == +-pi exactly (0, 1), so that
/// structural zeros are exact.
CoinProbabilities coin_flip_probability(const AngleTriplet &triplet);

/// True when the flip (resp. stay) factor of this coin is a structural zero.
bool flip_is_structural_zero(const AngleTriplet &triplet);
bool stay_is_structural_zero(const AngleTriplet &triplet);

/// N x N row-stochastic Hamming-cube transition matrix with a symbolic
/// structural-zero mask. Entry (i, j) depends only on i ^ j.
class TransitionMatrix {
   public:
    int dim() const { return dim_; }
    double operator()(int i, int j) const { return entries_[index(i, j)]; }
    bool is_structural_zero(int i, int j) const { return mask_[index(i, j)] != 0; }
    std::span<const double> row(int i) const {
        return {entries_.data() + static_cast<size_t>(i) * dim_, static_cast<size_t>(dim_)};
    }
    const std::vector<double> &entries() const { return entries_; }
    int64_t structural_zero_count() const;

    bool operator==(const TransitionMatrix &) const = default;

    friend TransitionMatrix build_transition_matrix(const CoinAngles &angles);

   private:
    size_t index(int i, int j) const { return static_cast<size_t>(i) * dim_ + j; }

    int dim_ = 0;
    std::vector<double> entries_;
    std::vector<uint8_t> mask_;
};

/// entries[i][j] = prod_l (bit l of i^j ? p_flip(theta_l) : p_stay(theta_l)).
TransitionMatrix build_transition_matrix(const CoinAngles &angles);

/// Copy of `angles` with theta of the first k triplets set to exactly zero.
/// Throws ParameterError if k < 0 or k > n.
CoinAngles apply_sparsity(const CoinAngles &angles, int k);

/// Structural zeros divided by N^2.
double measure_sparsity(const TransitionMatrix &p);

/// Independent thetas drawn uniformly from [-pi, pi], in triplet order
/// (theta, phi, lambda) for l = 0..n-1.
CoinAngles random_coin_angles(int n, uint64_t seed);
/// Length-N vector with components uniform in [-1, 1].
std::vector<double> random_rhs(int dim, uint64_t seed);

/// A = 1 - gamma P, right-hand side b, and the bookkeeping needed to
/// regenerate it.
struct ProblemInstance {
    CoinAngles angles;
    TransitionMatrix matrix;
    double gamma = 0.5;
    std::vector<double> b;
    int k = 0;
    double sparsity_level = 0.0;
    uint64_t seed = 0;
    std::optional<double> condition_number;

    int num_qubits() const { return angles.num_qubits(); }
    int dim() const { return matrix.dim(); }
};

/// Assembles an instance from already-sparsified angles. Validates gamma and
/// b, builds P, records the 1-norm condition number of A.
ProblemInstance make_problem(CoinAngles angles, int k, double gamma, std::vector<double> b, uint64_t seed);

/// Draws angles then b from one generator seeded with `seed`, zeroes k thetas.
/// Throws ParameterError for n outside [1, 8], k outside [0, n], or gamma
/// outside (0, 1).
ProblemInstance generate_problem(int n, int k, double gamma, uint64_t seed);

/// Plain-text instance record with shortest round-trip decimal encoding.
void write_problem(std::ostream &out, const ProblemInstance &instance);
/// Parses one record and regenerates P from the stored angles.
/// Throws FormatError on malformed input.
ProblemInstance read_problem(std::istream &in);
/// Reads every record in the stream.
std::vector<ProblemInstance> read_problems(std::istream &in);

}  // namespace qrw

#endif  // QRW_MATRIX_MODEL_H
