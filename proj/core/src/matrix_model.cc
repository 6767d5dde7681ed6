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

#include "qrw/matrix_model.h"

#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <string>
#include <utility>

#include "qrw/dense.h"
#include "qrw/errors.h"
#include "qrw/rng.h"
#include "text_util.h"

namespace qrw {

namespace {

constexpr double kPi = std::numbers::pi;

bool angle_in_range(double a) {
    return std::isfinite(a) && a >= -kPi && a <= kPi;
}

CoinAngles draw_angles(int n, Rng &rng) {
    if (n < 1 || n > CoinAngles::kMaxQubits) {
        throw ParameterError("n must be in [1, 8], got " + std::to_string(n));
    }
    std::vector<AngleTriplet> triplets(static_cast<size_t>(n));
    for (auto &t : triplets) {
        t.theta = uniform(rng, -kPi, kPi);
        t.phi = uniform(rng, -kPi, kPi);
        t.lambda = uniform(rng, -kPi, kPi);
    }
    return CoinAngles(std::move(triplets));
}

std::vector<double> draw_rhs(int dim, Rng &rng) {
    std::vector<double> b(static_cast<size_t>(dim));
    for (auto &v : b) v = uniform(rng, -1.0, 1.0);
    return b;
}

}  // namespace

CoinAngles::CoinAngles(std::vector<AngleTriplet> triplets) : triplets_(std::move(triplets)) {
    if (triplets_.empty() || triplets_.size() > static_cast<size_t>(kMaxQubits)) {
        throw ParameterError("coin count must be in [1, 8], got " + std::to_string(triplets_.size()));
    }
    for (size_t l = 0; l < triplets_.size(); ++l) {
        const auto &t = triplets_[l];
        if (!angle_in_range(t.theta) || !angle_in_range(t.phi) || !angle_in_range(t.lambda)) {
            throw ParameterError("angles of coin " + std::to_string(l) + " outside [-pi, pi]");
        }
    }
}

int CoinAngles::zeroed_count() const {
    int count = 0;
    for (const auto &t : triplets_) count += t.theta == 0.0 ? 1 : 0;
    return count;
}

bool flip_is_structural_zero(const AngleTriplet &triplet) {
    return triplet.theta == 0.0;
}

bool stay_is_structural_zero(const AngleTriplet &triplet) {
    return std::abs(triplet.theta) == kPi;
}

CoinProbabilities coin_flip_probability(const AngleTriplet &triplet) {
    if (flip_is_structural_zero(triplet)) return {1.0, 0.0};
    if (stay_is_structural_zero(triplet)) return {0.0, 1.0};
    const double c = std::cos(triplet.theta / 2.0);
    const double s = std::sin(triplet.theta / 2.0);
    return {c * c, s * s};
}

int64_t TransitionMatrix::structural_zero_count() const {
    int64_t count = 0;
    for (uint8_t m : mask_) count += m;
    return count;
}

TransitionMatrix build_transition_matrix(const CoinAngles &angles) {
    const int n = angles.num_qubits();
    const int dim = angles.dim();

    uint32_t flip_zero = 0;
    uint32_t stay_zero = 0;
    std::vector<CoinProbabilities> coins(static_cast<size_t>(n));
    for (int l = 0; l < n; ++l) {
        coins[static_cast<size_t>(l)] = coin_flip_probability(angles[l]);
        if (flip_is_structural_zero(angles[l])) flip_zero |= 1u << l;
        if (stay_is_structural_zero(angles[l])) stay_zero |= 1u << l;
    }

    // One probability per XOR pattern; products always run l = 0..n-1 so that
    // (i, j) and (j, i) are bit-identical.
    std::vector<double> by_xor(static_cast<size_t>(dim));
    std::vector<uint8_t> zero_by_xor(static_cast<size_t>(dim));
    const uint32_t all = static_cast<uint32_t>(dim - 1);
    for (uint32_t d = 0; d < static_cast<uint32_t>(dim); ++d) {
        bool zero = (d & flip_zero) != 0 || (~d & all & stay_zero) != 0;
        double p = 1.0;
        for (int l = 0; l < n; ++l) {
            const auto &c = coins[static_cast<size_t>(l)];
            p *= ((d >> l) & 1u) ? c.p_flip : c.p_stay;
        }
        by_xor[d] = zero ? 0.0 : p;
        zero_by_xor[d] = zero ? 1 : 0;
    }

    TransitionMatrix m;
    m.dim_ = dim;
    m.entries_.resize(static_cast<size_t>(dim) * dim);
    m.mask_.resize(static_cast<size_t>(dim) * dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            const auto d = static_cast<size_t>(i ^ j);
            m.entries_[m.index(i, j)] = by_xor[d];
            m.mask_[m.index(i, j)] = zero_by_xor[d];
        }
    }
    return m;
}

CoinAngles apply_sparsity(const CoinAngles &angles, int k) {
    if (k < 0 || k > angles.num_qubits()) {
        throw ParameterError("sparsity increment k=" + std::to_string(k) + " outside [0, " +
                             std::to_string(angles.num_qubits()) + "]");
    }
    auto triplets = angles.triplets();
    for (int l = 0; l < k; ++l) triplets[static_cast<size_t>(l)].theta = 0.0;
    return CoinAngles(std::move(triplets));
}

double measure_sparsity(const TransitionMatrix &p) {
    const double total = static_cast<double>(p.dim()) * p.dim();
    return static_cast<double>(p.structural_zero_count()) / total;
}

CoinAngles random_coin_angles(int n, uint64_t seed) {
    Rng rng(seed);
    return draw_angles(n, rng);
}

std::vector<double> random_rhs(int dim, uint64_t seed) {
    Rng rng(seed);
    return draw_rhs(dim, rng);
}

ProblemInstance make_problem(CoinAngles angles, int k, double gamma, std::vector<double> b, uint64_t seed) {
    if (!(gamma > 0.0 && gamma < 1.0)) {
        throw ParameterError("gamma must lie in (0, 1), got " + text::format_double(gamma));
    }
    if (k < 0 || k > angles.num_qubits()) {
        throw ParameterError("sparsity increment k=" + std::to_string(k) + " outside [0, n]");
    }
    if (b.size() != static_cast<size_t>(angles.dim())) {
        throw ParameterError("b has length " + std::to_string(b.size()) + ", expected " +
                             std::to_string(angles.dim()));
    }
    for (double v : b) {
        if (!(v >= -1.0 && v <= 1.0)) throw ParameterError("b components must lie in [-1, 1]");
    }

    auto matrix = build_transition_matrix(angles);
    const int dim = matrix.dim();
    dense::Matrix a(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) a(i, j) = (i == j ? 1.0 : 0.0) - gamma * matrix(i, j);
    }

    ProblemInstance inst{std::move(angles), std::move(matrix), gamma, std::move(b), k, 0.0, seed, std::nullopt};
    inst.sparsity_level = measure_sparsity(inst.matrix);
    inst.condition_number = dense::condition_number_1(a);
    return inst;
}

ProblemInstance generate_problem(int n, int k, double gamma, uint64_t seed) {
    if (n < 1 || n > CoinAngles::kMaxQubits) {
        throw ParameterError("n must be in [1, 8], got " + std::to_string(n));
    }
    if (k < 0 || k > n) {
        throw ParameterError("sparsity increment k=" + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
    }
    if (!(gamma > 0.0 && gamma < 1.0)) {
        throw ParameterError("gamma must lie in (0, 1), got " + text::format_double(gamma));
    }
    Rng rng(seed);
    auto dense_angles = draw_angles(n, rng);
    auto b = draw_rhs(1 << n, rng);
    return make_problem(apply_sparsity(dense_angles, k), k, gamma, std::move(b), seed);
}

void write_problem(std::ostream &out, const ProblemInstance &instance) {
    using text::format_double;
    out << "instance\n";
    out << "n " << instance.num_qubits() << '\n';
    out << "k " << instance.k << '\n';
    out << "gamma " << format_double(instance.gamma) << '\n';
    out << "seed " << instance.seed << '\n';
    for (int l = 0; l < instance.num_qubits(); ++l) {
        const auto &t = instance.angles[l];
        out << "angle " << l << ' ' << format_double(t.theta) << ' ' << format_double(t.phi) << ' '
            << format_double(t.lambda) << '\n';
    }
    out << "b";
    for (double v : instance.b) out << ' ' << format_double(v);
    out << '\n';
    out << "sparsity_level " << format_double(instance.sparsity_level) << '\n';
    if (instance.condition_number) {
        out << "condition_number " << format_double(*instance.condition_number) << '\n';
    }
    out << "end\n";
}

namespace {

std::optional<ProblemInstance> read_one(std::istream &in) {
    std::string line;
    bool started = false;
    int n = -1;
    int k = -1;
    double gamma = -1.0;
    uint64_t seed = 0;
    std::vector<std::optional<AngleTriplet>> angles;
    std::vector<double> b;
    std::optional<double> sparsity;
    std::optional<double> cond;

    while (std::getline(in, line)) {
        auto view = text::trim(line);
        if (view.empty() || view.front() == '#') continue;
        auto fields = text::split_ws(view);
        const auto key = fields[0];
        if (!started) {
            if (key != "instance") throw FormatError("expected 'instance', got '" + std::string(key) + "'");
            started = true;
            continue;
        }
        auto need = [&](size_t count) {
            if (fields.size() != count) throw FormatError("malformed line: '" + std::string(view) + "'");
        };
        if (key == "end") {
            if (n < 1 || n > CoinAngles::kMaxQubits) throw FormatError("missing or invalid n");
            std::vector<AngleTriplet> triplets;
            for (const auto &a : angles) {
                if (!a) throw FormatError("missing angle triplet");
                triplets.push_back(*a);
            }
            if (static_cast<int>(triplets.size()) != n) throw FormatError("angle count does not match n");
            ProblemInstance inst = make_problem(CoinAngles(std::move(triplets)), k, gamma, std::move(b), seed);
            if (sparsity && *sparsity != inst.sparsity_level) {
                throw FormatError("recorded sparsity_level disagrees with the regenerated matrix");
            }
            if (cond) inst.condition_number = cond;
            return inst;
        } else if (key == "n") {
            need(2);
            n = text::parse_int<int>(fields[1]);
            if (n < 1 || n > CoinAngles::kMaxQubits) throw FormatError("n outside [1, 8]");
            angles.assign(static_cast<size_t>(n), std::nullopt);
        } else if (key == "k") {
            need(2);
            k = text::parse_int<int>(fields[1]);
        } else if (key == "gamma") {
            need(2);
            gamma = text::parse_double(fields[1]);
        } else if (key == "seed") {
            need(2);
            seed = text::parse_int<uint64_t>(fields[1]);
        } else if (key == "angle") {
            need(5);
            int l = text::parse_int<int>(fields[1]);
            if (l < 0 || l >= static_cast<int>(angles.size())) throw FormatError("angle index out of range");
            angles[static_cast<size_t>(l)] = AngleTriplet{text::parse_double(fields[2]), text::parse_double(fields[3]),
                                                          text::parse_double(fields[4])};
        } else if (key == "b") {
            b.clear();
            for (size_t i = 1; i < fields.size(); ++i) b.push_back(text::parse_double(fields[i]));
        } else if (key == "sparsity_level") {
            need(2);
            sparsity = text::parse_double(fields[1]);
        } else if (key == "condition_number") {
            need(2);
            cond = text::parse_double(fields[1]);
        } else {
            throw FormatError("unknown key '" + std::string(key) + "'");
        }
    }
    if (started) throw FormatError("unterminated instance record");
    return std::nullopt;
}

}  // namespace

ProblemInstance read_problem(std::istream &in) {
    auto inst = read_one(in);
    if (!inst) throw FormatError("no instance record found");
    return std::move(*inst);
}

std::vector<ProblemInstance> read_problems(std::istream &in) {
    std::vector<ProblemInstance> out;
    while (auto inst = read_one(in)) out.push_back(std::move(*inst));
    return out;
}

}  // namespace qrw
