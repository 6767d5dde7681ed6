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

#ifndef QRW_CIRCUIT_SIM_H
#define QRW_CIRCUIT_SIM_H

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qrw/matrix_model.h"
#include "qrw/noise_params.h"
#include "qrw/rng.h"

namespace qrw {

using Complex = std::complex<double>;

/// 2x2 gate, row-major.
struct Gate1q {
    std::array<Complex, 4> m{};

    Complex operator()(int r, int c) const { return m[static_cast<size_t>(2 * r + c)]; }
};

/// U(theta, phi, lambda) =
///   [[cos(t/2),            -e^{i lambda} sin(t/2)],
///    [e^{i phi} sin(t/2),  e^{i(lambda+phi)} cos(t/2)]]
Gate1q coin_unitary(double theta, double phi, double lambda);
inline Gate1q coin_unitary(const AngleTriplet &a) { return coin_unitary(a.theta, a.phi, a.lambda); }

/// Dense state vector over `num_qubits` qubits; qubit q is bit q of the
/// basis index.
class StateVector {
   public:
    static constexpr int kMaxQubits = 16;

    /// |0...0>. Throws ParameterError outside [1, kMaxQubits].
    explicit StateVector(int num_qubits);

    int num_qubits() const { return num_qubits_; }
    size_t size() const { return amps_.size(); }
    std::span<const Complex> amplitudes() const { return amps_; }
    Complex amplitude(uint64_t basis) const { return amps_[basis]; }

    void apply(int q, const Gate1q &g);
    void apply_x(int q);
    void apply_y(int q);
    void apply_z(int q);
    void apply_cnot(int control, int target);
    /// Pauli by code 0=I, 1=X, 2=Y, 3=Z.
    void apply_pauli(int q, int code);

    double probability_one(int q) const;
    /// Projective measurement of one qubit using the uniform draw u in [0,1).
    /// Collapses and renormalizes; returns the outcome bit.
    int measure(int q, double u);

    /// Amplitude-damping jump |1> -> |0> on q, followed by renormalization.
    void decay(int q);
    /// Scale the |1> branch of q by `factor`, then renormalize.
    void damp(int q, double factor);

    double norm() const;
    void normalize();

   private:
    int num_qubits_;
    std::vector<Complex> amps_;
};

/// Jump probabilities of one thermal-relaxation window.
struct RelaxationChannel {
    /// 1 - exp(-t / T1).
    double p_amp = 0.0;
    /// 1 - exp(-t / T2phi), with 1/T2phi = 1/T2_eff - 1/(2 T1).
    double p_phi = 0.0;

    static RelaxationChannel for_duration(double duration_ns, const NoiseParams &noise);
    bool is_identity() const { return p_amp <= 0.0 && p_phi <= 0.0; }
};

/// Applies one of the 15 non-identity two-qubit Paulis, uniformly, with
/// probability p. Returns the applied Pauli as code_a + 4 * code_b
/// (0 when nothing was applied).
int apply_depolarizing_2q(StateVector &state, int qubit_a, int qubit_b, double p, Rng &rng);

/// Trajectory unraveling of amplitude damping composed with pure dephasing.
/// Dephasing is realized as a Z flip with probability p_phi / 2, which scales
/// the off-diagonal terms by exactly 1 - p_phi.
void apply_thermal_relaxation(StateVector &state, int qubit, const RelaxationChannel &channel, Rng &rng);
void apply_thermal_relaxation(StateVector &state, int qubit, double duration_ns, const NoiseParams &noise, Rng &rng);

/// Flips each bit independently with probability p.
std::vector<uint8_t> apply_readout_error(std::span<const uint8_t> bits, double p, Rng &rng);

struct StepOutcome {
    int next_node = 0;
    /// measured_bits[l] is bit l of next_node.
    std::vector<uint8_t> measured_bits;
};

/// How the 2n-qubit step circuit is held in memory. Every gate and noise
/// channel of the step acts inside one (coin l, node l) pair, so the full
/// register is always a product of n two-qubit states; kPerCoinPair exploits
/// that. Both layouts consume the random source identically.
enum class RegisterLayout { kPerCoinPair, kFullRegister };

/// One quantum-random-walk step: node qubits loaded with the current node,
/// coin qubits fresh in |0>, then per coin l: U_l on coin l, CNOT coin l ->
/// node l, and measurement of the node register. Noise (when enabled) is
/// inserted after every gate and during measurement.
class StepCircuit {
   public:
    StepCircuit(const CoinAngles &angles, const NoiseParams &noise,
                RegisterLayout layout = RegisterLayout::kPerCoinPair);

    int num_qubits() const { return n_; }
    int dim() const { return 1 << n_; }
    const NoiseParams &noise() const { return noise_; }

    /// Samples the next node. Throws ParameterError for out-of-range nodes.
    int sample(int current, Rng &rng) const;

   private:
    int sample_pairs(int current, Rng &rng) const;
    int sample_full(int current, Rng &rng) const;
    int run_pair(StateVector &state, int node_q, int coin_q, int l, bool loaded_bit, Rng &rng) const;

    int n_;
    std::vector<Gate1q> coins_;
    NoiseParams noise_;
    RegisterLayout layout_;
    RelaxationChannel relax_1q_;
    RelaxationChannel relax_cx_;
    RelaxationChannel relax_meas_;
};

StepOutcome step_sample(int current, const CoinAngles &angles, const NoiseParams &noise, Rng &rng,
                        RegisterLayout layout = RegisterLayout::kPerCoinPair);

}  // namespace qrw

#endif  // QRW_CIRCUIT_SIM_H
