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

#include "qrw/circuit_sim.h"

#include <cmath>
#include <string>

#include "qrw/errors.h"

namespace qrw {

Gate1q coin_unitary(double theta, double phi, double lambda) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const Complex e_phi = std::polar(1.0, phi);
    const Complex e_lambda = std::polar(1.0, lambda);
    const Complex e_both = std::polar(1.0, lambda + phi);
    return Gate1q{{Complex(c, 0.0), -e_lambda * s, e_phi * s, e_both * c}};
}

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw ParameterError("state vector qubit count must be in [1, 16], got " + std::to_string(num_qubits));
    }
    amps_.assign(size_t{1} << num_qubits, Complex(0.0, 0.0));
    amps_[0] = 1.0;
}

void StateVector::apply(int q, const Gate1q &g) {
    const size_t bit = size_t{1} << q;
    const Complex g00 = g.m[0], g01 = g.m[1], g10 = g.m[2], g11 = g.m[3];
    for (size_t i = 0; i < amps_.size(); ++i) {
        if (i & bit) continue;
        const Complex a0 = amps_[i];
        const Complex a1 = amps_[i | bit];
        amps_[i] = g00 * a0 + g01 * a1;
        amps_[i | bit] = g10 * a0 + g11 * a1;
    }
}

void StateVector::apply_x(int q) {
    const size_t bit = size_t{1} << q;
    for (size_t i = 0; i < amps_.size(); ++i) {
        if (!(i & bit)) std::swap(amps_[i], amps_[i | bit]);
    }
}

void StateVector::apply_y(int q) {
    // Y = [[0, -i], [i, 0]]
    const size_t bit = size_t{1} << q;
    const Complex I(0.0, 1.0);
    for (size_t i = 0; i < amps_.size(); ++i) {
        if (i & bit) continue;
        const Complex a0 = amps_[i];
        const Complex a1 = amps_[i | bit];
        amps_[i] = -I * a1;
        amps_[i | bit] = I * a0;
    }
}

void StateVector::apply_z(int q) {
    const size_t bit = size_t{1} << q;
    for (size_t i = 0; i < amps_.size(); ++i) {
        if (i & bit) amps_[i] = -amps_[i];
    }
}

void StateVector::apply_cnot(int control, int target) {
    const size_t cbit = size_t{1} << control;
    const size_t tbit = size_t{1} << target;
    for (size_t i = 0; i < amps_.size(); ++i) {
        if ((i & cbit) && !(i & tbit)) std::swap(amps_[i], amps_[i | tbit]);
    }
}

void StateVector::apply_pauli(int q, int code) {
    switch (code) {
        case 0: break;
        case 1: apply_x(q); break;
        case 2: apply_y(q); break;
        case 3: apply_z(q); break;
        default: throw ParameterError("Pauli code must be in [0, 3]");
    }
}

double StateVector::probability_one(int q) const {
    const size_t bit = size_t{1} << q;
    double p = 0.0;
    for (size_t i = 0; i < amps_.size(); ++i) {
        if (i & bit) p += std::norm(amps_[i]);
    }
    return p;
}

int StateVector::measure(int q, double u) {
    const size_t bit = size_t{1} << q;
    const double p1 = probability_one(q);
    const int outcome = u < p1 ? 1 : 0;
    const double keep = outcome ? p1 : 1.0 - p1;
    const double scale = 1.0 / std::sqrt(keep);
    for (size_t i = 0; i < amps_.size(); ++i) {
        const bool one = (i & bit) != 0;
        amps_[i] = (one == (outcome == 1)) ? amps_[i] * scale : Complex(0.0, 0.0);
    }
    return outcome;
}

void StateVector::decay(int q) {
    const size_t bit = size_t{1} << q;
    for (size_t i = 0; i < amps_.size(); ++i) {
        if (i & bit) continue;
        amps_[i] = amps_[i | bit];
        amps_[i | bit] = 0.0;
    }
    normalize();
}

void StateVector::damp(int q, double factor) {
    const size_t bit = size_t{1} << q;
    for (size_t i = 0; i < amps_.size(); ++i) {
        if (i & bit) amps_[i] *= factor;
    }
    normalize();
}

double StateVector::norm() const {
    double s = 0.0;
    for (const auto &a : amps_) s += std::norm(a);
    return std::sqrt(s);
}

void StateVector::normalize() {
    const double n = norm();
    if (n == 0.0) throw NumericalError("cannot normalize a zero state vector");
    const double inv = 1.0 / n;
    for (auto &a : amps_) a *= inv;
}

RelaxationChannel RelaxationChannel::for_duration(double duration_ns, const NoiseParams &noise) {
    if (!noise.enabled || !(duration_ns > 0.0)) return {};
    const double t_us = duration_ns * 1e-3;
    const double t1 = noise.t1_us;
    const double t2 = noise.t2_effective_us();
    const double dephasing_rate = std::max(0.0, 1.0 / t2 - 1.0 / (2.0 * t1));
    return {-std::expm1(-t_us / t1), -std::expm1(-t_us * dephasing_rate)};
}

int apply_depolarizing_2q(StateVector &state, int qubit_a, int qubit_b, double p, Rng &rng) {
    if (!(p > 0.0)) return 0;
    if (!bernoulli(rng, p)) return 0;
    const int code = 1 + static_cast<int>(uniform01(rng) * 15.0);
    state.apply_pauli(qubit_a, code & 3);
    state.apply_pauli(qubit_b, code >> 2);
    return code;
}

void apply_thermal_relaxation(StateVector &state, int qubit, const RelaxationChannel &channel, Rng &rng) {
    if (channel.p_amp > 0.0) {
        const double p_jump = channel.p_amp * state.probability_one(qubit);
        if (uniform01(rng) < p_jump) {
            state.decay(qubit);
        } else {
            state.damp(qubit, std::sqrt(1.0 - channel.p_amp));
        }
    }
    if (channel.p_phi > 0.0 && bernoulli(rng, 0.5 * channel.p_phi)) {
        state.apply_z(qubit);
    }
}

void apply_thermal_relaxation(StateVector &state, int qubit, double duration_ns, const NoiseParams &noise,
                              Rng &rng) {
    if (!(duration_ns > 0.0)) throw ParameterError("relaxation duration must be positive");
    apply_thermal_relaxation(state, qubit, RelaxationChannel::for_duration(duration_ns, noise), rng);
}

std::vector<uint8_t> apply_readout_error(std::span<const uint8_t> bits, double p, Rng &rng) {
    if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("readout error must lie in [0, 1]");
    std::vector<uint8_t> out(bits.begin(), bits.end());
    for (auto &b : out) {
        if (bernoulli(rng, p)) b ^= 1;
    }
    return out;
}

StepCircuit::StepCircuit(const CoinAngles &angles, const NoiseParams &noise, RegisterLayout layout)
    : n_(angles.num_qubits()), noise_(noise), layout_(layout) {
    if (noise_.enabled) noise_.validate();
    coins_.reserve(static_cast<size_t>(n_));
    for (int l = 0; l < n_; ++l) coins_.push_back(coin_unitary(angles[l]));
    relax_1q_ = RelaxationChannel::for_duration(noise_.single_qubit_gate_ns, noise_);
    relax_cx_ = RelaxationChannel::for_duration(noise_.cnot_gate_ns, noise_);
    relax_meas_ = RelaxationChannel::for_duration(noise_.measurement_ns, noise_);
}

int StepCircuit::run_pair(StateVector &state, int node_q, int coin_q, int l, bool loaded_bit, Rng &rng) const {
    const bool noisy = noise_.enabled;
    // Classical load of the current node bit.
    if (loaded_bit) {
        state.apply_x(node_q);
        if (noisy) apply_thermal_relaxation(state, node_q, relax_1q_, rng);
    }
    state.apply(coin_q, coins_[static_cast<size_t>(l)]);
    if (noisy) apply_thermal_relaxation(state, coin_q, relax_1q_, rng);

    state.apply_cnot(coin_q, node_q);
    if (noisy) {
        apply_depolarizing_2q(state, coin_q, node_q, noise_.cnot_error, rng);
        apply_thermal_relaxation(state, coin_q, relax_cx_, rng);
        apply_thermal_relaxation(state, node_q, relax_cx_, rng);
        apply_thermal_relaxation(state, coin_q, relax_meas_, rng);
        apply_thermal_relaxation(state, node_q, relax_meas_, rng);
    }
    int bit = state.measure(node_q, uniform01(rng));
    if (noisy && bernoulli(rng, noise_.readout_error)) bit ^= 1;
    return bit;
}

int StepCircuit::sample_pairs(int current, Rng &rng) const {
    StateVector pair(2);
    int next = 0;
    for (int l = 0; l < n_; ++l) {
        if (l > 0) pair = StateVector(2);
        const bool loaded = ((current >> l) & 1) != 0;
        next |= run_pair(pair, 0, 1, l, loaded, rng) << l;
    }
    return next;
}

int StepCircuit::sample_full(int current, Rng &rng) const {
    StateVector reg(2 * n_);
    int next = 0;
    for (int l = 0; l < n_; ++l) {
        const bool loaded = ((current >> l) & 1) != 0;
        next |= run_pair(reg, l, n_ + l, l, loaded, rng) << l;
    }
    return next;
}

int StepCircuit::sample(int current, Rng &rng) const {
    if (current < 0 || current >= dim()) {
        throw ParameterError("node " + std::to_string(current) + " outside [0, " + std::to_string(dim()) + ")");
    }
    return layout_ == RegisterLayout::kPerCoinPair ? sample_pairs(current, rng) : sample_full(current, rng);
}

StepOutcome step_sample(int current, const CoinAngles &angles, const NoiseParams &noise, Rng &rng,
                        RegisterLayout layout) {
    StepCircuit circuit(angles, noise, layout);
    StepOutcome out;
    out.next_node = circuit.sample(current, rng);
    out.measured_bits.resize(static_cast<size_t>(angles.num_qubits()));
    for (int l = 0; l < angles.num_qubits(); ++l) {
        out.measured_bits[static_cast<size_t>(l)] = static_cast<uint8_t>((out.next_node >> l) & 1);
    }
    return out;
}

}  // namespace qrw
