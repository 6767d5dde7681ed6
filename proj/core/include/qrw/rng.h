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

#ifndef QRW_RNG_H
#define QRW_RNG_H

#include <cstdint>
#include <initializer_list>
#include <random>

namespace qrw {

/// Random source used everywhere. Always passed explicitly; nothing in the
/// library owns a global generator.
using Rng = std::mt19937_64;

/// SplitMix64 finalizer. Bijective on 64-bit words.
constexpr uint64_t mix64(uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Counter-based seed derivation: the result depends only on the master seed
/// and the ordered key list, never on call order or thread schedule.
constexpr uint64_t derive_seed(uint64_t master, std::initializer_list<uint64_t> keys) {
    uint64_t h = mix64(master);
    for (uint64_t k : keys) {
        h = mix64(h ^ mix64(k + 0x632BE59BD9B4E019ull));
    }
    return h;
}

/// Uniform double in [0, 1) from the top 53 bits. Portable across standard
/// libraries, unlike std::uniform_real_distribution.
inline double uniform01(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(Rng &rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

/// True with probability p. p <= 0 never fires, p >= 1 always fires.
inline bool bernoulli(Rng &rng, double p) {
    return uniform01(rng) < p;
}

}  // namespace qrw

#endif  // QRW_RNG_H
