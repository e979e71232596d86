// Copyright 2026 The QKA Simulator Authors
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

#ifndef QKA_RNG_H
#define QKA_RNG_H

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace qka {

/// Seeded generator passed explicitly through every stochastic operation.
///
/// Wraps mt19937_64 and implements its own bounded and real sampling so that
/// outcome sequences do not depend on the standard library's distribution
/// implementations.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed) {
    }

    uint64_t next_u64() {
        return engine_();
    }

    /// Uniform integer in [0, bound). bound must be positive.
    uint64_t uniform_below(uint64_t bound);

    /// Uniform double in [0, 1) with 53 bits of randomness.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    bool bit() {
        return (engine_() >> 63) != 0;
    }

    bool bernoulli(double p) {
        return uniform01() < p;
    }

    template <typename T>
    void shuffle(std::span<T> items) {
        for (size_t i = items.size(); i > 1; i--) {
            size_t j = static_cast<size_t>(uniform_below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

   private:
    std::mt19937_64 engine_;
};

inline uint64_t Rng::uniform_below(uint64_t bound) {
    // Rejection sampling over the largest multiple of bound.
    uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
    uint64_t r;
    do {
        r = engine_();
    } while (r >= limit);
    return r % bound;
}

}  // namespace qka

#endif
