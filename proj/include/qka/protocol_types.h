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

#ifndef QKA_PROTOCOL_TYPES_H
#define QKA_PROTOCOL_TYPES_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qka/quantum_core.h"
#include "qka/rng.h"

namespace qka {

enum class ProtocolKind : uint8_t {
    TwoParty,
    ThreeParty,
    FiveParty,
};

std::string_view protocol_name(ProtocolKind kind);

/// A party's private key, or a derived shared key.
class KeyBits {
   public:
    KeyBits() = default;
    /// Every entry must be 0 or 1.
    explicit KeyBits(std::vector<uint8_t> bits);

    static KeyBits zeros(size_t n);
    static KeyBits random(size_t n, Rng &rng);
    /// Parses a string of '0' and '1' characters.
    static KeyBits from_bit_string(std::string_view bits);

    size_t size() const {
        return bits_.size();
    }
    uint8_t operator[](size_t i) const {
        return bits_[i];
    }
    void set(size_t i, uint8_t bit);
    void flip(size_t i) {
        bits_[i] ^= 1;
    }

    /// Bits packed most-significant-first into nibbles; a trailing partial
    /// nibble is padded with zero bits on the right. 128 bits -> 32 hex digits.
    std::string hex() const;
    std::string bit_string() const;

    friend KeyBits operator^(const KeyBits &a, const KeyBits &b);
    friend bool operator==(const KeyBits &, const KeyBits &) = default;

   private:
    std::vector<uint8_t> bits_;
};

/// The sender's secret scrambling map for one transmission.
///
/// The unscrambled sequence lists the message qubits first (in message order)
/// followed by the decoy pairs; decoy pair k occupies unscrambled positions
/// (m + 2k, m + 2k + 1) where m is the message count.
struct PermutationRecord {
    std::vector<size_t> forward;  // unscrambled position -> slot
    std::vector<size_t> inverse;  // slot -> unscrambled position
    std::vector<size_t> message_slots;  // slot of message i, in message order
    std::vector<std::pair<size_t, size_t>> decoy_pairs;  // slots of each decoy Bell pair

    /// Checks forward/inverse consistency and that the message and decoy slots
    /// partition the sequence. Throws std::logic_error on violation.
    void check() const;
};

/// The scrambled qubit train as seen on the channel.
struct TravelSequence {
    std::vector<QubitId> slots;
};

/// Reads the two encoders' bits off a Bell outcome for a pair prepared in
/// |psi+>: the first encoder applies I or X, the second I or Z.
///   psi+ -> (0,0), psi- -> (0,1), phi+ -> (1,0), phi- -> (1,1).
std::pair<uint8_t, uint8_t> decode_bell_outcome(BellOutcome outcome);

using DecoyDisclosure = std::vector<std::pair<size_t, size_t>>;

}  // namespace qka

#endif
