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

#include "qka/protocol_types.h"

#include <stdexcept>

namespace qka {

std::string_view protocol_name(ProtocolKind kind) {
    switch (kind) {
        case ProtocolKind::TwoParty:
            return "two-party";
        case ProtocolKind::ThreeParty:
            return "three-party";
        case ProtocolKind::FiveParty:
            return "five-party";
    }
    throw std::invalid_argument("bad ProtocolKind");
}

std::pair<uint8_t, uint8_t> decode_bell_outcome(BellOutcome outcome) {
    switch (outcome) {
        case BellOutcome::PsiPlus:
            return {0, 0};
        case BellOutcome::PsiMinus:
            return {0, 1};
        case BellOutcome::PhiPlus:
            return {1, 0};
        case BellOutcome::PhiMinus:
            return {1, 1};
    }
    throw std::invalid_argument("bad BellOutcome");
}

KeyBits::KeyBits(std::vector<uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_) {
        if (b > 1) {
            throw std::invalid_argument("key bits must be 0 or 1");
        }
    }
}

KeyBits KeyBits::zeros(size_t n) {
    return KeyBits(std::vector<uint8_t>(n, 0));
}

KeyBits KeyBits::random(size_t n, Rng &rng) {
    std::vector<uint8_t> bits(n);
    for (auto &b : bits) {
        b = rng.bit() ? 1 : 0;
    }
    return KeyBits(std::move(bits));
}

KeyBits KeyBits::from_bit_string(std::string_view text) {
    std::vector<uint8_t> bits;
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("key bit strings may only contain '0' and '1'");
        }
        bits.push_back(c == '1');
    }
    return KeyBits(std::move(bits));
}

void KeyBits::set(size_t i, uint8_t bit) {
    if (bit > 1) {
        throw std::invalid_argument("key bits must be 0 or 1");
    }
    bits_.at(i) = bit;
}

std::string KeyBits::hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    for (size_t i = 0; i < bits_.size(); i += 4) {
        int nibble = 0;
        for (size_t k = 0; k < 4; k++) {
            nibble <<= 1;
            if (i + k < bits_.size()) {
                nibble |= bits_[i + k];
            }
        }
        out += kDigits[nibble];
    }
    return out;
}

std::string KeyBits::bit_string() const {
    std::string out;
    for (auto b : bits_) {
        out += b ? '1' : '0';
    }
    return out;
}

KeyBits operator^(const KeyBits &a, const KeyBits &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("cannot xor keys of different lengths");
    }
    std::vector<uint8_t> out(a.size());
    for (size_t i = 0; i < a.size(); i++) {
        out[i] = a[i] ^ b[i];
    }
    return KeyBits(std::move(out));
}

void PermutationRecord::check() const {
    const size_t len = forward.size();
    if (inverse.size() != len) {
        throw std::logic_error("permutation forward/inverse length mismatch");
    }
    for (size_t i = 0; i < len; i++) {
        if (forward[i] >= len || inverse[forward[i]] != i) {
            throw std::logic_error("permutation inverse is inconsistent");
        }
    }
    std::vector<int> owner(len, 0);
    for (size_t s : message_slots) {
        if (s >= len || owner[s]++) {
            throw std::logic_error("message slots overlap");
        }
    }
    for (auto [a, b] : decoy_pairs) {
        if (a >= len || b >= len || owner[a]++ || owner[b]++) {
            throw std::logic_error("decoy slots overlap");
        }
    }
    for (int o : owner) {
        if (o != 1) {
            throw std::logic_error("message and decoy slots do not cover the sequence");
        }
    }
    const size_t m = message_slots.size();
    for (size_t i = 0; i < m; i++) {
        if (message_slots[i] != forward[i]) {
            throw std::logic_error("message slots disagree with the permutation");
        }
    }
    for (size_t k = 0; k < decoy_pairs.size(); k++) {
        if (decoy_pairs[k] != std::pair{forward[m + 2 * k], forward[m + 2 * k + 1]}) {
            throw std::logic_error("decoy pairs disagree with the permutation");
        }
    }
}

}  // namespace qka
