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

#ifndef QKA_ADVERSARY_H
#define QKA_ADVERSARY_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "qka/protocol_types.h"
#include "qka/quantum_core.h"

namespace qka {

enum class AdversaryKind : uint8_t {
    None,
    // External eavesdroppers acting on qubits in transit.
    InterceptResendZ,
    InterceptResendBell,
    // Insiders deviating from the two-party choreography.
    DishonestAliceEarlyMeasure,
    DishonestBobReorder,
};

std::string_view adversary_name(AdversaryKind kind);

/// Which transmissions an external eavesdropper touches. FirstHop means the
/// first transmission of every chain (for two-party, Alice -> Bob only).
enum class AttackScope : uint8_t {
    FirstHop,
    AllHops,
};

struct AdversaryModel {
    AdversaryKind kind = AdversaryKind::None;
    // External kinds: per-slot (Z) or per-adjacent-pair (Bell) attack probability.
    double attack_fraction = 1.0;
    AttackScope scope = AttackScope::FirstHop;
    // DishonestBobReorder: number of message positions Bob permutes (even).
    size_t swap_count = 2;

    bool is_external() const {
        return kind == AdversaryKind::InterceptResendZ || kind == AdversaryKind::InterceptResendBell;
    }
    bool is_insider() const {
        return kind == AdversaryKind::DishonestAliceEarlyMeasure || kind == AdversaryKind::DishonestBobReorder;
    }
    /// Throws std::invalid_argument for a fraction outside [0, 1] or a swap
    /// count that is odd or exceeds the key length.
    void validate(size_t key_bits) const;
};

/// Applies an external attack to a sequence in transit, replacing intercepted
/// qubits with fresh ones. Returns the number of slots touched.
///
/// InterceptResendZ: each slot is attacked with probability attack_fraction,
/// Z-measured, and replaced by a computational-basis qubit with the observed
/// value.
/// InterceptResendBell: slots (0,1), (2,3), ... are attacked as pairs with
/// probability attack_fraction, Bell-measured, and replaced by a fresh pair
/// in the observed Bell state. Eve does not know the permutation, so these
/// pairings are generally wrong.
///
/// Throws std::invalid_argument if the model is an insider kind.
size_t attack_transit(const AdversaryModel &model, QubitStore &store, TravelSequence &seq, Rng &rng);

/// Picks swap_count distinct message positions and groups them into
/// consecutive transposition pairs.
std::vector<std::pair<size_t, size_t>> choose_swap_pairs(size_t message_count, size_t swap_count, Rng &rng);

/// The message order Bob announces after transposing each listed pair of
/// positions. Throws std::invalid_argument for out-of-range, repeated, or
/// self-paired positions.
std::vector<size_t> dishonest_bob_reorder(
    std::span<const size_t> true_order, std::span<const std::pair<size_t, size_t>> swap_pairs);

struct EarlyMeasureReport {
    KeyBits guessed_bits;
    // Fraction of guessed bits equal to Bob's key.
    double accuracy = 0;
    // Accuracy restricted to positions Alice paired with the wrong qubit
    // (NaN when every guess happened to be right).
    double wrong_pair_accuracy = 0;
    size_t correctly_paired = 0;
};

/// Alice tries to read Bob's key before announcing hers. She knows which slots
/// hold message qubits but not their order, so she pairs each home qubit with
/// a uniformly random unclaimed message qubit, Bell-measures, and decodes the
/// X bit. `true_order` and `bob_key` are only used to score the attempt.
EarlyMeasureReport dishonest_alice_early_measure(
    QubitStore &store,
    std::span<const QubitId> home,
    std::span<const QubitId> message_qubits_unordered,
    std::span<const QubitId> true_order,
    const KeyBits &bob_key,
    Rng &rng);

}  // namespace qka

#endif
