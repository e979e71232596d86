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

#ifndef QKA_PROTOCOL_H
#define QKA_PROTOCOL_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qka/adversary.h"
#include "qka/dense_coding.h"
#include "qka/efficiency.h"
#include "qka/protocol_types.h"
#include "qka/quantum_core.h"
#include "qka/transcript.h"

namespace qka {

struct ProtocolConfig {
    // Key length n; must be even because each transmission carries n/2 decoy pairs.
    size_t key_bits = 16;
    double error_threshold = 0.0;
    uint64_t seed = 0;
    size_t party_count = 2;
    FourQubitState five_party_state = FourQubitState::Omega;
    // 1-based indices into standard_subgroups_g2(), one per encoding round.
    std::array<int, 4> five_party_rounds{1, 2, 3, 4};
    // Optional fixed private keys, one per party. Empty means draw them at random.
    std::vector<KeyBits> private_keys;

    /// Throws std::invalid_argument describing the first problem found.
    void validate() const;
};

ProtocolKind protocol_for_party_count(size_t party_count);

/// Party names used in transcripts: Alice, Bob, Charlie, then P3, P4.
std::string party_name(size_t index, size_t party_count);

struct TransmissionCheck {
    size_t transmission = 0;
    size_t sender = 0;
    size_t receiver = 0;
    size_t hop = 0;  // position within the sender's chain, 0 = first
    double error_rate = 0;
    bool passed = true;
};

struct AttackReport {
    AdversaryKind kind = AdversaryKind::None;
    // External attacks: slots intercepted across the run.
    size_t intercepted_slots = 0;
    // DishonestBobReorder.
    std::vector<std::pair<size_t, size_t>> swap_pairs;
    KeyBits bob_target_key;
    bool alice_matches_target = false;
    // Alice's Bell outcome at each swapped position, in swap_pairs order
    // (first, second, first, second, ...).
    std::vector<BellOutcome> swapped_outcomes;
    // DishonestAliceEarlyMeasure.
    std::optional<EarlyMeasureReport> early_measure;
};

struct ProtocolResult {
    ProtocolKind protocol = ProtocolKind::TwoParty;
    size_t key_bits = 0;
    uint64_t seed = 0;
    // Ground truth held by the harness, never announced in the protocol.
    std::vector<KeyBits> private_keys;
    // Shared key each party derived; nullopt when the run aborted.
    std::vector<std::optional<KeyBits>> derived_keys;
    bool aborted = false;
    std::optional<size_t> abort_transmission;
    std::vector<TransmissionCheck> checks;
    std::optional<ResourceCount> resources;
    Transcript transcript;
    AttackReport attack;

    /// XOR of all private keys.
    KeyBits expected_key() const;
    /// No abort and every derived key identical.
    bool agreed() const;
};

struct DecoyCheckResult {
    double error_rate = 0;
    bool passed = true;
};

/// Adds decoy_pairs fresh |psi+> pairs behind the message qubits and applies a
/// uniformly random permutation (seeded Fisher-Yates) to all slots.
std::pair<TravelSequence, PermutationRecord> insert_decoys_and_permute(
    std::span<const QubitId> message_qubits, size_t decoy_pairs, QubitStore &store, Rng &rng);

/// n message qubits with n/2 decoy pairs. Throws std::invalid_argument for odd n.
std::pair<TravelSequence, PermutationRecord> insert_decoys_and_permute(
    std::span<const QubitId> message_qubits, QubitStore &store, Rng &rng);

/// Bell-measures each disclosed decoy pair. error_rate is the fraction of
/// outcomes other than psi+, and the check passes iff error_rate <= threshold.
/// Throws std::invalid_argument if the disclosure does not name
/// expected_pairs disjoint in-range pairs.
DecoyCheckResult verify_decoys(
    QubitStore &store,
    const TravelSequence &seq,
    const DecoyDisclosure &disclosure,
    size_t expected_pairs,
    double threshold,
    Rng &rng);

enum class EncodingRound : uint8_t {
    XRound,  // bit 1 -> X
    ZRound,  // bit 1 -> Z
};

/// Qubit i receives I for bit 0 and X or Z for bit 1.
void encode_key(QubitStore &store, std::span<const QubitId> qubits, const KeyBits &key, EncodingRound round);

ProtocolResult run_two_party(const ProtocolConfig &config, const AdversaryModel &adversary = {});
ProtocolResult run_three_party(const ProtocolConfig &config, const AdversaryModel &adversary = {});
/// Rejects the round subgroups with std::invalid_argument before any quantum
/// step if they fail validate_scheme. Only external adversaries apply.
ProtocolResult run_five_party(const ProtocolConfig &config, const AdversaryModel &adversary = {});

/// Dispatches on config.party_count.
ProtocolResult run_protocol(const ProtocolConfig &config, const AdversaryModel &adversary = {});

/// The encoding scheme used by the five-party protocol for the given rounds.
EncodingScheme five_party_scheme(const std::array<int, 4> &rounds);

/// Result as JSON: keys as hex strings, per-transmission checks, resource
/// counts, attack report, and the full transcript.
nlohmann::ordered_json result_to_json(const ProtocolResult &result, bool include_transcript = true);

}  // namespace qka

#endif
