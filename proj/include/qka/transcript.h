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

#ifndef QKA_TRANSCRIPT_H
#define QKA_TRANSCRIPT_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qka/protocol_types.h"

namespace qka {

inline constexpr std::string_view kTranscriptSchema = "qka.transcript/1";

enum class EventKind : uint8_t {
    // Local actions, logged so that orderings and resource use are auditable.
    Prepare,
    DecoyCheck,
    Measure,
    // Quantum channel.
    QuantumSend,
    // Authenticated classical channel.
    Ack,
    FullPermutationDisclosure,
    DecoyPositionsDisclosure,
    MessageOrderDisclosure,
    KeyAnnouncement,
    Abort,
};

std::string_view event_kind_name(EventKind kind);

struct TranscriptEvent {
    std::string step;
    std::string actor;
    std::string recipient;  // empty for local events
    EventKind kind = EventKind::Prepare;
    // Index of the quantum transmission this event belongs to, if any.
    int64_t transmission = -1;
    // Canonical text form of the payload; only its digest is serialized.
    std::string payload;
    // Prepare: carrier qubits and decoy qubits created.
    // QuantumSend: message qubits and decoy qubits on the wire.
    uint64_t carrier_qubits = 0;
    uint64_t decoy_qubits = 0;
    // Classical bits this message spends on decoding (eavesdropping-check
    // traffic counts as zero).
    uint64_t decoding_bits = 0;
};

struct Transcript {
    ProtocolKind protocol = ProtocolKind::TwoParty;
    size_t key_bits = 0;
    size_t party_count = 0;
    std::vector<TranscriptEvent> events;

    TranscriptEvent &add(TranscriptEvent event) {
        events.push_back(std::move(event));
        return events.back();
    }
    /// Index of the first event of `kind`, or -1.
    int64_t first_index(EventKind kind) const;
    bool aborted() const;
};

/// 64-bit FNV-1a of `payload`, as 16 lowercase hex digits.
std::string payload_digest(std::string_view payload);

/// {"schema", "protocol", "key_bits", "party_count", "events": [{"index",
/// "step", "actor", "to", "kind", "transmission", "payload_digest", ...}]}.
nlohmann::ordered_json transcript_to_json(const Transcript &transcript);

}  // namespace qka

#endif
