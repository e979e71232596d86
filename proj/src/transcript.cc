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

#include "qka/transcript.h"

#include <cstdio>
#include <stdexcept>

namespace qka {

std::string_view event_kind_name(EventKind kind) {
    switch (kind) {
        case EventKind::Prepare:
            return "Prepare";
        case EventKind::DecoyCheck:
            return "DecoyCheck";
        case EventKind::Measure:
            return "Measure";
        case EventKind::QuantumSend:
            return "QuantumSend";
        case EventKind::Ack:
            return "Ack";
        case EventKind::FullPermutationDisclosure:
            return "FullPermutationDisclosure";
        case EventKind::DecoyPositionsDisclosure:
            return "DecoyPositionsDisclosure";
        case EventKind::MessageOrderDisclosure:
            return "MessageOrderDisclosure";
        case EventKind::KeyAnnouncement:
            return "KeyAnnouncement";
        case EventKind::Abort:
            return "Abort";
    }
    throw std::invalid_argument("bad EventKind");
}

int64_t Transcript::first_index(EventKind kind) const {
    for (size_t i = 0; i < events.size(); i++) {
        if (events[i].kind == kind) {
            return static_cast<int64_t>(i);
        }
    }
    return -1;
}

bool Transcript::aborted() const {
    return first_index(EventKind::Abort) >= 0;
}

std::string payload_digest(std::string_view payload) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : payload) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

nlohmann::ordered_json transcript_to_json(const Transcript &transcript) {
    nlohmann::ordered_json events = nlohmann::ordered_json::array();
    for (size_t i = 0; i < transcript.events.size(); i++) {
        const auto &e = transcript.events[i];
        nlohmann::ordered_json j;
        j["index"] = i;
        j["step"] = e.step;
        j["actor"] = e.actor;
        if (!e.recipient.empty()) {
            j["to"] = e.recipient;
        }
        j["kind"] = event_kind_name(e.kind);
        if (e.transmission >= 0) {
            j["transmission"] = e.transmission;
        }
        j["payload_digest"] = payload_digest(e.payload);
        if (e.carrier_qubits || e.decoy_qubits) {
            j["carrier_qubits"] = e.carrier_qubits;
            j["decoy_qubits"] = e.decoy_qubits;
        }
        if (e.decoding_bits) {
            j["decoding_bits"] = e.decoding_bits;
        }
        events.push_back(std::move(j));
    }
    nlohmann::ordered_json out;
    out["schema"] = kTranscriptSchema;
    out["protocol"] = protocol_name(transcript.protocol);
    out["key_bits"] = transcript.key_bits;
    out["party_count"] = transcript.party_count;
    out["events"] = std::move(events);
    return out;
}

}  // namespace qka
