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

// Shared choreography for the protocol engines: decoy insertion, the quantum
// send, staged classical disclosures and decoy checks, all logged to one
// transcript.

#ifndef QKA_SRC_RUN_CONTEXT_H
#define QKA_SRC_RUN_CONTEXT_H

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qka/protocol.h"

namespace qka::detail {

struct Delivery {
    size_t transmission = 0;
    size_t sender = 0;
    size_t receiver = 0;
    size_t hop = 0;
    TravelSequence seq;
    PermutationRecord record;
};

class RunContext {
   public:
    RunContext(const ProtocolConfig &config, const AdversaryModel &adversary, ProtocolKind kind);

    const std::string &name(size_t party) const {
        return names_[party % names_.size()];
    }
    size_t parties() const {
        return names_.size();
    }
    size_t next(size_t party, size_t steps = 1) const {
        return (party + steps) % names_.size();
    }

    /// Uses config.private_keys[party] when given, otherwise draws n random bits.
    KeyBits private_key(size_t party);

    void log_prepare(const std::string &step, size_t party, uint64_t carrier_qubits, uint64_t decoy_qubits);

    /// Sender adds n/2 decoy pairs and scrambles; the sequence crosses the
    /// channel (where an external adversary may act) and the receiver acks.
    Delivery transmit(const std::string &step, size_t sender, size_t receiver, size_t hop, std::span<const QubitId> messages);

    /// Sender discloses the whole permutation; receiver checks the decoys.
    /// Returns false (and logs an Abort) if the check fails.
    bool check_with_full_disclosure(Delivery &d, const std::string &step);

    /// Sender discloses decoy pair coordinates only; receiver checks them.
    bool check_with_decoy_disclosure(Delivery &d, const std::string &step);

    /// Sender announces `order` (slot indices, message i first) and the
    /// receiver rebuilds the message sequence from it.
    std::vector<QubitId> disclose_message_order(Delivery &d, const std::string &step, std::span<const size_t> order);

    /// Message qubits in the sender's true order.
    std::vector<QubitId> messages_in_order(const Delivery &d) const;

    void announce_key(const std::string &step, size_t party, const KeyBits &key);
    void log_measure(const std::string &step, size_t party, const std::string &outcomes);

    ProtocolResult finish(std::vector<KeyBits> private_keys, std::vector<std::optional<KeyBits>> derived);
    ProtocolResult finish_aborted(std::vector<KeyBits> private_keys, size_t transmission);

    QubitStore store;
    Rng rng;
    Transcript transcript;
    std::vector<TransmissionCheck> checks;
    AttackReport attack;
    ProtocolConfig config;
    AdversaryModel adversary;

   private:
    bool run_check(Delivery &d, const std::string &step);

    std::vector<std::string> names_;
    size_t transmissions_ = 0;
};

}  // namespace qka::detail

#endif
