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

#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qka/protocol.h"
#include "run_context.h"

namespace qka {

namespace {

std::string join_slots(std::span<const size_t> slots) {
    std::string out;
    for (size_t k = 0; k < slots.size(); k++) {
        if (k) {
            out += ',';
        }
        out += std::to_string(slots[k]);
    }
    return out;
}

std::string join_pairs(const DecoyDisclosure &pairs) {
    std::string out;
    for (size_t k = 0; k < pairs.size(); k++) {
        if (k) {
            out += ';';
        }
        out += std::to_string(pairs[k].first) + '-' + std::to_string(pairs[k].second);
    }
    return out;
}

std::string join_qubits(std::span<const QubitId> qubits) {
    std::string out;
    for (size_t k = 0; k < qubits.size(); k++) {
        if (k) {
            out += ',';
        }
        out += std::to_string(qubits[k].value);
    }
    return out;
}

}  // namespace

void ProtocolConfig::validate() const {
    if (key_bits == 0 || key_bits % 2 != 0) {
        throw std::invalid_argument("key length must be a positive even number");
    }
    if (!(error_threshold >= 0.0 && error_threshold <= 1.0)) {
        throw std::invalid_argument("error threshold must lie in [0, 1]");
    }
    if (party_count != 2 && party_count != 3 && party_count != 5) {
        throw std::invalid_argument("party count must be 2, 3 or 5");
    }
    for (int r : five_party_rounds) {
        if (r < 1 || r > 6) {
            throw std::invalid_argument("five-party rounds must name subgroups g1..g6");
        }
    }
    if (!private_keys.empty()) {
        if (private_keys.size() != party_count) {
            throw std::invalid_argument("fixed private keys must be given for every party");
        }
        for (const auto &k : private_keys) {
            if (k.size() != key_bits) {
                throw std::invalid_argument("fixed private key has the wrong length");
            }
        }
    }
}

ProtocolKind protocol_for_party_count(size_t party_count) {
    switch (party_count) {
        case 2:
            return ProtocolKind::TwoParty;
        case 3:
            return ProtocolKind::ThreeParty;
        case 5:
            return ProtocolKind::FiveParty;
        default:
            throw std::invalid_argument("party count must be 2, 3 or 5");
    }
}

std::string party_name(size_t index, size_t party_count) {
    static const char *kNames[] = {"Alice", "Bob", "Charlie"};
    if (party_count <= 3 && index < 3) {
        return kNames[index];
    }
    if (index < 3) {
        return kNames[index];
    }
    return "P" + std::to_string(index);
}

KeyBits ProtocolResult::expected_key() const {
    KeyBits k = KeyBits::zeros(key_bits);
    for (const auto &p : private_keys) {
        k = k ^ p;
    }
    return k;
}

bool ProtocolResult::agreed() const {
    if (aborted || derived_keys.empty()) {
        return false;
    }
    for (const auto &k : derived_keys) {
        if (!k || !(*k == *derived_keys[0])) {
            return false;
        }
    }
    return true;
}

std::pair<TravelSequence, PermutationRecord> insert_decoys_and_permute(
    std::span<const QubitId> message_qubits, size_t decoy_pairs, QubitStore &store, Rng &rng) {
    const size_t m = message_qubits.size();
    std::vector<QubitId> unscrambled(message_qubits.begin(), message_qubits.end());
    for (size_t k = 0; k < decoy_pairs; k++) {
        auto [a, b] = store.new_bell(BellOutcome::PsiPlus);
        unscrambled.push_back(a);
        unscrambled.push_back(b);
    }
    const size_t len = unscrambled.size();

    PermutationRecord rec;
    rec.inverse.resize(len);
    std::iota(rec.inverse.begin(), rec.inverse.end(), size_t{0});
    rng.shuffle(std::span<size_t>(rec.inverse));
    rec.forward.resize(len);
    for (size_t s = 0; s < len; s++) {
        rec.forward[rec.inverse[s]] = s;
    }
    for (size_t i = 0; i < m; i++) {
        rec.message_slots.push_back(rec.forward[i]);
    }
    for (size_t k = 0; k < decoy_pairs; k++) {
        rec.decoy_pairs.emplace_back(rec.forward[m + 2 * k], rec.forward[m + 2 * k + 1]);
    }

    TravelSequence seq;
    seq.slots.resize(len);
    for (size_t i = 0; i < len; i++) {
        seq.slots[rec.forward[i]] = unscrambled[i];
    }
    return {std::move(seq), std::move(rec)};
}

std::pair<TravelSequence, PermutationRecord> insert_decoys_and_permute(
    std::span<const QubitId> message_qubits, QubitStore &store, Rng &rng) {
    if (message_qubits.size() % 2 != 0) {
        throw std::invalid_argument("message count must be even to pair n/2 decoys");
    }
    return insert_decoys_and_permute(message_qubits, message_qubits.size() / 2, store, rng);
}

DecoyCheckResult verify_decoys(
    QubitStore &store,
    const TravelSequence &seq,
    const DecoyDisclosure &disclosure,
    size_t expected_pairs,
    double threshold,
    Rng &rng) {
    if (disclosure.size() != expected_pairs || disclosure.empty()) {
        throw std::invalid_argument("decoy disclosure names the wrong number of pairs");
    }
    std::set<size_t> used;
    for (auto [a, b] : disclosure) {
        if (a >= seq.slots.size() || b >= seq.slots.size() || a == b) {
            throw std::invalid_argument("decoy disclosure names an invalid slot");
        }
        if (!used.insert(a).second || !used.insert(b).second) {
            throw std::invalid_argument("decoy disclosure pairs overlap");
        }
    }
    size_t errors = 0;
    for (auto [a, b] : disclosure) {
        if (store.measure_bell(seq.slots[a], seq.slots[b], rng) != BellOutcome::PsiPlus) {
            errors++;
        }
    }
    DecoyCheckResult r;
    r.error_rate = static_cast<double>(errors) / static_cast<double>(disclosure.size());
    r.passed = r.error_rate <= threshold;
    return r;
}

void encode_key(QubitStore &store, std::span<const QubitId> qubits, const KeyBits &key, EncodingRound round) {
    if (qubits.size() != key.size()) {
        throw std::invalid_argument("key length does not match the qubit count");
    }
    const GroupElement flip{round == EncodingRound::XRound ? PauliLetter::X : PauliLetter::Z};
    for (size_t i = 0; i < qubits.size(); i++) {
        if (key[i]) {
            std::array<QubitId, 1> target{qubits[i]};
            store.apply_pauli(flip, target);
        }
    }
}

ProtocolResult run_protocol(const ProtocolConfig &config, const AdversaryModel &adversary) {
    switch (protocol_for_party_count(config.party_count)) {
        case ProtocolKind::TwoParty:
            return run_two_party(config, adversary);
        case ProtocolKind::ThreeParty:
            return run_three_party(config, adversary);
        case ProtocolKind::FiveParty:
            return run_five_party(config, adversary);
    }
    throw std::invalid_argument("bad party count");
}

EncodingScheme five_party_scheme(const std::array<int, 4> &rounds) {
    auto all = standard_subgroups_g2();
    EncodingScheme s;
    s.total_qubits = 4;
    s.travel_qubits = 2;
    s.bits_per_round = 1;
    s.rounds = 4;
    for (int r : rounds) {
        if (r < 1 || r > static_cast<int>(all.size())) {
            throw std::invalid_argument("round subgroup index out of range");
        }
        s.round_subgroups.push_back(all[r - 1]);
    }
    return s;
}

nlohmann::ordered_json result_to_json(const ProtocolResult &result, bool include_transcript) {
    nlohmann::ordered_json j;
    j["schema"] = "qka.result/1";
    j["protocol"] = protocol_name(result.protocol);
    j["key_bits"] = result.key_bits;
    j["seed"] = result.seed;
    j["aborted"] = result.aborted;
    if (result.abort_transmission) {
        j["abort_transmission"] = *result.abort_transmission;
    }
    j["agreed"] = result.agreed();
    j["expected_key"] = result.expected_key().hex();

    auto parties = nlohmann::ordered_json::array();
    for (size_t p = 0; p < result.private_keys.size(); p++) {
        nlohmann::ordered_json e;
        e["name"] = party_name(p, result.private_keys.size());
        e["private_key"] = result.private_keys[p].hex();
        if (p < result.derived_keys.size() && result.derived_keys[p]) {
            e["derived_key"] = result.derived_keys[p]->hex();
        } else {
            e["derived_key"] = nullptr;
        }
        parties.push_back(std::move(e));
    }
    j["parties"] = std::move(parties);

    auto checks = nlohmann::ordered_json::array();
    for (const auto &c : result.checks) {
        nlohmann::ordered_json e;
        e["transmission"] = c.transmission;
        e["from"] = party_name(c.sender, result.private_keys.size());
        e["to"] = party_name(c.receiver, result.private_keys.size());
        e["hop"] = c.hop;
        e["error_rate"] = c.error_rate;
        e["passed"] = c.passed;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);

    if (result.resources) {
        auto rep = qubit_efficiency(*result.resources);
        j["resources"] = {
            {"c", result.resources->c},
            {"q", result.resources->q},
            {"b", result.resources->b},
            {"eta_fraction", fraction_string(rep.eta)},
            {"eta_percent", rep.eta_percent},
        };
    } else {
        j["resources"] = nullptr;
    }

    nlohmann::ordered_json atk;
    atk["kind"] = adversary_name(result.attack.kind);
    if (result.attack.kind == AdversaryKind::InterceptResendZ ||
        result.attack.kind == AdversaryKind::InterceptResendBell) {
        atk["intercepted_slots"] = result.attack.intercepted_slots;
    }
    if (result.attack.kind == AdversaryKind::DishonestBobReorder) {
        auto pairs = nlohmann::ordered_json::array();
        for (auto [a, b] : result.attack.swap_pairs) {
            pairs.push_back({a, b});
        }
        atk["swap_pairs"] = std::move(pairs);
        atk["target_key"] = result.attack.bob_target_key.hex();
        atk["alice_matches_target"] = result.attack.alice_matches_target;
    }
    if (result.attack.early_measure) {
        const auto &em = *result.attack.early_measure;
        atk["guessed_key"] = em.guessed_bits.hex();
        atk["accuracy"] = em.accuracy;
        atk["correctly_paired"] = em.correctly_paired;
        if (std::isnan(em.wrong_pair_accuracy)) {
            atk["wrong_pair_accuracy"] = nullptr;
        } else {
            atk["wrong_pair_accuracy"] = em.wrong_pair_accuracy;
        }
    }
    j["attack"] = std::move(atk);

    if (include_transcript) {
        j["transcript"] = transcript_to_json(result.transcript);
    }
    return j;
}

namespace detail {

RunContext::RunContext(const ProtocolConfig &cfg, const AdversaryModel &adv, ProtocolKind kind)
    : rng(cfg.seed), config(cfg), adversary(adv) {
    config.validate();
    adversary.validate(config.key_bits);
    if (protocol_for_party_count(config.party_count) != kind) {
        throw std::invalid_argument(
            std::string(protocol_name(kind)) + " protocol cannot run with " + std::to_string(config.party_count) +
            " parties");
    }
    for (size_t k = 0; k < config.party_count; k++) {
        names_.push_back(party_name(k, config.party_count));
    }
    transcript.protocol = kind;
    transcript.key_bits = config.key_bits;
    transcript.party_count = config.party_count;
    attack.kind = adversary.kind;
}

KeyBits RunContext::private_key(size_t party) {
    if (!config.private_keys.empty()) {
        return config.private_keys.at(party);
    }
    return KeyBits::random(config.key_bits, rng);
}

void RunContext::log_prepare(const std::string &step, size_t party, uint64_t carrier_qubits, uint64_t decoy_qubits) {
    TranscriptEvent e;
    e.step = step;
    e.actor = name(party);
    e.kind = EventKind::Prepare;
    e.carrier_qubits = carrier_qubits;
    e.decoy_qubits = decoy_qubits;
    e.payload = "carriers=" + std::to_string(carrier_qubits) + ";decoys=" + std::to_string(decoy_qubits);
    transcript.add(std::move(e));
}

Delivery RunContext::transmit(
    const std::string &step, size_t sender, size_t receiver, size_t hop, std::span<const QubitId> messages) {
    if (messages.size() % 2 != 0) {
        throw std::logic_error("odd message count in transmission");
    }
    Delivery d;
    d.transmission = transmissions_++;
    d.sender = sender;
    d.receiver = receiver;
    d.hop = hop;
    // n/2 decoy pairs per transmission, where n is the key length.
    const size_t decoy_pairs = config.key_bits / 2;
    auto [seq, rec] = insert_decoys_and_permute(messages, decoy_pairs, store, rng);
    d.seq = std::move(seq);
    d.record = std::move(rec);
    log_prepare(step, sender, 0, 2 * decoy_pairs);

    TranscriptEvent send;
    send.step = step;
    send.actor = name(sender);
    send.recipient = name(receiver);
    send.kind = EventKind::QuantumSend;
    send.transmission = static_cast<int64_t>(d.transmission);
    send.carrier_qubits = messages.size();
    send.decoy_qubits = 2 * decoy_pairs;
    send.payload = join_qubits(d.seq.slots);
    transcript.add(std::move(send));

    bool in_scope = adversary.scope == AttackScope::AllHops || hop == 0;
    if (adversary.is_external() && in_scope) {
        attack.intercepted_slots += attack_transit(adversary, store, d.seq, rng);
    }

    TranscriptEvent ack;
    ack.step = step;
    ack.actor = name(receiver);
    ack.recipient = name(sender);
    ack.kind = EventKind::Ack;
    ack.transmission = static_cast<int64_t>(d.transmission);
    ack.payload = "received=" + std::to_string(d.seq.slots.size());
    transcript.add(std::move(ack));
    return d;
}

bool RunContext::run_check(Delivery &d, const std::string &step) {
    DecoyCheckResult r =
        verify_decoys(store, d.seq, d.record.decoy_pairs, d.record.decoy_pairs.size(), config.error_threshold, rng);
    checks.push_back({d.transmission, d.sender, d.receiver, d.hop, r.error_rate, r.passed});

    std::ostringstream payload;
    payload << "error_rate=" << r.error_rate << ";passed=" << r.passed;
    TranscriptEvent e;
    e.step = step;
    e.actor = name(d.receiver);
    e.kind = EventKind::DecoyCheck;
    e.transmission = static_cast<int64_t>(d.transmission);
    e.payload = payload.str();
    transcript.add(std::move(e));

    if (!r.passed) {
        TranscriptEvent abort;
        abort.step = step;
        abort.actor = name(d.receiver);
        abort.recipient = "all";
        abort.kind = EventKind::Abort;
        abort.transmission = static_cast<int64_t>(d.transmission);
        abort.payload = payload.str();
        transcript.add(std::move(abort));
    }
    return r.passed;
}

bool RunContext::check_with_full_disclosure(Delivery &d, const std::string &step) {
    TranscriptEvent e;
    e.step = step;
    e.actor = name(d.sender);
    e.recipient = name(d.receiver);
    e.kind = EventKind::FullPermutationDisclosure;
    e.transmission = static_cast<int64_t>(d.transmission);
    e.payload = "decoys=" + join_pairs(d.record.decoy_pairs) + ";order=" + join_slots(d.record.message_slots);
    e.decoding_bits = d.record.message_slots.size();
    transcript.add(std::move(e));
    return run_check(d, step);
}

bool RunContext::check_with_decoy_disclosure(Delivery &d, const std::string &step) {
    TranscriptEvent e;
    e.step = step;
    e.actor = name(d.sender);
    e.recipient = name(d.receiver);
    e.kind = EventKind::DecoyPositionsDisclosure;
    e.transmission = static_cast<int64_t>(d.transmission);
    e.payload = "decoys=" + join_pairs(d.record.decoy_pairs);
    transcript.add(std::move(e));
    return run_check(d, step);
}

std::vector<QubitId> RunContext::disclose_message_order(Delivery &d, const std::string &step, std::span<const size_t> order) {
    if (order.size() != d.record.message_slots.size()) {
        throw std::invalid_argument("announced message order has the wrong length");
    }
    TranscriptEvent e;
    e.step = step;
    e.actor = name(d.sender);
    e.recipient = name(d.receiver);
    e.kind = EventKind::MessageOrderDisclosure;
    e.transmission = static_cast<int64_t>(d.transmission);
    e.payload = "order=" + join_slots(order);
    e.decoding_bits = order.size();
    transcript.add(std::move(e));

    std::vector<QubitId> out;
    out.reserve(order.size());
    for (size_t s : order) {
        out.push_back(d.seq.slots.at(s));
    }
    return out;
}

std::vector<QubitId> RunContext::messages_in_order(const Delivery &d) const {
    std::vector<QubitId> out;
    out.reserve(d.record.message_slots.size());
    for (size_t s : d.record.message_slots) {
        out.push_back(d.seq.slots[s]);
    }
    return out;
}

void RunContext::announce_key(const std::string &step, size_t party, const KeyBits &key) {
    TranscriptEvent e;
    e.step = step;
    e.actor = name(party);
    e.recipient = "all";
    e.kind = EventKind::KeyAnnouncement;
    e.payload = key.bit_string();
    e.decoding_bits = key.size();
    transcript.add(std::move(e));
}

void RunContext::log_measure(const std::string &step, size_t party, const std::string &outcomes) {
    TranscriptEvent e;
    e.step = step;
    e.actor = name(party);
    e.kind = EventKind::Measure;
    e.payload = outcomes;
    transcript.add(std::move(e));
}

ProtocolResult RunContext::finish(std::vector<KeyBits> private_keys, std::vector<std::optional<KeyBits>> derived) {
    ProtocolResult r;
    r.protocol = transcript.protocol;
    r.key_bits = config.key_bits;
    r.seed = config.seed;
    r.private_keys = std::move(private_keys);
    r.derived_keys = std::move(derived);
    r.checks = std::move(checks);
    r.resources = count_from_transcript(transcript);
    r.transcript = std::move(transcript);
    r.attack = std::move(attack);
    return r;
}

ProtocolResult RunContext::finish_aborted(std::vector<KeyBits> private_keys, size_t transmission) {
    ProtocolResult r;
    r.protocol = transcript.protocol;
    r.key_bits = config.key_bits;
    r.seed = config.seed;
    r.private_keys = std::move(private_keys);
    r.derived_keys.assign(config.party_count, std::nullopt);
    r.aborted = true;
    r.abort_transmission = transmission;
    r.checks = std::move(checks);
    r.transcript = std::move(transcript);
    r.attack = std::move(attack);
    return r;
}

}  // namespace detail

}  // namespace qka
