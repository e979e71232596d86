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

// Ring protocols. Every party starts a chain; chains advance in lock step, one
// hop per protocol step, so all parties transmit before any check runs.

#include <stdexcept>

#include "qka/protocol.h"
#include "run_context.h"

namespace qka {

namespace {

void reject_insiders(const AdversaryModel &adversary, std::string_view protocol) {
    if (adversary.is_insider()) {
        throw std::invalid_argument(
            std::string(adversary_name(adversary.kind)) + " applies to the two-party protocol only, not " +
            std::string(protocol));
    }
}

}  // namespace

ProtocolResult run_three_party(const ProtocolConfig &config, const AdversaryModel &adversary) {
    reject_insiders(adversary, "three-party");
    detail::RunContext ctx(config, adversary, ProtocolKind::ThreeParty);
    const size_t n = config.key_bits;
    const size_t parties = ctx.parties();
    std::vector<KeyBits> keys;
    for (size_t j = 0; j < parties; j++) {
        keys.push_back(ctx.private_key(j));
    }

    std::vector<std::vector<QubitId>> home(parties), travel(parties);
    for (size_t j = 0; j < parties; j++) {
        for (size_t i = 0; i < n; i++) {
            auto [p, q] = ctx.store.new_bell(BellOutcome::PsiPlus);
            home[j].push_back(p);
            travel[j].push_back(q);
        }
        ctx.log_prepare("prepare", j, 2 * n, 0);
    }

    std::vector<detail::Delivery> hop(parties);
    for (size_t j = 0; j < parties; j++) {
        hop[j] = ctx.transmit("send", j, ctx.next(j), 0, travel[j]);
    }
    std::vector<std::vector<QubitId>> held(parties);
    for (size_t j = 0; j < parties; j++) {
        if (!ctx.check_with_full_disclosure(hop[j], "check")) {
            return ctx.finish_aborted(std::move(keys), hop[j].transmission);
        }
        held[j] = ctx.messages_in_order(hop[j]);
    }

    // First pass encodes with X, second with Z. held[j] follows chain j.
    const struct {
        const char *encode_step;
        const char *check_step;
        EncodingRound round;
    } rounds[] = {{"encode x", "check x", EncodingRound::XRound}, {"encode z", "check z", EncodingRound::ZRound}};
    for (size_t r = 0; r < 2; r++) {
        for (size_t j = 0; j < parties; j++) {
            size_t encoder = ctx.next(j, r + 1);
            encode_key(ctx.store, held[j], keys[encoder], rounds[r].round);
            hop[j] = ctx.transmit(rounds[r].encode_step, encoder, ctx.next(encoder), r + 1, held[j]);
        }
        for (size_t j = 0; j < parties; j++) {
            if (!ctx.check_with_decoy_disclosure(hop[j], rounds[r].check_step)) {
                return ctx.finish_aborted(std::move(keys), hop[j].transmission);
            }
        }
        for (size_t j = 0; j < parties; j++) {
            held[j] = ctx.disclose_message_order(hop[j], rounds[r].check_step, hop[j].record.message_slots);
        }
    }

    std::vector<std::optional<KeyBits>> derived;
    for (size_t j = 0; j < parties; j++) {
        KeyBits x = KeyBits::zeros(n), z = KeyBits::zeros(n);
        std::string log;
        for (size_t i = 0; i < n; i++) {
            BellOutcome b = ctx.store.measure_bell(home[j][i], held[j][i], ctx.rng);
            auto [xb, zb] = decode_bell_outcome(b);
            x.set(i, xb);
            z.set(i, zb);
            log += (i ? "," : "") + std::string(bell_name(b));
        }
        ctx.log_measure("measure", j, log);
        derived.push_back(keys[j] ^ x ^ z);
    }
    return ctx.finish(std::move(keys), std::move(derived));
}

ProtocolResult run_five_party(const ProtocolConfig &config, const AdversaryModel &adversary) {
    reject_insiders(adversary, "five-party");
    if (adversary.kind == AdversaryKind::InterceptResendBell) {
        // Bell-measuring slots from two different four-qubit carriers leaves
        // their six partners entangled, and repeated hits chain past the
        // register cap.
        throw std::invalid_argument("intercept-bell is not supported for the five-party protocol");
    }
    config.validate();
    const EncodingScheme scheme = five_party_scheme(config.five_party_rounds);
    {
        const std::array<QubitId, 4> ids{QubitId{0}, QubitId{1}, QubitId{2}, QubitId{3}};
        const std::array<QubitId, 2> targets{ids[0], ids[2]};
        if (!validate_scheme(scheme, StateRegister::four_qubit(config.five_party_state, ids), targets)) {
            throw std::invalid_argument("five-party round subgroups do not give an orthogonal dense coding");
        }
    }
    detail::RunContext ctx(config, adversary, ProtocolKind::FiveParty);
    const size_t n = config.key_bits;
    const size_t parties = ctx.parties();

    // Measurement basis {U_k |phi0>} over (q1, q2, q3, q4), U_k acting on (q1, q3).
    std::vector<GroupElement> group;
    for (const auto &u : product_set(scheme.round_subgroups)) {
        group.push_back(u);
    }
    std::vector<std::vector<Amplitude>> basis;
    {
        const std::array<QubitId, 4> ids{QubitId{0}, QubitId{1}, QubitId{2}, QubitId{3}};
        const std::array<QubitId, 2> targets{ids[0], ids[2]};
        for (const auto &s : encoded_states(StateRegister::four_qubit(config.five_party_state, ids), targets, group)) {
            basis.emplace_back(s.amplitudes().begin(), s.amplitudes().end());
        }
    }
    std::vector<GroupElement> flips;
    for (const auto &g : scheme.round_subgroups) {
        for (const auto &e : g.elements) {
            if (!e.is_identity()) {
                flips.push_back(e);
            }
        }
    }

    std::vector<KeyBits> keys;
    for (size_t c = 0; c < parties; c++) {
        keys.push_back(ctx.private_key(c));
    }

    // Carriers: party c keeps q2, q4 of each copy and sends [q1, q3] per copy.
    std::vector<std::vector<std::array<QubitId, 4>>> copies(parties);
    std::vector<std::vector<QubitId>> held(parties);
    for (size_t c = 0; c < parties; c++) {
        for (size_t i = 0; i < n; i++) {
            auto q = ctx.store.new_four_qubit(config.five_party_state);
            copies[c].push_back(q);
            held[c].push_back(q[0]);
            held[c].push_back(q[2]);
        }
        ctx.log_prepare("prepare", c, 4 * n, 0);
    }

    std::vector<detail::Delivery> hop(parties);
    for (size_t c = 0; c < parties; c++) {
        hop[c] = ctx.transmit("hop 0", c, ctx.next(c), 0, held[c]);
    }
    for (size_t c = 0; c < parties; c++) {
        if (!ctx.check_with_full_disclosure(hop[c], "hop 0 check")) {
            return ctx.finish_aborted(std::move(keys), hop[c].transmission);
        }
        held[c] = ctx.messages_in_order(hop[c]);
    }

    for (size_t r = 1; r <= 4; r++) {
        const std::string step = "round " + std::to_string(r);
        for (size_t c = 0; c < parties; c++) {
            size_t encoder = ctx.next(c, r);
            for (size_t i = 0; i < n; i++) {
                if (keys[encoder][i]) {
                    const std::array<QubitId, 2> pair{held[c][2 * i], held[c][2 * i + 1]};
                    ctx.store.apply_pauli(flips[r - 1], pair);
                }
            }
            hop[c] = ctx.transmit(step, encoder, ctx.next(encoder), r, held[c]);
        }
        for (size_t c = 0; c < parties; c++) {
            if (!ctx.check_with_decoy_disclosure(hop[c], step + " check")) {
                return ctx.finish_aborted(std::move(keys), hop[c].transmission);
            }
        }
        for (size_t c = 0; c < parties; c++) {
            held[c] = ctx.disclose_message_order(hop[c], step + " order", hop[c].record.message_slots);
        }
    }

    std::vector<std::optional<KeyBits>> derived;
    for (size_t c = 0; c < parties; c++) {
        KeyBits k = keys[c];
        std::string log;
        for (size_t i = 0; i < n; i++) {
            const auto &home = copies[c][i];
            const std::array<QubitId, 4> qubits{held[c][2 * i], home[1], held[c][2 * i + 1], home[3]};
            size_t outcome = ctx.store.measure_in_basis(qubits, basis, ctx.rng);
            auto idx = factorize(group[outcome], scheme.round_subgroups);
            for (size_t r = 1; r <= 4; r++) {
                if (idx[r - 1] != 0) {
                    k.flip(i);
                }
            }
            log += (i ? "," : "") + group[outcome].str();
        }
        ctx.log_measure("decode", c, log);
        derived.push_back(std::move(k));
    }
    return ctx.finish(std::move(keys), std::move(derived));
}

}  // namespace qka
