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

// Two-party agreement: Alice's |psi+> pairs make one round trip, Bob encodes
// on the way back, and the message order is held back until Alice has
// committed to her key.

#include <algorithm>
#include <stdexcept>

#include "qka/protocol.h"
#include "run_context.h"

namespace qka {

namespace {

constexpr size_t kAlice = 0;
constexpr size_t kBob = 1;

std::string outcome_list(std::span<const BellOutcome> outcomes) {
    std::string out;
    for (size_t k = 0; k < outcomes.size(); k++) {
        if (k) {
            out += ',';
        }
        out += bell_name(outcomes[k]);
    }
    return out;
}

}  // namespace

ProtocolResult run_two_party(const ProtocolConfig &config, const AdversaryModel &adversary) {
    detail::RunContext ctx(config, adversary, ProtocolKind::TwoParty);
    const size_t n = config.key_bits;
    std::vector<KeyBits> keys{ctx.private_key(kAlice), ctx.private_key(kBob)};

    // Alice keeps the first qubit of each pair and sends the second.
    std::vector<QubitId> home, travel;
    for (size_t i = 0; i < n; i++) {
        auto [p, q] = ctx.store.new_bell(BellOutcome::PsiPlus);
        home.push_back(p);
        travel.push_back(q);
    }
    ctx.log_prepare("prepare", kAlice, 2 * n, 0);

    auto out = ctx.transmit("send", kAlice, kBob, 0, travel);
    if (!ctx.check_with_full_disclosure(out, "check")) {
        return ctx.finish_aborted(std::move(keys), out.transmission);
    }

    // Bob encodes in the order Alice disclosed.
    auto at_bob = ctx.messages_in_order(out);
    encode_key(ctx.store, at_bob, keys[kBob], EncodingRound::XRound);
    auto back = ctx.transmit("encode", kBob, kAlice, 1, at_bob);
    if (!ctx.check_with_decoy_disclosure(back, "return check")) {
        return ctx.finish_aborted(std::move(keys), back.transmission);
    }

    std::optional<KeyBits> alice_guess;
    if (adversary.kind == AdversaryKind::DishonestAliceEarlyMeasure) {
        // Alice knows which slots are messages but not their order.
        std::vector<size_t> slots = back.record.message_slots;
        std::sort(slots.begin(), slots.end());
        std::vector<QubitId> unordered;
        for (size_t s : slots) {
            unordered.push_back(back.seq.slots[s]);
        }
        auto truth = ctx.messages_in_order(back);
        auto report = dishonest_alice_early_measure(ctx.store, home, unordered, truth, keys[kBob], ctx.rng);
        ctx.log_measure("early measure", kAlice, "early:" + report.guessed_bits.bit_string());
        alice_guess = report.guessed_bits;
        ctx.attack.early_measure = std::move(report);
    }

    // Alice commits to her key before learning the order.
    ctx.announce_key("announce", kAlice, keys[kAlice]);

    std::vector<size_t> order = back.record.message_slots;
    if (adversary.kind == AdversaryKind::DishonestBobReorder) {
        ctx.attack.swap_pairs = choose_swap_pairs(n, adversary.swap_count, ctx.rng);
        order = dishonest_bob_reorder(back.record.message_slots, ctx.attack.swap_pairs);
    }
    auto at_alice = ctx.disclose_message_order(back, "disclose order", order);

    KeyBits alice_key;
    if (alice_guess) {
        alice_key = keys[kAlice] ^ *alice_guess;
    } else {
        std::vector<BellOutcome> outcomes;
        KeyBits decoded = KeyBits::zeros(n);
        for (size_t i = 0; i < n; i++) {
            outcomes.push_back(ctx.store.measure_bell(home[i], at_alice[i], ctx.rng));
            decoded.set(i, decode_bell_outcome(outcomes.back()).first);
        }
        ctx.log_measure("measure", kAlice, outcome_list(outcomes));
        alice_key = keys[kAlice] ^ decoded;

        if (adversary.kind == AdversaryKind::DishonestBobReorder) {
            // Bob hopes Alice lands on a key of his choosing at the positions he
            // scrambled; everywhere else he cannot change anything.
            KeyBits target = keys[kAlice] ^ keys[kBob];
            for (auto [a, b] : ctx.attack.swap_pairs) {
                target.set(a, ctx.rng.bit());
                target.set(b, ctx.rng.bit());
                ctx.attack.swapped_outcomes.push_back(outcomes[a]);
                ctx.attack.swapped_outcomes.push_back(outcomes[b]);
            }
            ctx.attack.alice_matches_target = alice_key == target;
            ctx.attack.bob_target_key = std::move(target);
        }
    }
    KeyBits bob_key = keys[kAlice] ^ keys[kBob];

    return ctx.finish(std::move(keys), {std::move(alice_key), std::move(bob_key)});
}

}  // namespace qka
