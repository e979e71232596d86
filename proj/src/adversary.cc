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

#include "qka/adversary.h"

#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace qka {

std::string_view adversary_name(AdversaryKind kind) {
    switch (kind) {
        case AdversaryKind::None:
            return "none";
        case AdversaryKind::InterceptResendZ:
            return "intercept-z";
        case AdversaryKind::InterceptResendBell:
            return "intercept-bell";
        case AdversaryKind::DishonestAliceEarlyMeasure:
            return "dishonest-alice";
        case AdversaryKind::DishonestBobReorder:
            return "dishonest-bob";
    }
    throw std::invalid_argument("bad AdversaryKind");
}

void AdversaryModel::validate(size_t key_bits) const {
    if (!(attack_fraction >= 0.0 && attack_fraction <= 1.0)) {
        throw std::invalid_argument("attack fraction must lie in [0, 1]");
    }
    if (kind == AdversaryKind::DishonestBobReorder) {
        if (swap_count % 2 != 0) {
            throw std::invalid_argument("swap count must be even");
        }
        if (swap_count > key_bits) {
            throw std::invalid_argument("swap count cannot exceed the key length");
        }
    }
}

size_t attack_transit(const AdversaryModel &model, QubitStore &store, TravelSequence &seq, Rng &rng) {
    switch (model.kind) {
        case AdversaryKind::None:
            return 0;
        case AdversaryKind::InterceptResendZ: {
            size_t touched = 0;
            for (auto &slot : seq.slots) {
                if (!rng.bernoulli(model.attack_fraction)) {
                    continue;
                }
                bool bit = store.measure_z(slot, rng);
                slot = store.new_basis_qubit(bit);
                touched++;
            }
            return touched;
        }
        case AdversaryKind::InterceptResendBell: {
            size_t touched = 0;
            for (size_t k = 0; k + 1 < seq.slots.size(); k += 2) {
                if (!rng.bernoulli(model.attack_fraction)) {
                    continue;
                }
                BellOutcome seen = store.measure_bell(seq.slots[k], seq.slots[k + 1], rng);
                auto [a, b] = store.new_bell(seen);
                seq.slots[k] = a;
                seq.slots[k + 1] = b;
                touched += 2;
            }
            return touched;
        }
        case AdversaryKind::DishonestAliceEarlyMeasure:
        case AdversaryKind::DishonestBobReorder:
            break;
    }
    throw std::invalid_argument(std::string(adversary_name(model.kind)) + " is not a channel attack");
}

std::vector<std::pair<size_t, size_t>> choose_swap_pairs(size_t message_count, size_t swap_count, Rng &rng) {
    if (swap_count % 2 != 0 || swap_count > message_count) {
        throw std::invalid_argument("swap count must be even and at most the message count");
    }
    if (swap_count == 0) {
        return {};
    }
    std::vector<size_t> positions(message_count);
    std::iota(positions.begin(), positions.end(), size_t{0});
    rng.shuffle(std::span<size_t>(positions));
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t k = 0; k < swap_count; k += 2) {
        pairs.emplace_back(positions[k], positions[k + 1]);
    }
    return pairs;
}

std::vector<size_t> dishonest_bob_reorder(
    std::span<const size_t> true_order, std::span<const std::pair<size_t, size_t>> swap_pairs) {
    std::vector<size_t> order(true_order.begin(), true_order.end());
    std::set<size_t> used;
    for (auto [i, j] : swap_pairs) {
        if (i >= order.size() || j >= order.size()) {
            throw std::invalid_argument("swap position out of range");
        }
        if (i == j) {
            throw std::invalid_argument("a position cannot be swapped with itself");
        }
        if (!used.insert(i).second || !used.insert(j).second) {
            throw std::invalid_argument("swap positions must be distinct");
        }
        std::swap(order[i], order[j]);
    }
    return order;
}

EarlyMeasureReport dishonest_alice_early_measure(
    QubitStore &store,
    std::span<const QubitId> home,
    std::span<const QubitId> message_qubits_unordered,
    std::span<const QubitId> true_order,
    const KeyBits &bob_key,
    Rng &rng) {
    const size_t n = home.size();
    if (message_qubits_unordered.size() != n || true_order.size() != n || bob_key.size() != n) {
        throw std::invalid_argument("early measurement needs one message qubit and key bit per home qubit");
    }
    std::vector<QubitId> guess(message_qubits_unordered.begin(), message_qubits_unordered.end());
    rng.shuffle(std::span<QubitId>(guess));

    EarlyMeasureReport report;
    std::vector<uint8_t> bits(n);
    size_t correct = 0;
    size_t wrong_pair_total = 0;
    size_t wrong_pair_correct = 0;
    for (size_t i = 0; i < n; i++) {
        BellOutcome o = store.measure_bell(home[i], guess[i], rng);
        bits[i] = decode_bell_outcome(o).first;
        bool hit = bits[i] == bob_key[i];
        correct += hit;
        if (guess[i] == true_order[i]) {
            report.correctly_paired++;
        } else {
            wrong_pair_total++;
            wrong_pair_correct += hit;
        }
    }
    report.guessed_bits = KeyBits(std::move(bits));
    report.accuracy = n ? static_cast<double>(correct) / static_cast<double>(n) : 0.0;
    report.wrong_pair_accuracy = wrong_pair_total
                                     ? static_cast<double>(wrong_pair_correct) / static_cast<double>(wrong_pair_total)
                                     : std::numeric_limits<double>::quiet_NaN();
    return report;
}

}  // namespace qka
