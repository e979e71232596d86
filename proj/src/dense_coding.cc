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

#include "qka/dense_coding.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qka {

std::vector<StateRegister> encoded_states(
    const StateRegister &state, std::span<const QubitId> targets, std::span<const GroupElement> group) {
    std::vector<StateRegister> out;
    out.reserve(group.size());
    for (const auto &u : group) {
        if (u.arity() != targets.size()) {
            throw std::invalid_argument("group element " + u.str() + " does not match the target count");
        }
        StateRegister s = state;
        s.apply(u, targets);
        out.push_back(std::move(s));
    }
    return out;
}

bool dense_coding_orthogonal(
    const StateRegister &state, std::span<const QubitId> targets, std::span<const GroupElement> group) {
    auto states = encoded_states(state, targets, group);
    for (size_t i = 0; i < states.size(); i++) {
        for (size_t j = i + 1; j < states.size(); j++) {
            if (std::abs(inner_product(states[i], states[j])) > kAmplitudeTolerance) {
                return false;
            }
        }
    }
    return true;
}

GroupElement decode_operator(
    const StateRegister &initial,
    std::span<const QubitId> targets,
    const StateRegister &final_state,
    std::span<const GroupElement> group) {
    const GroupElement *match = nullptr;
    for (const auto &u : group) {
        StateRegister s = initial;
        s.apply(u, targets);
        if (std::abs(std::abs(inner_product(final_state, s)) - 1.0) <= kAmplitudeTolerance) {
            if (match) {
                throw std::invalid_argument("final state matches more than one group element");
            }
            match = &u;
        }
    }
    if (!match) {
        throw std::invalid_argument("final state is not in the basis generated by the group");
    }
    return *match;
}

GroupElement decode_operator(std::span<const GroupElement> group, size_t outcome_index) {
    if (outcome_index >= group.size()) {
        throw std::invalid_argument(
            "outcome " + std::to_string(outcome_index) + " is outside a basis of " + std::to_string(group.size()));
    }
    return group[outcome_index];
}

bool validate_scheme(const EncodingScheme &scheme, const StateRegister &state, std::span<const QubitId> travel_targets) {
    const auto &s = scheme;
    if (s.total_qubits == 0 || s.travel_qubits == 0 || s.bits_per_round == 0 || s.rounds == 0) {
        throw std::invalid_argument("encoding scheme parameters must be positive");
    }
    if (!(s.total_qubits > s.travel_qubits && s.travel_qubits >= s.bits_per_round)) {
        throw std::invalid_argument("encoding scheme needs N > x >= y");
    }
    if (s.round_subgroups.size() != s.rounds) {
        throw std::invalid_argument("encoding scheme lists the wrong number of round subgroups");
    }
    if (state.num_qubits() != s.total_qubits) {
        throw std::invalid_argument("carrier state does not have N qubits");
    }
    if (travel_targets.size() != s.travel_qubits) {
        throw std::invalid_argument("travel target list does not have x entries");
    }
    if (s.bits_per_round >= 8 * sizeof(size_t) / s.rounds) {
        throw std::invalid_argument("encoding scheme is too large to enumerate");
    }
    const size_t round_order = size_t{1} << s.bits_per_round;
    for (const auto &g : s.round_subgroups) {
        if (g.arity() != s.travel_qubits) {
            throw std::invalid_argument("subgroup " + g.name + " does not act on x qubits");
        }
        if (g.order() != round_order) {
            throw std::invalid_argument("subgroup " + g.name + " does not have 2^y elements");
        }
    }

    for (size_t i = 0; i < s.rounds; i++) {
        for (size_t j = i + 1; j < s.rounds; j++) {
            if (!check_disjoint(s.round_subgroups[i], s.round_subgroups[j])) {
                return false;
            }
        }
    }
    auto products = product_set(s.round_subgroups);
    size_t expected = 1;
    for (size_t k = 0; k < s.rounds; k++) {
        expected *= round_order;
    }
    if (products.size() != expected) {
        return false;
    }
    std::vector<GroupElement> ordered(products.begin(), products.end());
    return dense_coding_orthogonal(state, travel_targets, ordered);
}

}  // namespace qka
