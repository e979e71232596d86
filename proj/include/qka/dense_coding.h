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

#ifndef QKA_DENSE_CODING_H
#define QKA_DENSE_CODING_H

#include <cstddef>
#include <span>
#include <vector>

#include "qka/pauli.h"
#include "qka/quantum_core.h"

namespace qka {

/// {U|state> : U in group}, with U acting on `targets`, in group order.
std::vector<StateRegister> encoded_states(
    const StateRegister &state, std::span<const QubitId> targets, std::span<const GroupElement> group);

/// True iff the encoded states are pairwise orthogonal within 1e-10.
bool dense_coding_orthogonal(
    const StateRegister &state, std::span<const QubitId> targets, std::span<const GroupElement> group);

/// The unique group element U with U|initial> = |final> up to global phase.
/// Throws std::invalid_argument if no element (or more than one) matches.
GroupElement decode_operator(
    const StateRegister &initial,
    std::span<const QubitId> targets,
    const StateRegister &final_state,
    std::span<const GroupElement> group);

/// Index form: a measurement in the basis {U_k|initial>} returned k.
GroupElement decode_operator(std::span<const GroupElement> group, size_t outcome_index);

/// Parameters of an (m+1)-party encoding: N qubits per carrier state, x of
/// which travel, y key bits per party per round, m rounds.
struct EncodingScheme {
    size_t total_qubits = 0;
    size_t travel_qubits = 0;
    size_t bits_per_round = 0;
    size_t rounds = 0;
    std::vector<Subgroup> round_subgroups;
};

/// Checks pairwise disjointness, (2^y)^m distinct products, and orthogonality
/// of the product set on `travel_targets`. Structural problems (wrong counts,
/// N <= x, x < y, subgroup arity != x, subgroup order != 2^y) throw
/// std::invalid_argument; a well-formed scheme that fails a check returns false.
bool validate_scheme(const EncodingScheme &scheme, const StateRegister &state, std::span<const QubitId> travel_targets);

}  // namespace qka

#endif
