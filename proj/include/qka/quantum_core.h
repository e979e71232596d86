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

#ifndef QKA_QUANTUM_CORE_H
#define QKA_QUANTUM_CORE_H

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qka/pauli.h"
#include "qka/rng.h"

namespace qka {

using Amplitude = std::complex<double>;

inline constexpr size_t kMaxRegisterQubits = 12;
inline constexpr double kAmplitudeTolerance = 1e-10;

struct QubitId {
    uint64_t value = 0;

    friend auto operator<=>(const QubitId &, const QubitId &) = default;
};

/// Bell basis with the convention
///   |psi±> = (|00> ± |11>)/√2,   |phi±> = (|01> ± |10>)/√2.
/// Enumerator order is also the order in which outcomes are sampled.
enum class BellOutcome : uint8_t {
    PsiPlus = 0,
    PsiMinus = 1,
    PhiPlus = 2,
    PhiMinus = 3,
};

inline constexpr std::array<BellOutcome, 4> kAllBellOutcomes = {
    BellOutcome::PsiPlus, BellOutcome::PsiMinus, BellOutcome::PhiPlus, BellOutcome::PhiMinus};

std::string_view bell_name(BellOutcome outcome);

/// Amplitudes over |00>, |01>, |10>, |11>.
std::array<Amplitude, 4> bell_amplitudes(BellOutcome outcome);

/// The four Bell vectors in BellOutcome order, as a measurement basis.
std::vector<std::vector<Amplitude>> bell_basis();

enum class FourQubitState : uint8_t {
    Omega,    // (|0000> + |0110> + |1001> - |1111>)/2
    Cluster,  // (|0000> + |0011> + |1100> - |1111>)/2
};

std::array<Amplitude, 16> four_qubit_amplitudes(FourQubitState which);

/// A pure state over an ordered list of qubits.
///
/// Basis index bit order: the first listed qubit is the most significant bit,
/// so for qubits (a, b) the amplitude of |a=1, b=0> sits at index 2.
class StateRegister {
   public:
    /// Validates dimensions, distinct qubits, the 12-qubit cap and unit norm.
    StateRegister(std::vector<QubitId> qubits, std::vector<Amplitude> amplitudes);

    static StateRegister bell(BellOutcome kind, QubitId first, QubitId second);
    static StateRegister four_qubit(FourQubitState which, std::array<QubitId, 4> qubits);
    static StateRegister basis_state(QubitId qubit, bool bit);

    size_t num_qubits() const {
        return qubits_.size();
    }
    std::span<const QubitId> qubits() const {
        return qubits_;
    }
    std::span<const Amplitude> amplitudes() const {
        return amplitudes_;
    }
    std::optional<size_t> position_of(QubitId q) const;
    double norm_squared() const;

    void apply_letter(size_t position, PauliLetter letter);
    /// Applies element letter k to targets[k]. All targets must be in this register.
    void apply(const GroupElement &element, std::span<const QubitId> targets);

    /// Same state with the qubit list permuted into `order`.
    StateRegister reordered(std::span<const QubitId> order) const;

    friend StateRegister tensor_product(const StateRegister &a, const StateRegister &b);
    friend bool operator==(const StateRegister &, const StateRegister &) = default;

   private:
    StateRegister() = default;
    size_t bit_of(size_t position) const {
        return qubits_.size() - 1 - position;
    }

    std::vector<QubitId> qubits_;
    std::vector<Amplitude> amplitudes_;
};

/// <a|b>. Throws std::invalid_argument if the dimensions differ.
Amplitude inner_product(const StateRegister &a, const StateRegister &b);

/// Owns every tracked qubit of one protocol run.
///
/// Registers are kept as small as possible and only merged when a joint
/// measurement spans more than one of them. Measured qubits are retired and
/// their ids are never handed out again.
class QubitStore {
   public:
    std::pair<QubitId, QubitId> new_bell(BellOutcome kind);
    std::array<QubitId, 4> new_four_qubit(FourQubitState which);
    QubitId new_basis_qubit(bool bit);

    void apply_pauli(const GroupElement &element, std::span<const QubitId> targets);

    BellOutcome measure_bell(QubitId a, QubitId b, Rng &rng);
    bool measure_z(QubitId q, Rng &rng);

    /// Projective measurement of `qubits` onto the orthonormal vectors in
    /// `basis` (each over the listed qubits, first listed = most significant).
    /// Returns the index of the sampled vector.
    size_t measure_in_basis(std::span<const QubitId> qubits, std::span<const std::vector<Amplitude>> basis, Rng &rng);

    /// Born probabilities measure_in_basis would sample from. Does not modify
    /// the store.
    std::vector<double> outcome_probabilities(
        std::span<const QubitId> qubits, std::span<const std::vector<Amplitude>> basis) const;

    bool is_tracked(QubitId q) const;
    bool is_retired(QubitId q) const;
    const StateRegister &register_of(QubitId q) const;
    /// The register holding exactly `order`, reordered to match it.
    StateRegister snapshot(std::span<const QubitId> order) const;

    size_t tracked_count() const {
        return locations_.size();
    }
    size_t register_count() const {
        return registers_.size();
    }

    friend bool operator==(const QubitStore &, const QubitStore &) = default;

   private:
    struct Location {
        uint64_t handle;
        size_t position;
        friend bool operator==(const Location &, const Location &) = default;
    };

    QubitId fresh_id() {
        return QubitId{next_qubit_++};
    }
    uint64_t add_register(StateRegister reg);
    void reindex(uint64_t handle);
    uint64_t merge(uint64_t a, uint64_t b);
    const Location &locate(QubitId q) const;

    uint64_t next_qubit_ = 0;
    uint64_t next_handle_ = 0;
    std::map<uint64_t, StateRegister> registers_;
    std::map<uint64_t, Location> locations_;
};

}  // namespace qka

#endif
