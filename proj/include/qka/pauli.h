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

#ifndef QKA_PAULI_H
#define QKA_PAULI_H

#include <array>
#include <compare>
#include <initializer_list>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qka {

/// Letters of the phase-free Pauli group {I, X, iY, Z}.
///
/// Global phase is quotiented out, so Y here always stands for iY (the real
/// matrix [[0, 1], [-1, 0]]). Enumerator order is the canonical element order
/// I < X < iY < Z.
enum class PauliLetter : uint8_t {
    I = 0,
    X = 1,
    Y = 2,
    Z = 3,
};

inline constexpr std::array<PauliLetter, 4> kAllLetters = {
    PauliLetter::I, PauliLetter::X, PauliLetter::Y, PauliLetter::Z};

/// Phase-free product of two letters.
PauliLetter mul(PauliLetter a, PauliLetter b);

/// Text form used in transcripts: "I", "X", "Y*" (for iY), "Z".
std::string_view letter_name(PauliLetter letter);

/// A phase-free multi-qubit Pauli word. Letter k acts on target k.
class GroupElement {
   public:
    GroupElement() = default;
    explicit GroupElement(std::vector<PauliLetter> letters);
    GroupElement(std::initializer_list<PauliLetter> letters) : GroupElement(std::vector<PauliLetter>(letters)) {
    }

    static GroupElement identity(size_t arity);

    /// Parses the transcript grammar: a nonempty concatenation of the tokens
    /// "I", "X", "Y*", "Z". Throws std::invalid_argument otherwise.
    static GroupElement parse(std::string_view text);

    size_t arity() const {
        return letters_.size();
    }
    std::span<const PauliLetter> letters() const {
        return letters_;
    }
    PauliLetter operator[](size_t k) const {
        return letters_[k];
    }
    bool is_identity() const;
    std::string str() const;

    // Lexicographic over letters, which gives the canonical set ordering.
    friend auto operator<=>(const GroupElement &, const GroupElement &) = default;
    friend bool operator==(const GroupElement &, const GroupElement &) = default;

   private:
    std::vector<PauliLetter> letters_;
};

/// Letter-wise phase-free product. Throws std::invalid_argument on arity mismatch.
GroupElement mul(const GroupElement &a, const GroupElement &b);

/// Concatenation a ⊗ b.
GroupElement tensor(const GroupElement &a, const GroupElement &b);

/// All 4^arity words in canonical order (G1 for arity 1, G2 for arity 2, ...).
std::vector<GroupElement> pauli_group(size_t arity);

struct Subgroup {
    std::string name;
    std::set<GroupElement> elements;

    size_t arity() const;
    size_t order() const {
        return elements.size();
    }
};

/// Builds a subgroup, checking that it contains the identity, is closed under
/// mul, has uniform arity and power-of-two order.
Subgroup make_subgroup(std::string name, std::vector<GroupElement> elements);

/// g1..g6 of the two-qubit group, in order:
/// {II,IX}, {II,XI}, {II,IZ}, {II,ZI}, {II,IY*}, {II,Y*I}.
std::vector<Subgroup> standard_subgroups_g2();

/// All ordered products with one factor drawn from each subgroup, deduplicated.
std::set<GroupElement> product_set(std::span<const Subgroup> subgroups);

/// True iff the intersection is exactly the identity word.
bool check_disjoint(const Subgroup &a, const Subgroup &b);

/// Splits u into one factor per subgroup, returning the canonical index of each
/// factor within its subgroup. Requires the decomposition to be unique; throws
/// std::invalid_argument when u has no decomposition or more than one.
std::vector<size_t> factorize(const GroupElement &u, std::span<const Subgroup> subgroups);

}  // namespace qka

#endif
