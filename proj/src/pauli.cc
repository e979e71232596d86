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

#include "qka/pauli.h"

#include <map>
#include <stdexcept>

namespace qka {

namespace {

// Row = left factor, column = right factor, both in I, X, Y*, Z order.
constexpr PauliLetter kI = PauliLetter::I;
constexpr PauliLetter kX = PauliLetter::X;
constexpr PauliLetter kY = PauliLetter::Y;
constexpr PauliLetter kZ = PauliLetter::Z;
constexpr PauliLetter kMulTable[4][4] = {
    {kI, kX, kY, kZ},
    {kX, kI, kZ, kY},
    {kY, kZ, kI, kX},
    {kZ, kY, kX, kI},
};

bool is_power_of_two(size_t n) {
    return n != 0 && (n & (n - 1)) == 0;
}

}  // namespace

PauliLetter mul(PauliLetter a, PauliLetter b) {
    return kMulTable[static_cast<int>(a)][static_cast<int>(b)];
}

std::string_view letter_name(PauliLetter letter) {
    switch (letter) {
        case PauliLetter::I:
            return "I";
        case PauliLetter::X:
            return "X";
        case PauliLetter::Y:
            return "Y*";
        case PauliLetter::Z:
            return "Z";
    }
    throw std::invalid_argument("bad PauliLetter");
}

GroupElement::GroupElement(std::vector<PauliLetter> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) {
        throw std::invalid_argument("group element needs at least one letter");
    }
}

GroupElement GroupElement::identity(size_t arity) {
    return GroupElement(std::vector<PauliLetter>(arity, PauliLetter::I));
}

GroupElement GroupElement::parse(std::string_view text) {
    std::vector<PauliLetter> letters;
    for (size_t k = 0; k < text.size(); k++) {
        switch (text[k]) {
            case 'I':
                letters.push_back(PauliLetter::I);
                break;
            case 'X':
                letters.push_back(PauliLetter::X);
                break;
            case 'Z':
                letters.push_back(PauliLetter::Z);
                break;
            case 'Y':
                if (k + 1 >= text.size() || text[k + 1] != '*') {
                    throw std::invalid_argument("bare 'Y' in group element; the phase-free letter is written 'Y*'");
                }
                letters.push_back(PauliLetter::Y);
                k++;
                break;
            default:
                throw std::invalid_argument("unexpected character in group element: '" + std::string(text) + "'");
        }
    }
    return GroupElement(std::move(letters));
}

bool GroupElement::is_identity() const {
    for (auto l : letters_) {
        if (l != PauliLetter::I) {
            return false;
        }
    }
    return true;
}

std::string GroupElement::str() const {
    std::string out;
    for (auto l : letters_) {
        out += letter_name(l);
    }
    return out;
}

GroupElement mul(const GroupElement &a, const GroupElement &b) {
    if (a.arity() != b.arity()) {
        throw std::invalid_argument("cannot multiply " + a.str() + " and " + b.str() + ": arity mismatch");
    }
    std::vector<PauliLetter> out(a.arity());
    for (size_t k = 0; k < a.arity(); k++) {
        out[k] = mul(a[k], b[k]);
    }
    return GroupElement(std::move(out));
}

GroupElement tensor(const GroupElement &a, const GroupElement &b) {
    std::vector<PauliLetter> out(a.letters().begin(), a.letters().end());
    out.insert(out.end(), b.letters().begin(), b.letters().end());
    return GroupElement(std::move(out));
}

std::vector<GroupElement> pauli_group(size_t arity) {
    if (arity == 0) {
        throw std::invalid_argument("group arity must be positive");
    }
    std::vector<GroupElement> out;
    for (auto l : kAllLetters) {
        out.push_back(GroupElement{l});
    }
    for (size_t k = 1; k < arity; k++) {
        std::vector<GroupElement> next;
        for (const auto &g : out) {
            for (auto l : kAllLetters) {
                next.push_back(tensor(g, GroupElement{l}));
            }
        }
        out = std::move(next);
    }
    return out;
}

size_t Subgroup::arity() const {
    return elements.empty() ? 0 : elements.begin()->arity();
}

Subgroup make_subgroup(std::string name, std::vector<GroupElement> elements) {
    Subgroup g{std::move(name), {elements.begin(), elements.end()}};
    if (g.elements.empty()) {
        throw std::invalid_argument("subgroup " + g.name + " is empty");
    }
    size_t arity = g.arity();
    for (const auto &e : g.elements) {
        if (e.arity() != arity) {
            throw std::invalid_argument("subgroup " + g.name + " mixes arities");
        }
    }
    if (!g.elements.count(GroupElement::identity(arity))) {
        throw std::invalid_argument("subgroup " + g.name + " lacks the identity");
    }
    for (const auto &a : g.elements) {
        for (const auto &b : g.elements) {
            if (!g.elements.count(mul(a, b))) {
                throw std::invalid_argument("subgroup " + g.name + " is not closed under multiplication");
            }
        }
    }
    if (!is_power_of_two(g.order())) {
        throw std::invalid_argument("subgroup " + g.name + " order is not a power of two");
    }
    return g;
}

std::vector<Subgroup> standard_subgroups_g2() {
    using L = PauliLetter;
    const GroupElement ii{L::I, L::I};
    return {
        make_subgroup("g1", {ii, GroupElement{L::I, L::X}}),
        make_subgroup("g2", {ii, GroupElement{L::X, L::I}}),
        make_subgroup("g3", {ii, GroupElement{L::I, L::Z}}),
        make_subgroup("g4", {ii, GroupElement{L::Z, L::I}}),
        make_subgroup("g5", {ii, GroupElement{L::I, L::Y}}),
        make_subgroup("g6", {ii, GroupElement{L::Y, L::I}}),
    };
}

std::set<GroupElement> product_set(std::span<const Subgroup> subgroups) {
    if (subgroups.empty()) {
        throw std::invalid_argument("product_set needs at least one subgroup");
    }
    std::set<GroupElement> acc = subgroups[0].elements;
    for (size_t k = 1; k < subgroups.size(); k++) {
        std::set<GroupElement> next;
        for (const auto &a : acc) {
            for (const auto &b : subgroups[k].elements) {
                next.insert(mul(a, b));
            }
        }
        acc = std::move(next);
    }
    return acc;
}

bool check_disjoint(const Subgroup &a, const Subgroup &b) {
    if (a.arity() != b.arity()) {
        throw std::invalid_argument("cannot intersect subgroups of different arity");
    }
    for (const auto &e : a.elements) {
        if (!e.is_identity() && b.elements.count(e)) {
            return false;
        }
    }
    return a.elements.count(GroupElement::identity(a.arity())) && b.elements.count(GroupElement::identity(b.arity()));
}

std::vector<size_t> factorize(const GroupElement &u, std::span<const Subgroup> subgroups) {
    if (subgroups.empty()) {
        throw std::invalid_argument("factorize needs at least one subgroup");
    }
    // Enumerate every choice of factors; the product must hit u exactly once.
    std::vector<std::vector<GroupElement>> members;
    for (const auto &g : subgroups) {
        members.emplace_back(g.elements.begin(), g.elements.end());
    }
    std::vector<size_t> choice(subgroups.size(), 0);
    std::vector<size_t> found;
    size_t hits = 0;
    while (true) {
        GroupElement product = members[0][choice[0]];
        for (size_t k = 1; k < members.size(); k++) {
            product = mul(product, members[k][choice[k]]);
        }
        if (product == u) {
            hits++;
            found = choice;
        }
        size_t k = 0;
        while (k < choice.size() && ++choice[k] == members[k].size()) {
            choice[k] = 0;
            k++;
        }
        if (k == choice.size()) {
            break;
        }
    }
    if (hits != 1) {
        throw std::invalid_argument(
            u.str() + (hits == 0 ? " is not a product of the given subgroups" : " has more than one factorization"));
    }
    return found;
}

}  // namespace qka
