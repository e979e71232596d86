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

#include "qka/quantum_core.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>

namespace qka {

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

void require_finite(const Amplitude &a) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
        throw std::invalid_argument("amplitude is not finite");
    }
}

std::string qubit_label(QubitId q) {
    return "qubit " + std::to_string(q.value);
}

}  // namespace

std::string_view bell_name(BellOutcome outcome) {
    switch (outcome) {
        case BellOutcome::PsiPlus:
            return "psi+";
        case BellOutcome::PsiMinus:
            return "psi-";
        case BellOutcome::PhiPlus:
            return "phi+";
        case BellOutcome::PhiMinus:
            return "phi-";
    }
    throw std::invalid_argument("bad BellOutcome");
}

std::array<Amplitude, 4> bell_amplitudes(BellOutcome outcome) {
    const double h = kInvSqrt2;
    switch (outcome) {
        case BellOutcome::PsiPlus:
            return {h, 0, 0, h};
        case BellOutcome::PsiMinus:
            return {h, 0, 0, -h};
        case BellOutcome::PhiPlus:
            return {0, h, h, 0};
        case BellOutcome::PhiMinus:
            return {0, h, -h, 0};
    }
    throw std::invalid_argument("bad BellOutcome");
}

std::vector<std::vector<Amplitude>> bell_basis() {
    std::vector<std::vector<Amplitude>> basis;
    for (auto kind : kAllBellOutcomes) {
        auto amps = bell_amplitudes(kind);
        basis.emplace_back(amps.begin(), amps.end());
    }
    return basis;
}

std::array<Amplitude, 16> four_qubit_amplitudes(FourQubitState which) {
    std::array<Amplitude, 16> a{};
    switch (which) {
        case FourQubitState::Omega:
            a[0b0000] = 0.5;
            a[0b0110] = 0.5;
            a[0b1001] = 0.5;
            a[0b1111] = -0.5;
            return a;
        case FourQubitState::Cluster:
            a[0b0000] = 0.5;
            a[0b0011] = 0.5;
            a[0b1100] = 0.5;
            a[0b1111] = -0.5;
            return a;
    }
    throw std::invalid_argument("bad FourQubitState");
}

StateRegister::StateRegister(std::vector<QubitId> qubits, std::vector<Amplitude> amplitudes)
    : qubits_(std::move(qubits)), amplitudes_(std::move(amplitudes)) {
    if (qubits_.empty() || qubits_.size() > kMaxRegisterQubits) {
        throw std::invalid_argument(
            "register must hold between 1 and " + std::to_string(kMaxRegisterQubits) + " qubits, got " +
            std::to_string(qubits_.size()));
    }
    if (amplitudes_.size() != (size_t{1} << qubits_.size())) {
        throw std::invalid_argument("amplitude count does not match 2^qubits");
    }
    std::set<QubitId> seen(qubits_.begin(), qubits_.end());
    if (seen.size() != qubits_.size()) {
        throw std::invalid_argument("duplicate qubit in register");
    }
    for (const auto &a : amplitudes_) {
        require_finite(a);
    }
    if (std::abs(norm_squared() - 1.0) > kAmplitudeTolerance) {
        throw std::invalid_argument("register is not normalized");
    }
}

StateRegister StateRegister::bell(BellOutcome kind, QubitId first, QubitId second) {
    auto a = bell_amplitudes(kind);
    return StateRegister({first, second}, {a.begin(), a.end()});
}

StateRegister StateRegister::four_qubit(FourQubitState which, std::array<QubitId, 4> qubits) {
    auto a = four_qubit_amplitudes(which);
    return StateRegister({qubits.begin(), qubits.end()}, {a.begin(), a.end()});
}

StateRegister StateRegister::basis_state(QubitId qubit, bool bit) {
    std::vector<Amplitude> a(2);
    a[bit ? 1 : 0] = 1.0;
    return StateRegister({qubit}, std::move(a));
}

std::optional<size_t> StateRegister::position_of(QubitId q) const {
    auto it = std::find(qubits_.begin(), qubits_.end(), q);
    if (it == qubits_.end()) {
        return std::nullopt;
    }
    return static_cast<size_t>(it - qubits_.begin());
}

double StateRegister::norm_squared() const {
    double total = 0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

void StateRegister::apply_letter(size_t position, PauliLetter letter) {
    if (position >= qubits_.size()) {
        throw std::out_of_range("qubit position out of range");
    }
    const size_t mask = size_t{1} << bit_of(position);
    const size_t dim = amplitudes_.size();
    switch (letter) {
        case PauliLetter::I:
            return;
        case PauliLetter::X:
            for (size_t k = 0; k < dim; k++) {
                if (!(k & mask)) {
                    std::swap(amplitudes_[k], amplitudes_[k | mask]);
                }
            }
            return;
        case PauliLetter::Z:
            for (size_t k = 0; k < dim; k++) {
                if (k & mask) {
                    amplitudes_[k] = -amplitudes_[k];
                }
            }
            return;
        case PauliLetter::Y:
            // iY = [[0, 1], [-1, 0]]: |0> -> -|1>, |1> -> |0>.
            for (size_t k = 0; k < dim; k++) {
                if (!(k & mask)) {
                    Amplitude zero = amplitudes_[k];
                    amplitudes_[k] = amplitudes_[k | mask];
                    amplitudes_[k | mask] = -zero;
                }
            }
            return;
    }
}

void StateRegister::apply(const GroupElement &element, std::span<const QubitId> targets) {
    if (element.arity() != targets.size()) {
        throw std::invalid_argument("element arity does not match target count");
    }
    for (size_t k = 0; k < targets.size(); k++) {
        auto pos = position_of(targets[k]);
        if (!pos) {
            throw std::invalid_argument(qubit_label(targets[k]) + " is not in this register");
        }
        apply_letter(*pos, element[k]);
    }
}

StateRegister StateRegister::reordered(std::span<const QubitId> order) const {
    if (order.size() != qubits_.size()) {
        throw std::invalid_argument("reorder list has the wrong length");
    }
    const size_t k = qubits_.size();
    // src_bit[j]: bit index in this register of the qubit placed at position j.
    std::vector<size_t> src_bit(k);
    std::set<QubitId> seen;
    for (size_t j = 0; j < k; j++) {
        auto pos = position_of(order[j]);
        if (!pos || !seen.insert(order[j]).second) {
            throw std::invalid_argument("reorder list is not a permutation of the register");
        }
        src_bit[j] = bit_of(*pos);
    }
    StateRegister out;
    out.qubits_.assign(order.begin(), order.end());
    out.amplitudes_.resize(amplitudes_.size());
    for (size_t idx = 0; idx < amplitudes_.size(); idx++) {
        size_t src = 0;
        for (size_t j = 0; j < k; j++) {
            if (idx & (size_t{1} << (k - 1 - j))) {
                src |= size_t{1} << src_bit[j];
            }
        }
        out.amplitudes_[idx] = amplitudes_[src];
    }
    return out;
}

StateRegister tensor_product(const StateRegister &a, const StateRegister &b) {
    if (a.num_qubits() + b.num_qubits() > kMaxRegisterQubits) {
        throw std::length_error(
            "merge would exceed the " + std::to_string(kMaxRegisterQubits) + "-qubit register cap");
    }
    StateRegister out;
    out.qubits_ = a.qubits_;
    out.qubits_.insert(out.qubits_.end(), b.qubits_.begin(), b.qubits_.end());
    std::set<QubitId> seen(out.qubits_.begin(), out.qubits_.end());
    if (seen.size() != out.qubits_.size()) {
        throw std::invalid_argument("tensor product of overlapping registers");
    }
    out.amplitudes_.reserve(a.amplitudes_.size() * b.amplitudes_.size());
    for (const auto &x : a.amplitudes_) {
        for (const auto &y : b.amplitudes_) {
            out.amplitudes_.push_back(x * y);
        }
    }
    return out;
}

Amplitude inner_product(const StateRegister &a, const StateRegister &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("inner product of registers with different qubit counts");
    }
    Amplitude total = 0;
    auto x = a.amplitudes();
    auto y = b.amplitudes();
    for (size_t k = 0; k < x.size(); k++) {
        total += std::conj(x[k]) * y[k];
    }
    return total;
}

std::pair<QubitId, QubitId> QubitStore::new_bell(BellOutcome kind) {
    QubitId a = fresh_id();
    QubitId b = fresh_id();
    add_register(StateRegister::bell(kind, a, b));
    return {a, b};
}

std::array<QubitId, 4> QubitStore::new_four_qubit(FourQubitState which) {
    std::array<QubitId, 4> ids{fresh_id(), fresh_id(), fresh_id(), fresh_id()};
    add_register(StateRegister::four_qubit(which, ids));
    return ids;
}

QubitId QubitStore::new_basis_qubit(bool bit) {
    QubitId q = fresh_id();
    add_register(StateRegister::basis_state(q, bit));
    return q;
}

void QubitStore::apply_pauli(const GroupElement &element, std::span<const QubitId> targets) {
    if (element.arity() != targets.size()) {
        throw std::invalid_argument("element arity does not match target count");
    }
    // Validate everything before touching any register.
    for (const auto &q : targets) {
        locate(q);
    }
    for (size_t k = 0; k < targets.size(); k++) {
        const Location &loc = locate(targets[k]);
        registers_.at(loc.handle).apply_letter(loc.position, element[k]);
    }
}

BellOutcome QubitStore::measure_bell(QubitId a, QubitId b, Rng &rng) {
    if (a == b) {
        throw std::invalid_argument("Bell measurement needs two distinct qubits");
    }
    static const auto basis = bell_basis();
    std::array<QubitId, 2> pair{a, b};
    return static_cast<BellOutcome>(measure_in_basis(pair, basis, rng));
}

bool QubitStore::measure_z(QubitId q, Rng &rng) {
    static const std::vector<std::vector<Amplitude>> basis = {{1.0, 0.0}, {0.0, 1.0}};
    std::array<QubitId, 1> one{q};
    return measure_in_basis(one, basis, rng) == 1;
}

namespace {

struct Projection {
    std::vector<QubitId> rest;
    std::vector<std::vector<Amplitude>> branches;  // unnormalized, one per basis vector
    std::vector<double> probabilities;
};

void check_basis(std::span<const QubitId> qubits, std::span<const std::vector<Amplitude>> basis) {
    if (qubits.empty()) {
        throw std::invalid_argument("nothing to measure");
    }
    std::set<QubitId> distinct(qubits.begin(), qubits.end());
    if (distinct.size() != qubits.size()) {
        throw std::invalid_argument("measured qubits must be distinct");
    }
    if (basis.empty()) {
        throw std::invalid_argument("empty measurement basis");
    }
    const size_t sub_dim = size_t{1} << qubits.size();
    for (const auto &v : basis) {
        if (v.size() != sub_dim) {
            throw std::invalid_argument("basis vector dimension does not match measured qubits");
        }
    }
}

Projection project(const StateRegister &reg, std::span<const QubitId> qubits, std::span<const std::vector<Amplitude>> basis) {
    const size_t m = qubits.size();
    const size_t sub_dim = size_t{1} << m;
    const size_t k = reg.num_qubits();
    std::vector<size_t> measured_bits(m);
    for (size_t j = 0; j < m; j++) {
        measured_bits[j] = k - 1 - *reg.position_of(qubits[j]);
    }
    Projection out;
    std::vector<size_t> rest_bits;
    for (size_t p = 0; p < k; p++) {
        QubitId q = reg.qubits()[p];
        if (std::find(qubits.begin(), qubits.end(), q) == qubits.end()) {
            out.rest.push_back(q);
            rest_bits.push_back(k - 1 - p);
        }
    }
    const size_t rest_count = out.rest.size();
    const size_t rest_dim = size_t{1} << rest_count;

    // full_index[s * rest_dim + r]: register basis index for measured pattern s
    // and remaining pattern r.
    std::vector<size_t> full_index(sub_dim * rest_dim);
    for (size_t s = 0; s < sub_dim; s++) {
        size_t base = 0;
        for (size_t j = 0; j < m; j++) {
            if (s & (size_t{1} << (m - 1 - j))) {
                base |= size_t{1} << measured_bits[j];
            }
        }
        for (size_t r = 0; r < rest_dim; r++) {
            size_t idx = base;
            for (size_t j = 0; j < rest_count; j++) {
                if (r & (size_t{1} << (rest_count - 1 - j))) {
                    idx |= size_t{1} << rest_bits[j];
                }
            }
            full_index[s * rest_dim + r] = idx;
        }
    }

    auto amps = reg.amplitudes();
    out.branches.assign(basis.size(), std::vector<Amplitude>(rest_dim));
    out.probabilities.assign(basis.size(), 0.0);
    double total = 0;
    for (size_t o = 0; o < basis.size(); o++) {
        for (size_t s = 0; s < sub_dim; s++) {
            Amplitude c = std::conj(basis[o][s]);
            if (c == Amplitude{0}) {
                continue;
            }
            for (size_t r = 0; r < rest_dim; r++) {
                out.branches[o][r] += c * amps[full_index[s * rest_dim + r]];
            }
        }
        double p = 0;
        for (const auto &x : out.branches[o]) {
            p += std::norm(x);
        }
        out.probabilities[o] = p;
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw std::invalid_argument("measurement basis is not complete and orthonormal");
    }
    return out;
}

}  // namespace

std::vector<double> QubitStore::outcome_probabilities(
    std::span<const QubitId> qubits, std::span<const std::vector<Amplitude>> basis) const {
    check_basis(qubits, basis);
    std::vector<uint64_t> handles;
    for (const auto &q : qubits) {
        uint64_t h = locate(q).handle;
        if (std::find(handles.begin(), handles.end(), h) == handles.end()) {
            handles.push_back(h);
        }
    }
    StateRegister joined = registers_.at(handles[0]);
    for (size_t k = 1; k < handles.size(); k++) {
        joined = tensor_product(joined, registers_.at(handles[k]));
    }
    return project(joined, qubits, basis).probabilities;
}

size_t QubitStore::measure_in_basis(
    std::span<const QubitId> qubits, std::span<const std::vector<Amplitude>> basis, Rng &rng) {
    check_basis(qubits, basis);

    // Bring every measured qubit into one register.
    uint64_t handle = locate(qubits[0]).handle;
    for (size_t j = 1; j < qubits.size(); j++) {
        uint64_t other = locate(qubits[j]).handle;
        if (other != handle) {
            handle = merge(handle, other);
        }
    }
    Projection proj = project(registers_.at(handle), qubits, basis);

    double u = rng.uniform01();
    size_t outcome = basis.size();
    double cumulative = 0;
    for (size_t o = 0; o < basis.size(); o++) {
        if (proj.probabilities[o] <= 0) {
            continue;
        }
        cumulative += proj.probabilities[o];
        outcome = o;
        if (u < cumulative) {
            break;
        }
    }

    for (const auto &q : qubits) {
        locations_.erase(q.value);
    }
    registers_.erase(handle);
    if (!proj.rest.empty()) {
        auto &branch = proj.branches[outcome];
        double scale = 1.0 / std::sqrt(proj.probabilities[outcome]);
        for (auto &x : branch) {
            x *= scale;
        }
        add_register(StateRegister(std::move(proj.rest), std::move(branch)));
    }
    return outcome;
}

bool QubitStore::is_tracked(QubitId q) const {
    return locations_.count(q.value) != 0;
}

bool QubitStore::is_retired(QubitId q) const {
    return q.value < next_qubit_ && !is_tracked(q);
}

const StateRegister &QubitStore::register_of(QubitId q) const {
    return registers_.at(locate(q).handle);
}

StateRegister QubitStore::snapshot(std::span<const QubitId> order) const {
    if (order.empty()) {
        throw std::invalid_argument("empty snapshot");
    }
    const StateRegister &reg = register_of(order[0]);
    return reg.reordered(order);
}

uint64_t QubitStore::add_register(StateRegister reg) {
    uint64_t handle = next_handle_++;
    registers_.emplace(handle, std::move(reg));
    reindex(handle);
    return handle;
}

void QubitStore::reindex(uint64_t handle) {
    const StateRegister &reg = registers_.at(handle);
    for (size_t p = 0; p < reg.num_qubits(); p++) {
        locations_[reg.qubits()[p].value] = Location{handle, p};
    }
}

uint64_t QubitStore::merge(uint64_t a, uint64_t b) {
    StateRegister joined = tensor_product(registers_.at(a), registers_.at(b));
    registers_.erase(a);
    registers_.erase(b);
    return add_register(std::move(joined));
}

const QubitStore::Location &QubitStore::locate(QubitId q) const {
    auto it = locations_.find(q.value);
    if (it == locations_.end()) {
        throw std::invalid_argument(qubit_label(q) + (is_retired(q) ? " was already measured" : " is not tracked"));
    }
    return it->second;
}

}  // namespace qka
