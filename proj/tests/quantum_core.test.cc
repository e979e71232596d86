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

#include <cmath>
#include <map>

#include "gtest/gtest.h"
#include "oracle.h"

using namespace qka;

namespace {

const double kH = 1.0 / std::sqrt(2.0);

oracle::Vec to_vec(const StateRegister &r) {
    return {r.amplitudes().begin(), r.amplitudes().end()};
}

void expect_amplitudes(const StateRegister &r, const oracle::Vec &expected) {
    ASSERT_EQ(r.amplitudes().size(), expected.size());
    for (size_t k = 0; k < expected.size(); k++) {
        EXPECT_NEAR(std::abs(r.amplitudes()[k] - expected[k]), 0.0, 1e-12) << "index " << k;
    }
}

/// Equal up to global phase.
bool same_ray(const oracle::Vec &a, const oracle::Vec &b) {
    return std::abs(std::abs(oracle::dot(a, b)) - 1.0) < 1e-10;
}

}  // namespace

TEST(quantum_core, new_bell_amplitudes) {
    QubitStore store;
    auto [a, b] = store.new_bell(BellOutcome::PsiPlus);
    expect_amplitudes(store.register_of(a), {kH, 0, 0, kH});
    auto [c, d] = store.new_bell(BellOutcome::PhiMinus);
    expect_amplitudes(store.register_of(c), {0, kH, -kH, 0});
    expect_amplitudes(StateRegister::bell(BellOutcome::PsiMinus, a, b), {kH, 0, 0, -kH});
    expect_amplitudes(StateRegister::bell(BellOutcome::PhiPlus, a, b), {0, kH, kH, 0});
    (void)d;
}

TEST(quantum_core, fresh_pairs_are_disjoint_registers) {
    QubitStore store;
    auto p = store.new_bell(BellOutcome::PsiPlus);
    auto q = store.new_bell(BellOutcome::PsiPlus);
    std::set<QubitId> ids{p.first, p.second, q.first, q.second};
    EXPECT_EQ(ids.size(), 4u);
    EXPECT_EQ(store.register_count(), 2u);
    EXPECT_EQ(store.register_of(p.first).num_qubits(), 2u);
    EXPECT_EQ(store.register_of(q.second).num_qubits(), 2u);
}

TEST(quantum_core, four_qubit_states) {
    auto omega = StateRegister::four_qubit(FourQubitState::Omega, {QubitId{0}, QubitId{1}, QubitId{2}, QubitId{3}});
    auto cluster = StateRegister::four_qubit(FourQubitState::Cluster, {QubitId{0}, QubitId{1}, QubitId{2}, QubitId{3}});
    std::map<size_t, double> omega_expected{{0, 0.5}, {6, 0.5}, {9, 0.5}, {15, -0.5}};
    std::map<size_t, double> cluster_expected{{0, 0.5}, {3, 0.5}, {12, 0.5}, {15, -0.5}};
    for (size_t k = 0; k < 16; k++) {
        double want_o = omega_expected.count(k) ? omega_expected[k] : 0.0;
        double want_c = cluster_expected.count(k) ? cluster_expected[k] : 0.0;
        EXPECT_EQ(omega.amplitudes()[k], Amplitude(want_o)) << k;
        EXPECT_EQ(cluster.amplitudes()[k], Amplitude(want_c)) << k;
    }
    EXPECT_NEAR(omega.norm_squared(), 1.0, 1e-12);
    EXPECT_NEAR(cluster.norm_squared(), 1.0, 1e-12);
}

TEST(quantum_core, first_listed_qubit_is_most_significant) {
    auto one = StateRegister::basis_state(QubitId{0}, true);
    auto zero = StateRegister::basis_state(QubitId{1}, false);
    auto joined = tensor_product(one, zero);
    // |q0=1, q1=0> is index 0b10.
    expect_amplitudes(joined, {0, 0, 1, 0});
    auto swapped = joined.reordered(std::vector<QubitId>{QubitId{1}, QubitId{0}});
    expect_amplitudes(swapped, {0, 1, 0, 0});
}

TEST(quantum_core, apply_pauli_matches_table_rows) {
    QubitStore store;
    auto [p, q] = store.new_bell(BellOutcome::PsiPlus);
    std::vector<QubitId> second{q};
    store.apply_pauli(GroupElement{PauliLetter::X}, second);
    expect_amplitudes(store.register_of(p), to_vec(StateRegister::bell(BellOutcome::PhiPlus, p, q)));

    auto [p2, q2] = store.new_bell(BellOutcome::PsiPlus);
    std::vector<QubitId> second2{q2};
    store.apply_pauli(GroupElement{PauliLetter::Z}, second2);
    expect_amplitudes(store.register_of(p2), to_vec(StateRegister::bell(BellOutcome::PsiMinus, p2, q2)));

    auto before = store.register_of(p2);
    std::vector<QubitId> both{p2, q2};
    store.apply_pauli(GroupElement{PauliLetter::I, PauliLetter::I}, both);
    EXPECT_EQ(store.register_of(p2), before);
}

TEST(quantum_core, letter_action_matches_matrix_oracle) {
    // Phase-free iY is i * sigma_y = [[0, 1], [-1, 0]].
    const std::map<PauliLetter, oracle::Mat> matrices = {
        {PauliLetter::I, oracle::pauli_i()},
        {PauliLetter::X, oracle::pauli_x()},
        {PauliLetter::Y, oracle::scale(oracle::pauli_y(), oracle::C(0, 1))},
        {PauliLetter::Z, oracle::pauli_z()},
    };
    auto omega = StateRegister::four_qubit(FourQubitState::Omega, {QubitId{0}, QubitId{1}, QubitId{2}, QubitId{3}});
    for (const auto &[first, m1] : matrices) {
        for (const auto &[third, m3] : matrices) {
            StateRegister s = omega;
            std::vector<QubitId> targets{QubitId{0}, QubitId{2}};
            s.apply(GroupElement{first, third}, targets);
            auto full = oracle::kron_all({m1, oracle::pauli_i(), m3, oracle::pauli_i()});
            auto want = oracle::apply(full, to_vec(omega));
            expect_amplitudes(s, want);
            EXPECT_NEAR(s.norm_squared(), 1.0, 1e-10);
        }
    }
}

TEST(quantum_core, apply_pauli_errors) {
    QubitStore store;
    auto [p, q] = store.new_bell(BellOutcome::PsiPlus);
    std::vector<QubitId> one{q};
    EXPECT_THROW(store.apply_pauli(GroupElement{PauliLetter::X, PauliLetter::X}, one), std::invalid_argument);
    std::vector<QubitId> unknown{QubitId{99}};
    EXPECT_THROW(store.apply_pauli(GroupElement{PauliLetter::X}, unknown), std::invalid_argument);
    (void)p;
}

TEST(quantum_core, measure_bell_undisturbed_pair) {
    for (uint64_t seed = 0; seed < 100; seed++) {
        QubitStore store;
        Rng rng(seed);
        auto [p, q] = store.new_bell(BellOutcome::PsiPlus);
        EXPECT_EQ(store.measure_bell(p, q, rng), BellOutcome::PsiPlus);
        EXPECT_FALSE(store.is_tracked(p));
        EXPECT_TRUE(store.is_retired(q));
        EXPECT_EQ(store.register_count(), 0u);
    }
}

// Oracle: expand |a>_{12} (x) |b>_{34} as a 16-vector, project qubits 2,3 onto
// each Bell vector by explicit summation, and compare probabilities and the
// post-measurement state of (1,4) with the store's lazy merge.
TEST(quantum_core, cross_register_bell_measurement_matches_product_state_oracle) {
    auto bells = oracle::bell_vectors();
    for (auto first : kAllBellOutcomes) {
        for (auto second : kAllBellOutcomes) {
            oracle::Vec full = oracle::kron(bells[static_cast<int>(first)], bells[static_cast<int>(second)]);
            std::vector<double> want_prob(4);
            std::vector<oracle::Vec> want_post(4, oracle::Vec(4));
            for (int o = 0; o < 4; o++) {
                for (int b1 = 0; b1 < 2; b1++) {
                    for (int b4 = 0; b4 < 2; b4++) {
                        oracle::C acc = 0;
                        for (int b2 = 0; b2 < 2; b2++) {
                            for (int b3 = 0; b3 < 2; b3++) {
                                acc += std::conj(bells[o][b2 * 2 + b3]) * full[b1 * 8 + b2 * 4 + b3 * 2 + b4];
                            }
                        }
                        want_post[o][b1 * 2 + b4] = acc;
                    }
                }
                want_prob[o] = oracle::norm2(want_post[o]);
                for (auto &x : want_post[o]) {
                    x /= std::sqrt(want_prob[o]);
                }
            }

            QubitStore probe;
            auto [q1, q2] = probe.new_bell(first);
            auto [q3, q4] = probe.new_bell(second);
            std::vector<QubitId> mid{q2, q3};
            auto probs = probe.outcome_probabilities(mid, bell_basis());
            for (int o = 0; o < 4; o++) {
                EXPECT_NEAR(probs[o], want_prob[o], 1e-12);
                EXPECT_NEAR(want_prob[o], 0.25, 1e-12);
            }

            for (uint64_t seed = 0; seed < 8; seed++) {
                QubitStore store;
                Rng rng(seed);
                auto [a1, a2] = store.new_bell(first);
                auto [a3, a4] = store.new_bell(second);
                int o = static_cast<int>(store.measure_bell(a2, a3, rng));
                ASSERT_GT(want_prob[o], 0.0);
                std::vector<QubitId> outer{a1, a4};
                auto post = to_vec(store.snapshot(outer));
                EXPECT_TRUE(same_ray(post, want_post[o]));
                EXPECT_EQ(store.tracked_count(), 2u);
            }
        }
    }
}

TEST(quantum_core, swapping_leaves_outer_pair_in_matching_bell_state) {
    for (uint64_t seed = 0; seed < 64; seed++) {
        QubitStore store;
        Rng rng(seed);
        auto [q1, q2] = store.new_bell(BellOutcome::PsiPlus);
        auto [q3, q4] = store.new_bell(BellOutcome::PsiPlus);
        BellOutcome o = store.measure_bell(q2, q3, rng);
        std::vector<QubitId> outer{q1, q4};
        EXPECT_TRUE(same_ray(to_vec(store.snapshot(outer)), to_vec(StateRegister::bell(o, q1, q4))));
    }
}

TEST(quantum_core, swapping_statistics) {
    std::array<int, 4> counts{};
    const int trials = 10000;
    Rng rng(2024);
    for (int t = 0; t < trials; t++) {
        QubitStore store;
        auto [q1, q2] = store.new_bell(BellOutcome::PsiPlus);
        auto [q3, q4] = store.new_bell(BellOutcome::PsiPlus);
        counts[static_cast<int>(store.measure_bell(q2, q3, rng))]++;
        (void)q1;
        (void)q4;
    }
    for (int c : counts) {
        EXPECT_NEAR(static_cast<double>(c) / trials, 0.25, 0.02);
    }
}

TEST(quantum_core, bell_measurement_of_product_zero_state) {
    // |00> = (psi+ + psi-)/√2.
    QubitStore store;
    QubitId a = store.new_basis_qubit(false);
    QubitId b = store.new_basis_qubit(false);
    std::vector<QubitId> pair{a, b};
    auto probs = store.outcome_probabilities(pair, bell_basis());
    auto bells = oracle::bell_vectors();
    oracle::Vec zero{1, 0, 0, 0};
    for (int o = 0; o < 4; o++) {
        EXPECT_NEAR(probs[o], std::norm(oracle::dot(bells[o], zero)), 1e-12);
    }
    EXPECT_NEAR(probs[0], 0.5, 1e-12);
    EXPECT_NEAR(probs[1], 0.5, 1e-12);

    std::array<int, 4> seen{};
    for (uint64_t seed = 0; seed < 200; seed++) {
        QubitStore s;
        Rng rng(seed);
        QubitId x = s.new_basis_qubit(false);
        QubitId y = s.new_basis_qubit(false);
        seen[static_cast<int>(s.measure_bell(x, y, rng))]++;
    }
    EXPECT_GT(seen[0], 0);
    EXPECT_GT(seen[1], 0);
    EXPECT_EQ(seen[2] + seen[3], 0);
}

TEST(quantum_core, measure_z_on_bell_pair) {
    int ones = 0;
    for (uint64_t seed = 0; seed < 400; seed++) {
        QubitStore store;
        Rng rng(seed);
        auto [p, q] = store.new_bell(BellOutcome::PsiPlus);
        bool first = store.measure_z(p, rng);
        std::vector<QubitId> partner{q};
        expect_amplitudes(store.snapshot(partner), first ? oracle::Vec{0, 1} : oracle::Vec{1, 0});
        bool second = store.measure_z(q, rng);
        EXPECT_EQ(first, second);
        ones += first;
    }
    EXPECT_GT(ones, 140);
    EXPECT_LT(ones, 260);

    QubitStore store;
    auto [p, q] = store.new_bell(BellOutcome::PsiPlus);
    std::vector<QubitId> one{p};
    static const std::vector<std::vector<Amplitude>> z = {{1.0, 0.0}, {0.0, 1.0}};
    auto probs = store.outcome_probabilities(one, z);
    EXPECT_NEAR(probs[0], 0.5, 1e-12);
    EXPECT_NEAR(probs[1], 0.5, 1e-12);
    (void)q;
}

TEST(quantum_core, measure_z_fresh_zero) {
    for (uint64_t seed = 0; seed < 50; seed++) {
        QubitStore store;
        Rng rng(seed);
        QubitId q = store.new_basis_qubit(false);
        EXPECT_FALSE(store.measure_z(q, rng));
    }
}

TEST(quantum_core, inner_products) {
    QubitId a{0}, b{1};
    auto psi_plus = StateRegister::bell(BellOutcome::PsiPlus, a, b);
    auto phi_minus = StateRegister::bell(BellOutcome::PhiMinus, a, b);
    EXPECT_NEAR(std::abs(inner_product(psi_plus, psi_plus) - 1.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(inner_product(psi_plus, phi_minus)), 0.0, 1e-12);

    std::array<QubitId, 4> ids{QubitId{0}, QubitId{1}, QubitId{2}, QubitId{3}};
    auto omega = StateRegister::four_qubit(FourQubitState::Omega, ids);
    auto flipped = omega;
    flipped.apply_letter(2, PauliLetter::X);
    // Oracle: X on qubit 3 maps index i to i ^ 0b0010; Omega's support
    // {0, 6, 9, 15} maps to {2, 4, 11, 13}, disjoint from the support.
    auto omega_vec = to_vec(omega);
    oracle::Vec by_hand(16);
    for (size_t i = 0; i < 16; i++) {
        by_hand[i ^ 0b0010] = omega_vec[i];
    }
    EXPECT_NEAR(std::abs(oracle::dot(omega_vec, by_hand)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(inner_product(omega, flipped)), 0.0, 1e-12);

    EXPECT_THROW(inner_product(psi_plus, omega), std::invalid_argument);
}

TEST(quantum_core, measurement_errors) {
    QubitStore store;
    Rng rng(1);
    auto [p, q] = store.new_bell(BellOutcome::PsiPlus);
    EXPECT_THROW(store.measure_bell(p, p, rng), std::invalid_argument);
    EXPECT_THROW(store.measure_bell(p, QubitId{77}, rng), std::invalid_argument);
    EXPECT_THROW(store.measure_z(QubitId{77}, rng), std::invalid_argument);
    store.measure_bell(p, q, rng);
    // Retired qubits stay retired.
    EXPECT_THROW(store.measure_z(p, rng), std::invalid_argument);
    auto [r, s] = store.new_bell(BellOutcome::PsiPlus);
    EXPECT_GT(r.value, q.value);
    EXPECT_GT(s.value, q.value);
}

TEST(quantum_core, register_validation_and_cap) {
    EXPECT_THROW(StateRegister({QubitId{0}}, {1.0, 1.0}), std::invalid_argument);
    EXPECT_THROW(StateRegister({QubitId{0}, QubitId{0}}, {1.0, 0, 0, 0}), std::invalid_argument);
    EXPECT_THROW(
        StateRegister({QubitId{0}}, {std::numeric_limits<double>::quiet_NaN(), 0.0}), std::invalid_argument);

    std::vector<QubitId> thirteen;
    for (uint64_t k = 0; k < 13; k++) {
        thirteen.push_back(QubitId{k});
    }
    std::vector<Amplitude> big(size_t{1} << 13);
    big[0] = 1;
    EXPECT_THROW(StateRegister(thirteen, big), std::invalid_argument);

    auto make = [](uint64_t first, size_t count) {
        std::vector<QubitId> ids;
        for (size_t k = 0; k < count; k++) {
            ids.push_back(QubitId{first + k});
        }
        std::vector<Amplitude> amps(size_t{1} << count);
        amps[0] = 1;
        return StateRegister(ids, amps);
    };
    EXPECT_NO_THROW(tensor_product(make(0, 6), make(100, 6)));
    EXPECT_THROW(tensor_product(make(0, 7), make(100, 6)), std::length_error);
}

TEST(quantum_core, norm_preserved_under_random_pauli_words) {
    Rng rng(5);
    QubitStore store;
    std::vector<QubitId> all;
    for (int k = 0; k < 4; k++) {
        auto [a, b] = store.new_bell(kAllBellOutcomes[k]);
        all.push_back(a);
        all.push_back(b);
    }
    auto ids = store.new_four_qubit(FourQubitState::Cluster);
    all.insert(all.end(), ids.begin(), ids.end());
    for (int step = 0; step < 500; step++) {
        size_t arity = 1 + rng.uniform_below(3);
        std::vector<QubitId> targets = all;
        rng.shuffle(std::span<QubitId>(targets));
        targets.resize(arity);
        std::vector<PauliLetter> letters;
        for (size_t k = 0; k < arity; k++) {
            letters.push_back(kAllLetters[rng.uniform_below(4)]);
        }
        store.apply_pauli(GroupElement(letters), targets);
        for (auto q : all) {
            ASSERT_NEAR(store.register_of(q).norm_squared(), 1.0, 1e-10);
        }
    }
}

TEST(quantum_core, identical_seeds_give_identical_runs) {
    auto run = [](uint64_t seed) {
        QubitStore store;
        Rng rng(seed);
        std::vector<int> outcomes;
        std::vector<std::pair<QubitId, QubitId>> pairs;
        for (int k = 0; k < 6; k++) {
            pairs.push_back(store.new_bell(BellOutcome::PsiPlus));
        }
        for (int k = 0; k + 1 < 6; k += 2) {
            outcomes.push_back(static_cast<int>(store.measure_bell(pairs[k].second, pairs[k + 1].first, rng)));
        }
        outcomes.push_back(store.measure_z(pairs[0].first, rng));
        return std::make_pair(outcomes, store);
    };
    auto a = run(17);
    auto b = run(17);
    EXPECT_EQ(a.first, b.first);
    EXPECT_TRUE(a.second == b.second);
}
