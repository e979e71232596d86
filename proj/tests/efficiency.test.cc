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

#include "qka/efficiency.h"

#include <numeric>

#include "gtest/gtest.h"
#include "qka/protocol.h"

using namespace qka;

namespace {

// c/(q+b) reduced with plain integers.
std::pair<uint64_t, uint64_t> reduced(const ResourceCount &rc) {
    uint64_t d = rc.q + rc.b;
    uint64_t g = std::gcd(rc.c, d);
    return {rc.c / g, d / g};
}

// Percentage to two places, rounded half-up, using integer arithmetic only.
std::string percent_oracle(uint64_t num, uint64_t den) {
    uint64_t scaled = (num * 20000 / den + 1) / 2;
    std::string frac = std::to_string(scaled % 100);
    if (frac.size() < 2) {
        frac = "0" + frac;
    }
    return std::to_string(scaled / 100) + "." + frac;
}

}  // namespace

TEST(efficiency, published_fractions) {
    struct Row {
        PresetProtocol p;
        uint64_t num, den;
        const char *pct;
    } rows[] = {
        {PresetProtocol::TwoParty, 1, 7, "14.29"},
        {PresetProtocol::ThreeParty, 1, 24, "4.17"},
        {PresetProtocol::FiveParty, 1, 70, "1.43"},
        {PresetProtocol::PPGV, 1, 6, "16.67"},
    };
    for (uint64_t n : {1, 2, 3, 16, 128, 1000}) {
        for (const auto &r : rows) {
            auto rc = preset_counts(r.p, n);
            auto rep = qubit_efficiency(rc);
            EXPECT_EQ(rep.eta, Rational(r.num, r.den)) << preset_name(r.p) << " n=" << n;
            EXPECT_EQ(reduced(rc), std::make_pair(r.num, r.den));
            EXPECT_EQ(rep.eta_percent, r.pct);
        }
    }
}

TEST(efficiency, preset_examples) {
    EXPECT_EQ(preset_counts(PresetProtocol::PPGV, 6), (ResourceCount{6, 24, 12}));
    EXPECT_EQ(preset_counts(PresetProtocol::ThreeParty, 2), (ResourceCount{2, 30, 18}));
    EXPECT_EQ(preset_counts(PresetProtocol::TwoParty, 1), (ResourceCount{1, 4, 3}));
    EXPECT_EQ(preset_counts(PresetProtocol::FiveParty, 2), (ResourceCount{2, 40, 100}));
}

TEST(efficiency, rendering_matches_integer_oracle) {
    for (uint64_t den = 1; den < 300; den++) {
        for (uint64_t num = 0; num <= den; num += 7) {
            EXPECT_EQ(render_percent(Rational(num, den)), percent_oracle(num, den)) << num << "/" << den;
        }
    }
    EXPECT_EQ(render_percent(Rational(1, 8)), "12.50");
    EXPECT_EQ(render_percent(Rational(1, 800)), "0.13");
    EXPECT_EQ(fraction_string(Rational(2, 14)), "1/7");
}

TEST(efficiency, zero_denominator) {
    EXPECT_THROW(qubit_efficiency({1, 0, 0}), std::domain_error);
}

TEST(efficiency, more_parties_lower_eta) {
    for (uint64_t n : {2, 8, 64}) {
        auto two = qubit_efficiency(preset_counts(PresetProtocol::TwoParty, n)).eta;
        auto three = qubit_efficiency(preset_counts(PresetProtocol::ThreeParty, n)).eta;
        auto five = qubit_efficiency(preset_counts(PresetProtocol::FiveParty, n)).eta;
        EXPECT_GT(two, three);
        EXPECT_GT(three, five);
    }
}

TEST(efficiency, transcripts_agree_with_presets) {
    for (size_t parties : {2, 3, 5}) {
        for (uint64_t s = 0; s < 100; s++) {
            ProtocolConfig c;
            c.party_count = parties;
            c.key_bits = 2 + 2 * (s % 8);
            c.seed = s;
            auto r = run_protocol(c);
            ASSERT_TRUE(r.resources);
            auto tally = tally_transcript(r.transcript).counts;
            EXPECT_EQ(tally, preset_counts(preset_for(r.protocol), c.key_bits));
        }
    }
}

TEST(efficiency, two_party_n16_counts) {
    ProtocolConfig c;
    c.key_bits = 16;
    auto r = run_two_party(c);
    EXPECT_EQ(count_from_transcript(r.transcript), (ResourceCount{16, 64, 48}));
    auto t = tally_transcript(r.transcript);
    uint64_t q = 0;
    for (auto &[k, v] : t.q_breakdown) {
        q += v;
    }
    EXPECT_EQ(q, 64u);
}

TEST(efficiency, rejects_aborted_and_inconsistent_transcripts) {
    ProtocolConfig c;
    c.key_bits = 16;
    AdversaryModel m;
    m.kind = AdversaryKind::InterceptResendZ;
    auto r = run_two_party(c, m);
    ASSERT_TRUE(r.aborted);
    EXPECT_FALSE(r.resources);
    EXPECT_THROW(tally_transcript(r.transcript), std::invalid_argument);

    auto ok = run_two_party(c).transcript;
    TranscriptEvent extra;
    extra.kind = EventKind::KeyAnnouncement;
    extra.decoding_bits = 16;
    ok.add(extra);
    EXPECT_THROW(count_from_transcript(ok), std::logic_error);
}

TEST(efficiency, table_outputs) {
    auto rows = efficiency_table(16);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0].protocol, PresetProtocol::TwoParty);
    EXPECT_EQ(rows[1].protocol, PresetProtocol::ThreeParty);
    EXPECT_EQ(rows[2].protocol, PresetProtocol::PPGV);
    EXPECT_EQ(rows[3].protocol, PresetProtocol::FiveParty);
    auto csv = efficiency_csv(rows);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "protocol,c,q,b,eta_fraction,eta_percent");
    EXPECT_NE(csv.find("two-party,16,64,48,1/7,14.29"), std::string::npos);
    EXPECT_NE(csv.find("pp-gv,16,64,32,1/6,16.67"), std::string::npos);
    auto j = efficiency_json(rows);
    EXPECT_EQ(j[3]["eta_fraction"], "1/70");
    EXPECT_EQ(j[1]["eta_percent"], "4.17");
    EXPECT_NE(efficiency_text(rows).find("1/24"), std::string::npos);
}
