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

#ifndef QKA_EFFICIENCY_H
#define QKA_EFFICIENCY_H

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"
#include "qka/transcript.h"

namespace qka {

using Rational = boost::multiprecision::cpp_rational;

/// c: shared key bits produced; q: qubits used; b: classical bits spent on
/// decoding (eavesdropping-check traffic excluded).
struct ResourceCount {
    uint64_t c = 0;
    uint64_t q = 0;
    uint64_t b = 0;

    friend bool operator==(const ResourceCount &, const ResourceCount &) = default;
};

struct EfficiencyReport {
    Rational eta;
    std::string eta_percent;
    std::vector<std::pair<std::string, uint64_t>> q_breakdown;
    std::vector<std::pair<std::string, uint64_t>> b_breakdown;
};

/// eta = c / (q + b), exactly. Throws std::domain_error when q + b == 0.
EfficiencyReport qubit_efficiency(const ResourceCount &rc);

/// Decimal rendering rounded half-up, e.g. 1/7 -> "14.29" at two places.
std::string render_percent(const Rational &fraction, int places = 2);

enum class PresetProtocol : uint8_t {
    TwoParty,
    ThreeParty,
    FiveParty,
    PPGV,
};

std::string_view preset_name(PresetProtocol p);

/// Closed-form counts for an n-bit key:
///   TwoParty (n, 4n, 3n), ThreeParty (n, 15n, 9n), FiveParty (n, 20n, 50n),
///   PPGV (n, 4n, 2n).
ResourceCount preset_counts(PresetProtocol protocol, uint64_t n);

PresetProtocol preset_for(ProtocolKind kind);

struct TranscriptTally {
    ResourceCount counts;
    std::vector<std::pair<std::string, uint64_t>> q_breakdown;
    std::vector<std::pair<std::string, uint64_t>> b_breakdown;
};

/// Tallies a completed run. q counts every carrier and decoy qubit prepared,
/// except five-party decoys, which the closed form for that protocol omits.
/// b counts message-coordinate disclosures and key announcements.
/// Throws std::invalid_argument for an aborted transcript.
TranscriptTally tally_transcript(const Transcript &transcript);

/// tally_transcript(...).counts, checked against preset_counts for the run's
/// protocol. Throws std::logic_error on disagreement.
ResourceCount count_from_transcript(const Transcript &transcript);

struct EfficiencyRow {
    PresetProtocol protocol;
    ResourceCount counts;
    Rational eta;
};

/// TwoParty, ThreeParty, PPGV, FiveParty at key length n.
std::vector<EfficiencyRow> efficiency_table(uint64_t n);

/// Columns: protocol,c,q,b,eta_fraction,eta_percent.
std::string efficiency_csv(const std::vector<EfficiencyRow> &rows);
nlohmann::ordered_json efficiency_json(const std::vector<EfficiencyRow> &rows);
std::string efficiency_text(const std::vector<EfficiencyRow> &rows);

std::string fraction_string(const Rational &r);

}  // namespace qka

#endif
