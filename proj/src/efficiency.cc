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

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace qka {

namespace {

using boost::multiprecision::cpp_int;

uint64_t sum(const std::vector<std::pair<std::string, uint64_t>> &items) {
    uint64_t total = 0;
    for (const auto &[name, count] : items) {
        total += count;
    }
    return total;
}

void bump(std::vector<std::pair<std::string, uint64_t>> &items, const std::string &name, uint64_t amount) {
    for (auto &[k, v] : items) {
        if (k == name) {
            v += amount;
            return;
        }
    }
    items.emplace_back(name, amount);
}

}  // namespace

EfficiencyReport qubit_efficiency(const ResourceCount &rc) {
    if (rc.q + rc.b == 0) {
        throw std::domain_error("qubit efficiency undefined for q + b = 0");
    }
    EfficiencyReport report;
    report.eta = Rational(cpp_int(rc.c), cpp_int(rc.q) + cpp_int(rc.b));
    report.eta_percent = render_percent(report.eta);
    report.q_breakdown = {{"qubits", rc.q}};
    report.b_breakdown = {{"decoding bits", rc.b}};
    return report;
}

std::string render_percent(const Rational &fraction, int places) {
    if (fraction < 0) {
        throw std::domain_error("negative efficiency");
    }
    cpp_int scale = 100;
    for (int k = 0; k < places; k++) {
        scale *= 10;
    }
    const cpp_int num = boost::multiprecision::numerator(fraction);
    const cpp_int den = boost::multiprecision::denominator(fraction);
    cpp_int scaled = (2 * num * scale + den) / (2 * den);  // round half up
    cpp_int pow10 = 1;
    for (int k = 0; k < places; k++) {
        pow10 *= 10;
    }
    cpp_int whole = scaled / pow10;
    cpp_int frac = scaled % pow10;
    std::ostringstream out;
    out << whole;
    if (places > 0) {
        std::string digits = frac.str();
        out << '.' << std::string(places - digits.size(), '0') << digits;
    }
    return out.str();
}

std::string fraction_string(const Rational &r) {
    std::ostringstream out;
    out << boost::multiprecision::numerator(r) << '/' << boost::multiprecision::denominator(r);
    return out.str();
}

std::string_view preset_name(PresetProtocol p) {
    switch (p) {
        case PresetProtocol::TwoParty:
            return "two-party";
        case PresetProtocol::ThreeParty:
            return "three-party";
        case PresetProtocol::FiveParty:
            return "five-party";
        case PresetProtocol::PPGV:
            return "pp-gv";
    }
    throw std::invalid_argument("bad PresetProtocol");
}

ResourceCount preset_counts(PresetProtocol protocol, uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("key length must be positive");
    }
    switch (protocol) {
        case PresetProtocol::TwoParty:
            // 2n Bell states; message coordinates twice plus K_A, n bits each.
            return {n, 4 * n, 3 * n};
        case PresetProtocol::ThreeParty:
            // q = 3(2n + 3n), b = 3 x 3n.
            return {n, 15 * n, 9 * n};
        case PresetProtocol::FiveParty:
            // q = 4n x 5, b = 2n x 5 x 5.
            return {n, 20 * n, 50 * n};
        case PresetProtocol::PPGV:
            return {n, 4 * n, 2 * n};
    }
    throw std::invalid_argument("bad PresetProtocol");
}

PresetProtocol preset_for(ProtocolKind kind) {
    switch (kind) {
        case ProtocolKind::TwoParty:
            return PresetProtocol::TwoParty;
        case ProtocolKind::ThreeParty:
            return PresetProtocol::ThreeParty;
        case ProtocolKind::FiveParty:
            return PresetProtocol::FiveParty;
    }
    throw std::invalid_argument("bad ProtocolKind");
}

TranscriptTally tally_transcript(const Transcript &transcript) {
    if (transcript.aborted()) {
        throw std::invalid_argument("cannot count resources of an aborted run");
    }
    const bool count_decoys = transcript.protocol != ProtocolKind::FiveParty;
    TranscriptTally t;
    t.counts.c = transcript.key_bits;
    for (const auto &e : transcript.events) {
        switch (e.kind) {
            case EventKind::Prepare:
                if (e.carrier_qubits) {
                    bump(t.q_breakdown, "carrier qubits", e.carrier_qubits);
                }
                if (e.decoy_qubits && count_decoys) {
                    bump(t.q_breakdown, "decoy qubits", e.decoy_qubits);
                }
                break;
            case EventKind::FullPermutationDisclosure:
            case EventKind::MessageOrderDisclosure:
                bump(t.b_breakdown, "message coordinates", e.decoding_bits);
                break;
            case EventKind::KeyAnnouncement:
                bump(t.b_breakdown, "key announcements", e.decoding_bits);
                break;
            default:
                break;
        }
    }
    t.counts.q = sum(t.q_breakdown);
    t.counts.b = sum(t.b_breakdown);
    return t;
}

ResourceCount count_from_transcript(const Transcript &transcript) {
    ResourceCount tallied = tally_transcript(transcript).counts;
    ResourceCount expected = preset_counts(preset_for(transcript.protocol), transcript.key_bits);
    if (!(tallied == expected)) {
        std::ostringstream msg;
        msg << "transcript tally (" << tallied.c << ", " << tallied.q << ", " << tallied.b
            << ") disagrees with the closed form (" << expected.c << ", " << expected.q << ", " << expected.b
            << ") for " << protocol_name(transcript.protocol);
        throw std::logic_error(msg.str());
    }
    return tallied;
}

std::vector<EfficiencyRow> efficiency_table(uint64_t n) {
    std::vector<EfficiencyRow> rows;
    for (auto p : {PresetProtocol::TwoParty, PresetProtocol::ThreeParty, PresetProtocol::PPGV, PresetProtocol::FiveParty}) {
        auto counts = preset_counts(p, n);
        rows.push_back({p, counts, qubit_efficiency(counts).eta});
    }
    return rows;
}

std::string efficiency_csv(const std::vector<EfficiencyRow> &rows) {
    std::ostringstream out;
    out << "protocol,c,q,b,eta_fraction,eta_percent\n";
    for (const auto &r : rows) {
        out << preset_name(r.protocol) << ',' << r.counts.c << ',' << r.counts.q << ',' << r.counts.b << ','
            << fraction_string(r.eta) << ',' << render_percent(r.eta) << '\n';
    }
    return out.str();
}

nlohmann::ordered_json efficiency_json(const std::vector<EfficiencyRow> &rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto &r : rows) {
        nlohmann::ordered_json j;
        j["protocol"] = preset_name(r.protocol);
        j["c"] = r.counts.c;
        j["q"] = r.counts.q;
        j["b"] = r.counts.b;
        j["eta_fraction"] = fraction_string(r.eta);
        j["eta_percent"] = render_percent(r.eta);
        arr.push_back(std::move(j));
    }
    return arr;
}

std::string efficiency_text(const std::vector<EfficiencyRow> &rows) {
    std::ostringstream out;
    out << std::left << std::setw(13) << "protocol" << std::right << std::setw(8) << "c" << std::setw(8) << "q"
        << std::setw(8) << "b" << std::setw(10) << "eta" << std::setw(10) << "eta %" << '\n';
    for (const auto &r : rows) {
        out << std::left << std::setw(13) << preset_name(r.protocol) << std::right << std::setw(8) << r.counts.c
            << std::setw(8) << r.counts.q << std::setw(8) << r.counts.b << std::setw(10) << fraction_string(r.eta)
            << std::setw(10) << render_percent(r.eta) << '\n';
    }
    return out.str();
}

}  // namespace qka
