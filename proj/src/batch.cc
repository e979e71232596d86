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

#include "qka/batch.h"

#include <stdexcept>

namespace qka {

void RunSpec::validate() const {
    if (trials < 1) {
        throw std::invalid_argument("trials must be at least 1");
    }
    if (format == OutputFormat::Csv) {
        throw std::invalid_argument("csv output is only available for the efficiency table");
    }
    config.validate();
    adversary.validate(config.key_bits);
    if (adversary.is_insider() && config.party_count != 2) {
        throw std::invalid_argument(std::string(adversary_name(adversary.kind)) + " needs the two-party protocol");
    }
    if (adversary.kind == AdversaryKind::InterceptResendBell && config.party_count == 5) {
        throw std::invalid_argument("intercept-bell is not supported for the five-party protocol");
    }
    if (config.party_count == 5) {
        // Surfaces a bad round choice as a configuration error up front.
        five_party_scheme(config.five_party_rounds);
    }
}

std::vector<ProtocolResult> run_trials(const RunSpec &spec) {
    spec.validate();
    std::vector<ProtocolResult> out;
    out.reserve(spec.trials);
    ProtocolConfig c = spec.config;
    for (size_t t = 0; t < spec.trials; t++) {
        c.seed = spec.config.seed + t;
        out.push_back(run_protocol(c, spec.adversary));
    }
    return out;
}

BatchSummary batch_summary(const std::vector<ProtocolResult> &results) {
    if (results.empty()) {
        throw std::invalid_argument("cannot summarize an empty batch");
    }
    BatchSummary s;
    s.trials = results.size();
    double error_sum = 0;
    size_t checks = 0, wrong_bits = 0, total_bits = 0;
    for (const auto &r : results) {
        s.agreed += r.agreed();
        s.aborted += r.aborted;
        for (const auto &c : r.checks) {
            error_sum += c.error_rate;
            checks++;
        }
        if (r.aborted) {
            continue;
        }
        KeyBits want = r.expected_key();
        for (const auto &k : r.derived_keys) {
            for (size_t i = 0; i < want.size(); i++) {
                wrong_bits += (*k)[i] != want[i];
            }
            total_bits += want.size();
        }
    }
    s.agreement_rate = static_cast<double>(s.agreed) / static_cast<double>(s.trials);
    s.abort_rate = static_cast<double>(s.aborted) / static_cast<double>(s.trials);
    s.mean_error_rate = checks ? error_sum / static_cast<double>(checks) : 0.0;
    if (total_bits) {
        s.key_bit_error_rate = static_cast<double>(wrong_bits) / static_cast<double>(total_bits);
    }
    return s;
}

nlohmann::ordered_json summary_to_json(const BatchSummary &s) {
    nlohmann::ordered_json j;
    j["trials"] = s.trials;
    j["agreed"] = s.agreed;
    j["aborted"] = s.aborted;
    j["agreement_rate"] = s.agreement_rate;
    j["abort_rate"] = s.abort_rate;
    j["mean_error_rate"] = s.mean_error_rate;
    if (s.key_bit_error_rate) {
        j["key_bit_error_rate"] = *s.key_bit_error_rate;
    } else {
        j["key_bit_error_rate"] = nullptr;
    }
    return j;
}

}  // namespace qka
