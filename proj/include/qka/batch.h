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

// Monte-Carlo batches over one configuration and their summary statistics.

#ifndef QKA_BATCH_H
#define QKA_BATCH_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qka/protocol.h"

namespace qka {

enum class OutputFormat : uint8_t { Json, Text, Csv };

struct RunSpec {
    // config.seed is the base seed; trial t runs with seed + t.
    ProtocolConfig config;
    AdversaryModel adversary;
    size_t trials = 1;
    OutputFormat format = OutputFormat::Json;
    std::string out_path;  // empty means standard output
    bool fail_on_abort = false;

    /// Throws std::invalid_argument for the first invalid field, before any run.
    void validate() const;
};

std::vector<ProtocolResult> run_trials(const RunSpec &spec);

struct BatchSummary {
    size_t trials = 0;
    size_t agreed = 0;
    size_t aborted = 0;
    double agreement_rate = 0;
    double abort_rate = 0;
    // Mean decoy error rate over every check performed in the batch.
    double mean_error_rate = 0;
    // Fraction of derived key bits, over all parties of completed runs, that
    // differ from the XOR of the private keys. Empty if every run aborted.
    std::optional<double> key_bit_error_rate;
};

/// Throws std::invalid_argument for an empty list.
BatchSummary batch_summary(const std::vector<ProtocolResult> &results);

nlohmann::ordered_json summary_to_json(const BatchSummary &summary);

}  // namespace qka

#endif
