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

#include "qka/cli.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "qka/batch.h"
#include "qka/dense_coding.h"
#include "qka/efficiency.h"
#include "qka/pauli.h"

namespace qka {

namespace {

std::string ket(const StateRegister &s) {
    std::string out;
    const size_t n = s.num_qubits();
    auto amps = s.amplitudes();
    for (size_t idx = 0; idx < amps.size(); idx++) {
        Amplitude a = amps[idx];
        if (std::abs(a) < kAmplitudeTolerance) {
            continue;
        }
        char buf[64];
        if (std::abs(a.imag()) < kAmplitudeTolerance) {
            std::snprintf(buf, sizeof buf, "%+.4g", a.real());
        } else {
            std::snprintf(buf, sizeof buf, "(%+.4g%+.4gi)", a.real(), a.imag());
        }
        if (!out.empty()) {
            out += ' ';
        }
        out += buf;
        out += '|';
        for (size_t b = 0; b < n; b++) {
            out += (idx >> (n - 1 - b) & 1) ? '1' : '0';
        }
        out += '>';
    }
    return out;
}

nlohmann::ordered_json group_checks(const std::string &name, size_t arity) {
    auto g = pauli_group(arity);
    bool closed = true, commutative = true, associative = true;
    std::set<GroupElement> members(g.begin(), g.end());
    for (const auto &a : g) {
        for (const auto &b : g) {
            closed &= members.count(mul(a, b)) == 1;
            commutative &= mul(a, b) == mul(b, a);
            for (const auto &c : g) {
                associative &= mul(mul(a, b), c) == mul(a, mul(b, c));
            }
        }
    }
    nlohmann::ordered_json j;
    j["name"] = name;
    j["order"] = g.size();
    j["closed"] = closed;
    j["commutative"] = commutative;
    j["associative"] = associative;
    j["passed"] = closed && commutative && associative && g.size() == (size_t{1} << (2 * arity));
    return j;
}

nlohmann::ordered_json dense_coding_entry(
    const std::string &label,
    const StateRegister &state,
    std::span<const QubitId> targets,
    const std::vector<GroupElement> &group,
    bool expect_orthogonal) {
    auto states = encoded_states(state, targets, group);
    double worst = 0;
    for (size_t a = 0; a < states.size(); a++) {
        for (size_t b = 0; b < states.size(); b++) {
            Amplitude want = a == b ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(inner_product(states[a], states[b]) - want));
        }
    }
    bool orthogonal = dense_coding_orthogonal(state, targets, group);
    nlohmann::ordered_json j;
    j["state"] = label;
    auto t = nlohmann::ordered_json::array();
    for (auto q : targets) {
        t.push_back(*state.position_of(q) + 1);
    }
    j["targets"] = t;
    j["orthogonal"] = orthogonal;
    j["expected_orthogonal"] = expect_orthogonal;
    j["max_gram_deviation"] = worst;
    j["passed"] = orthogonal == expect_orthogonal;
    auto rows = nlohmann::ordered_json::array();
    for (size_t k = 0; k < group.size(); k++) {
        rows.push_back({{"operator", group[k].str()}, {"state", ket(states[k])}});
    }
    j["table"] = std::move(rows);
    return j;
}

}  // namespace

nlohmann::ordered_json verify_groups_report() {
    nlohmann::ordered_json j;
    j["schema"] = "qka.verify-groups/1";
    bool ok = true;

    auto groups = nlohmann::ordered_json::array();
    for (auto [name, arity] : {std::pair{"G1", size_t{1}}, std::pair{"G2", size_t{2}}}) {
        groups.push_back(group_checks(name, arity));
        ok &= groups.back()["passed"].get<bool>();
    }
    j["groups"] = std::move(groups);

    auto subs = standard_subgroups_g2();
    auto sj = nlohmann::ordered_json::array();
    for (const auto &s : subs) {
        auto elems = nlohmann::ordered_json::array();
        bool closed = true;
        for (const auto &a : s.elements) {
            elems.push_back(a.str());
            for (const auto &b : s.elements) {
                closed &= s.elements.count(mul(a, b)) == 1;
            }
        }
        sj.push_back({{"name", s.name}, {"elements", elems}, {"closed", closed}});
        ok &= closed;
    }
    j["subgroups"] = std::move(sj);

    size_t disjoint = 0, pairs = 0;
    for (size_t a = 0; a < subs.size(); a++) {
        for (size_t b = a + 1; b < subs.size(); b++) {
            pairs++;
            disjoint += check_disjoint(subs[a], subs[b]);
        }
    }
    j["disjoint_pairs"] = {{"checked", pairs}, {"disjoint", disjoint}};
    ok &= disjoint == pairs;

    auto g2 = pauli_group(2);
    std::set<GroupElement> all(g2.begin(), g2.end());
    auto eqs = nlohmann::ordered_json::array();
    for (auto quad : {std::array<int, 4>{1, 2, 3, 4}, {1, 2, 5, 6}, {3, 4, 5, 6}}) {
        std::vector<Subgroup> chosen;
        std::string label;
        for (int r : quad) {
            chosen.push_back(subs[r - 1]);
            label += std::to_string(r);
        }
        bool equal = product_set(chosen) == all;
        eqs.push_back({{"rounds", label}, {"generates_G2", equal}});
        ok &= equal;
    }
    j["product_equations"] = std::move(eqs);

    const std::array<QubitId, 4> ids{QubitId{0}, QubitId{1}, QubitId{2}, QubitId{3}};
    auto dc = nlohmann::ordered_json::array();
    {
        std::array<QubitId, 1> t{ids[1]};
        dc.push_back(dense_coding_entry("psi+", StateRegister::bell(BellOutcome::PsiPlus, ids[0], ids[1]), t,
                                        pauli_group(1), true));
    }
    const std::array<QubitId, 2> t13{ids[0], ids[2]}, t12{ids[0], ids[1]};
    dc.push_back(dense_coding_entry("omega", StateRegister::four_qubit(FourQubitState::Omega, ids), t13, g2, true));
    dc.push_back(dense_coding_entry("cluster", StateRegister::four_qubit(FourQubitState::Cluster, ids), t13, g2, true));
    dc.push_back(dense_coding_entry("cluster", StateRegister::four_qubit(FourQubitState::Cluster, ids), t12, g2, false));
    for (const auto &e : dc) {
        ok &= e["passed"].get<bool>();
    }
    j["dense_coding"] = std::move(dc);
    j["all_passed"] = ok;
    return j;
}

std::string verify_groups_text(const nlohmann::ordered_json &r) {
    std::ostringstream o;
    auto yes = [](const nlohmann::ordered_json &v) { return v.get<bool>() ? "yes" : "NO"; };
    o << "Groups\n";
    for (const auto &g : r["groups"]) {
        o << "  " << std::left << std::setw(4) << g["name"].get<std::string>() << " order " << std::setw(3)
          << g["order"].get<size_t>() << " closed " << yes(g["closed"]) << "  commutative " << yes(g["commutative"])
          << "  associative " << yes(g["associative"]) << '\n';
    }
    o << "Subgroups of G2\n";
    for (const auto &s : r["subgroups"]) {
        o << "  " << s["name"].get<std::string>() << " = {";
        for (size_t k = 0; k < s["elements"].size(); k++) {
            o << (k ? ", " : "") << s["elements"][k].get<std::string>();
        }
        o << "}  closed " << yes(s["closed"]) << '\n';
    }
    o << "Pairwise disjoint: " << r["disjoint_pairs"]["disjoint"].get<size_t>() << " of "
      << r["disjoint_pairs"]["checked"].get<size_t>() << '\n';
    o << "Products equal to G2\n";
    for (const auto &e : r["product_equations"]) {
        o << "  rounds " << e["rounds"].get<std::string>() << ": " << yes(e["generates_G2"]) << '\n';
    }
    for (const auto &d : r["dense_coding"]) {
        o << "Dense coding on |" << d["state"].get<std::string>() << ">, qubits";
        for (const auto &t : d["targets"]) {
            o << ' ' << t.get<size_t>();
        }
        o << ": orthogonal " << (d["orthogonal"].get<bool>() ? "yes" : "no") << " (expected "
          << (d["expected_orthogonal"].get<bool>() ? "yes" : "no") << "), max Gram deviation "
          << d["max_gram_deviation"].get<double>() << '\n';
        for (const auto &row : d["table"]) {
            o << "  " << std::left << std::setw(6) << row["operator"].get<std::string>() << row["state"].get<std::string>()
              << '\n';
        }
    }
    o << (r["all_passed"].get<bool>() ? "All checks passed.\n" : "Some checks FAILED.\n");
    return o.str();
}

namespace {

std::string run_text(const ProtocolResult &r) {
    std::ostringstream o;
    o << "protocol   " << protocol_name(r.protocol) << '\n';
    o << "key bits   " << r.key_bits << '\n';
    o << "seed       " << r.seed << '\n';
    o << "aborted    " << (r.aborted ? "yes" : "no");
    if (r.abort_transmission) {
        o << " (transmission " << *r.abort_transmission << ")";
    }
    o << '\n';
    o << "agreed     " << (r.agreed() ? "yes" : "no") << '\n';
    for (size_t p = 0; p < r.private_keys.size(); p++) {
        o << std::left << std::setw(10) << party_name(p, r.private_keys.size()) << " private "
          << r.private_keys[p].hex() << "  derived "
          << (r.derived_keys[p] ? r.derived_keys[p]->hex() : std::string("-")) << '\n';
    }
    for (const auto &c : r.checks) {
        o << "check      transmission " << c.transmission << ' ' << party_name(c.sender, r.private_keys.size())
          << " -> " << party_name(c.receiver, r.private_keys.size()) << " error " << c.error_rate
          << (c.passed ? " pass" : " FAIL") << '\n';
    }
    if (r.resources) {
        auto rep = qubit_efficiency(*r.resources);
        o << "resources  c=" << r.resources->c << " q=" << r.resources->q << " b=" << r.resources->b
          << " eta=" << fraction_string(rep.eta) << " (" << rep.eta_percent << "%)\n";
    }
    return o.str();
}

std::string summary_text(const BatchSummary &s) {
    std::ostringstream o;
    o << "trials           " << s.trials << '\n';
    o << "agreement rate   " << s.agreement_rate << '\n';
    o << "abort rate       " << s.abort_rate << '\n';
    o << "mean error rate  " << s.mean_error_rate << '\n';
    o << "key bit errors   ";
    if (s.key_bit_error_rate) {
        o << *s.key_bit_error_rate << '\n';
    } else {
        o << "-\n";
    }
    return o.str();
}

nlohmann::ordered_json spec_json(const RunSpec &spec) {
    nlohmann::ordered_json j;
    j["protocol"] = protocol_name(protocol_for_party_count(spec.config.party_count));
    j["key_bits"] = spec.config.key_bits;
    j["seed"] = spec.config.seed;
    j["trials"] = spec.trials;
    j["threshold"] = spec.config.error_threshold;
    j["adversary"] = adversary_name(spec.adversary.kind);
    j["attack_fraction"] = spec.adversary.attack_fraction;
    j["attack_scope"] = spec.adversary.scope == AttackScope::AllHops ? "all-hops" : "first-hop";
    j["swap_count"] = spec.adversary.swap_count;
    if (spec.config.party_count == 5) {
        j["five_party_state"] = spec.config.five_party_state == FourQubitState::Omega ? "omega" : "cluster";
        std::string rounds;
        for (int r : spec.config.five_party_rounds) {
            rounds += std::to_string(r);
        }
        j["five_party_rounds"] = rounds;
    }
    return j;
}

// Writes to --out when given, otherwise to `out`.
bool emit(const std::string &path, const std::string &text, std::ostream &out, std::ostream &err) {
    if (path.empty()) {
        out << text;
        return true;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        err << "error: cannot open " << path << " for writing\n";
        return false;
    }
    f << text;
    return true;
}

const std::map<std::string, OutputFormat> kFormats{
    {"json", OutputFormat::Json}, {"text", OutputFormat::Text}, {"csv", OutputFormat::Csv}};

}  // namespace

int cli_main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Quantum key agreement simulator", "qka"};
    app.set_config("--config", "", "Read options from a TOML or INI file; command-line flags take precedence");
    app.require_subcommand(1);

    RunSpec spec;
    std::string protocol = "two-party", state = "omega", rounds = "1234", adversary = "none", scope = "first-hop";
    std::string format = "json";
    auto *run = app.add_subcommand("run", "Run a protocol, optionally many seeded trials");
    run->add_option("--protocol", protocol, "Protocol to run")
        ->check(CLI::IsMember({"two-party", "three-party", "five-party"}));
    run->add_option("--five-party-state", state, "Carrier state for five parties")
        ->check(CLI::IsMember({"omega", "cluster"}));
    run->add_option("--five-party-rounds", rounds, "Subgroups used in the four encoding rounds")
        ->check(CLI::IsMember({"1234", "1256", "3456"}));
    run->add_option("--key-bits", spec.config.key_bits, "Key length n (even)");
    run->add_option("--seed", spec.config.seed, "Base seed; trial t uses seed + t")->envname("QKA_SEED");
    run->add_option("--trials", spec.trials, "Number of trials");
    run->add_option("--adversary", adversary, "Adversary model")
        ->check(CLI::IsMember({"none", "intercept-z", "intercept-bell", "dishonest-bob", "dishonest-alice"}));
    run->add_option("--attack-fraction", spec.adversary.attack_fraction, "Fraction of transit slots attacked");
    run->add_option("--attack-scope", scope, "Transmissions an eavesdropper attacks")
        ->check(CLI::IsMember({"first-hop", "all-hops"}));
    run->add_option("--swap-count", spec.adversary.swap_count, "Message positions a dishonest Bob permutes");
    run->add_option("--threshold", spec.config.error_threshold, "Highest tolerated decoy error rate");
    run->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text", "csv"}));
    run->add_option("--out", spec.out_path, "Write output to this file");
    run->add_flag("--fail-on-abort", spec.fail_on_abort, "Exit with status 3 if any run aborted");

    bool table = false;
    uint64_t table_n = 16;
    std::string eff_format = "text", eff_out;
    std::vector<uint64_t> counts;
    auto *eff = app.add_subcommand("efficiency", "Qubit efficiency c/(q+b)");
    eff->add_flag("--table", table, "Print the comparison table for all presets");
    eff->add_option("--key-bits", table_n, "Key length used for the table counts");
    eff->add_option("--counts", counts, "Compute eta for explicit c q b")->expected(3);
    eff->add_option("--format", eff_format, "Output format")->check(CLI::IsMember({"json", "text", "csv"}));
    eff->add_option("--out", eff_out, "Write output to this file");

    std::string vg_format = "text", vg_out;
    auto *vg = app.add_subcommand("verify-groups", "Exhaustive group checks and dense-coding tables");
    vg->add_option("--format", vg_format, "Output format")->check(CLI::IsMember({"json", "text"}));
    vg->add_option("--out", vg_out, "Write output to this file");

    std::vector<std::string> argv_store{"qka"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &a : argv_store) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, err, err);
        if (e.get_exit_code() != 0 && !dynamic_cast<const CLI::ConfigError *>(&e)) {
            err << app.help();
        }
        return kExitConfigError;
    }

    try {
        if (*run) {
            spec.config.party_count = protocol == "two-party" ? 2 : protocol == "three-party" ? 3 : 5;
            spec.config.five_party_state = state == "omega" ? FourQubitState::Omega : FourQubitState::Cluster;
            for (size_t k = 0; k < 4; k++) {
                spec.config.five_party_rounds[k] = rounds[k] - '0';
            }
            static const std::map<std::string, AdversaryKind> kinds{
                {"none", AdversaryKind::None},
                {"intercept-z", AdversaryKind::InterceptResendZ},
                {"intercept-bell", AdversaryKind::InterceptResendBell},
                {"dishonest-bob", AdversaryKind::DishonestBobReorder},
                {"dishonest-alice", AdversaryKind::DishonestAliceEarlyMeasure}};
            spec.adversary.kind = kinds.at(adversary);
            spec.adversary.scope = scope == "all-hops" ? AttackScope::AllHops : AttackScope::FirstHop;
            spec.format = kFormats.at(format);
            spec.validate();

            auto results = run_trials(spec);
            std::string text;
            if (spec.trials == 1) {
                text = spec.format == OutputFormat::Json ? result_to_json(results[0]).dump(2) + "\n"
                                                         : run_text(results[0]);
            } else {
                auto summary = batch_summary(results);
                if (spec.format == OutputFormat::Json) {
                    nlohmann::ordered_json j;
                    j["schema"] = "qka.batch/1";
                    j["spec"] = spec_json(spec);
                    j["summary"] = summary_to_json(summary);
                    auto runs = nlohmann::ordered_json::array();
                    for (const auto &r : results) {
                        runs.push_back(result_to_json(r, false));
                    }
                    j["runs"] = std::move(runs);
                    text = j.dump(2) + "\n";
                } else {
                    text = summary_text(summary);
                }
            }
            if (!emit(spec.out_path, text, out, err)) {
                return kExitConfigError;
            }
            bool any_abort = false;
            for (const auto &r : results) {
                any_abort |= r.aborted;
            }
            return spec.fail_on_abort && any_abort ? kExitAborted : kExitOk;
        }

        if (*eff) {
            std::string text;
            if (!counts.empty()) {
                ResourceCount rc{counts[0], counts[1], counts[2]};
                auto rep = qubit_efficiency(rc);
                if (eff_format == "json") {
                    nlohmann::ordered_json j{{"c", rc.c},
                                             {"q", rc.q},
                                             {"b", rc.b},
                                             {"eta_fraction", fraction_string(rep.eta)},
                                             {"eta_percent", rep.eta_percent}};
                    text = j.dump(2) + "\n";
                } else if (eff_format == "csv") {
                    text = "c,q,b,eta_fraction,eta_percent\n" + std::to_string(rc.c) + "," + std::to_string(rc.q) +
                           "," + std::to_string(rc.b) + "," + fraction_string(rep.eta) + "," + rep.eta_percent + "\n";
                } else {
                    text = "eta = " + fraction_string(rep.eta) + " = " + rep.eta_percent + "%\n";
                }
            } else if (table) {
                if (table_n == 0) {
                    throw std::invalid_argument("key length must be positive");
                }
                auto rows = efficiency_table(table_n);
                if (eff_format == "json") {
                    text = efficiency_json(rows).dump(2) + "\n";
                } else if (eff_format == "csv") {
                    text = efficiency_csv(rows);
                } else {
                    text = efficiency_text(rows);
                }
            } else {
                err << "error: efficiency needs --table or --counts C Q B\n" << eff->help();
                return kExitConfigError;
            }
            return emit(eff_out, text, out, err) ? kExitOk : kExitConfigError;
        }

        if (*vg) {
            auto report = verify_groups_report();
            std::string text = vg_format == "json" ? report.dump(2) + "\n" : verify_groups_text(report);
            if (!emit(vg_out, text, out, err)) {
                return kExitConfigError;
            }
            return report["all_passed"].get<bool>() ? kExitOk : kExitCheckFailed;
        }
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::domain_error &e) {
        err << "error: " << e.what() << '\n';
        return kExitConfigError;
    }
    return kExitConfigError;
}

}  // namespace qka
