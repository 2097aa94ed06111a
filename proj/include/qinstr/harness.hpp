// Copyright 2026 The qinstr Authors
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

/**
 * @file
 * Runs the full analysis on a scenario, either loaded from JSON or drawn by
 * the seeded random-instance suite, and renders the resulting report.
 *
 * Checks are always evaluated and reported in nats against tolerances given
 * in nats. The log base only changes how the entropy panel and the entropic
 * quantities are printed.
 */

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qinstr/hallmap.hpp"
#include "qinstr/json_io.hpp"

namespace qinstr {

inline constexpr std::uint64_t kDefaultMasterSeed = 20260415;
inline constexpr std::size_t kDefaultGlTrials = 100;
inline constexpr std::size_t kDefaultSuiteTrials = 200;

enum class LogBase { Nats, Bits };
enum class ReportFormat { Json, Markdown, Csv };

/// "json" / "markdown" / "csv"; anything else is UnknownFormat.
ReportFormat parse_format(const std::string &name);
/// "e" / "2"; anything else is InvalidArgument.
LogBase parse_log_base(const std::string &name);

struct ScenarioOptions {
    LogBase log_base = LogBase::Nats;
    Tolerances tol;
    std::optional<DensityMatrix> default_state;
    std::uint64_t seed = kDefaultMasterSeed;
    std::size_t gl_trials = kDefaultGlTrials;
};

struct Scenario {
    std::string name;
    Ensemble ensemble;
    Instrument instrument;
    ScenarioOptions options;
};

/// Throws SchemaError on malformed input, DimensionMismatch when the
/// ensemble and the instrument live on different spaces.
Scenario scenario_from_json(const Json &j);
Json scenario_to_json(const Scenario &s);

/// FNV-1a 64 of the canonical scenario JSON, as 16 hex digits.
std::string scenario_fingerprint(const Scenario &s);

std::vector<std::string> example_names();
/// Built-in desk scenarios; InvalidArgument for an unknown name.
Scenario example_scenario(const std::string &name);

struct NamedValue {
    std::string name;
    ExtReal value;

    friend bool operator==(const NamedValue &, const NamedValue &) = default;
};

struct AnalysisReport {
    std::string scenario;
    std::string fingerprint;
    std::uint64_t seed = 0;
    std::string unit = "nats";
    std::vector<NamedValue> panel;
    std::vector<NamedValue> quantities;
    BoundReport checks;
    bool hall_skipped = false;
    std::string hall_skip_reason;
    bool overall_pass = false;

    const BoundRecord *find_check(const std::string &name) const;
    std::optional<ExtReal> panel_value(const std::string &name) const;
    std::optional<ExtReal> quantity(const std::string &name) const;

    friend bool operator==(const AnalysisReport &, const AnalysisReport &) = default;
};

AnalysisReport run_scenario(const Scenario &s);

/// 0 when every check passes, 1 otherwise.
int exit_code_for(const AnalysisReport &r);

/// Unset sizes are drawn per trial: d1, d2 from {2, 3}, letters and
/// outcomes from {2, 3, 4}, Kraus operators per outcome from {1, 2}.
struct RandomSuiteParams {
    std::optional<Index> d1;
    std::optional<Index> d2;
    std::optional<std::size_t> letters;
    std::optional<std::size_t> outcomes;
    std::optional<std::size_t> kraus;
    std::size_t trials = kDefaultSuiteTrials;
    std::uint64_t master_seed = kDefaultMasterSeed;
    Tolerances tol;
    std::size_t gl_trials = kDefaultGlTrials;
};

struct SuiteSummary {
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::size_t hall_skipped = 0;
    std::map<std::string, double> min_slack;  // per check name
    double max_mean_chi_given_out = 0.0;
    double max_d_term = 0.0;
    std::size_t rank1_instruments = 0;
    std::size_t rank1_purity_preserving = 0;
    std::size_t multi_kraus_instruments = 0;
    std::size_t multi_kraus_not_preserving = 0;
    double runtime_seconds = 0.0;  // never serialized

    friend bool operator==(const SuiteSummary &a, const SuiteSummary &b);
};

struct RandomSuiteResult {
    std::vector<AnalysisReport> reports;
    SuiteSummary summary;
};

/// Scenario of trial `k`: seed splitmix64(master_seed + k) drives every draw.
Scenario random_scenario(const RandomSuiteParams &p, std::size_t k);

RandomSuiteResult run_random_suite(const RandomSuiteParams &p);

Json report_to_json(const AnalysisReport &r);
AnalysisReport report_from_json(const Json &j);
std::string emit_report(const AnalysisReport &r, ReportFormat format);
std::string emit_suite(const RandomSuiteResult &s, ReportFormat format);

}  // namespace qinstr
