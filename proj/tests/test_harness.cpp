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

#include "qinstr/harness.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "test_support.hpp"

using namespace qinstr;
using namespace qinstr::testing;

namespace {

std::size_t count_lines(const std::string &s) {
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

Json zero_plus_json() {
    return scenario_to_json(example_scenario("zero-one-plus"));
}

}  // namespace

TEST(examples, all_pass) {
    for (const std::string &name : example_names()) {
        const AnalysisReport r = run_scenario(example_scenario(name));
        EXPECT_TRUE(r.overall_pass) << name;
        EXPECT_EQ(exit_code_for(r), 0);
        EXPECT_FALSE(r.hall_skipped) << name;
    }
    EXPECT_QINSTR_ERROR(example_scenario("nope"), ErrorCode::InvalidArgument);
}

TEST(examples, zero_plus_values) {
    const AnalysisReport r = run_scenario(example_scenario("zero-one-plus"));
    EXPECT_NEAR(r.panel_value("classical_info")->value(), 0.21576155433883565, 1e-12);
    EXPECT_NEAR(r.panel_value("chi_initial")->value(), 0.4164955306996875, 1e-12);
    EXPECT_NEAR(r.find_check("sww")->slack.value(), 0.20073397636085183, 1e-12);
    EXPECT_NEAR(r.quantity("hall_bound")->value(), 0.41649553069968703, 1e-12);
    EXPECT_NEAR(r.quantity("d_term")->value(), 0.0, 1e-12);
}

TEST(examples, orthogonal_holevo_slack_zero) {
    const AnalysisReport r = run_scenario(example_scenario("orthogonal-projective"));
    EXPECT_NEAR(r.find_check("holevo")->slack.value(), 0.0, 1e-12);
}

TEST(examples, identity_instrument_has_no_classical_information) {
    const AnalysisReport r = run_scenario(example_scenario("identity-instrument"));
    EXPECT_NEAR(r.panel_value("classical_info")->value(), 0.0, 1e-14);
    EXPECT_NEAR(r.quantity("info_gain_apriori")->value(), 0.0, 1e-12);
    EXPECT_EQ(r.quantity("gl_purity_preserving")->value(), 1.0);
}

TEST(scenario_json, roundtrip_and_fingerprint) {
    const Scenario s = example_scenario("zero-one-plus");
    const Scenario back = scenario_from_json(scenario_to_json(s));
    EXPECT_EQ(scenario_fingerprint(s), scenario_fingerprint(back));
    Scenario reseeded = back;
    reseeded.options.seed += 1;
    EXPECT_NE(scenario_fingerprint(s), scenario_fingerprint(reseeded));
    EXPECT_EQ(scenario_fingerprint(s).size(), 16u);
}

TEST(scenario_json, accepts_real_shorthand_and_options) {
    const Json j = Json::parse(R"({
      "name": "short",
      "ensemble": {"letters": ["0", "1"], "probs": [0.5, 0.5],
                   "states": [[[1, 0], [0, 0]], [[0, 0], [0, 1]]]},
      "instrument": {"dim_in": 2, "dim_out": 2, "outcomes": ["a", "b"],
                     "kraus": [[[[1, 0], [0, 0]]], [[[0, 0], [0, 1]]]]},
      "options": {"log_base": "2", "tol": 1e-7, "seed": 5, "gl_trials": 10,
                  "default_state": [[1, 0], [0, 0]]}
    })");
    const Scenario s = scenario_from_json(j);
    EXPECT_EQ(s.name, "short");
    EXPECT_EQ(s.options.log_base, LogBase::Bits);
    EXPECT_EQ(s.options.tol.bound, 1e-7);
    EXPECT_EQ(s.options.seed, 5u);
    ASSERT_TRUE(s.options.default_state.has_value());
    const AnalysisReport r = run_scenario(s);
    EXPECT_EQ(r.unit, "bits");
    EXPECT_NEAR(r.panel_value("classical_info")->value(), 1.0, 1e-12);
    EXPECT_TRUE(r.overall_pass);
}

TEST(scenario_json, schema_errors) {
    Json j = zero_plus_json();
    j.erase("instrument");
    EXPECT_QINSTR_ERROR(scenario_from_json(j), ErrorCode::SchemaError);

    j = zero_plus_json();
    j["ensemble"]["states"][0][0][0] = "x";
    EXPECT_QINSTR_ERROR(scenario_from_json(j), ErrorCode::SchemaError);

    j = zero_plus_json();
    j["instrument"]["dim_in"] = -1;
    EXPECT_QINSTR_ERROR(scenario_from_json(j), ErrorCode::SchemaError);

    j = zero_plus_json();
    j["options"]["tol"] = -1;
    EXPECT_QINSTR_ERROR(scenario_from_json(j), ErrorCode::SchemaError);

    j = zero_plus_json();
    j["options"]["log_base"] = "10";
    EXPECT_QINSTR_ERROR(scenario_from_json(j), ErrorCode::InvalidArgument);
}

TEST(scenario_json, dimension_mismatch) {
    Json j = zero_plus_json();
    j["instrument"] = instrument_to_json(computational_instrument(3));
    EXPECT_QINSTR_ERROR(scenario_from_json(j), ErrorCode::DimensionMismatch);
}

TEST(run_scenario, singular_apriori_state_skips_dual_section) {
    const DensityMatrix zero = DensityMatrix::basis_state(3, 0);
    const DensityMatrix one = DensityMatrix::basis_state(3, 1);
    const Scenario s{"singular", Ensemble({"a", "b"}, {0.5, 0.5}, {zero, one}), computational_instrument(3), {}};
    const AnalysisReport r = run_scenario(s);
    EXPECT_TRUE(r.hall_skipped);
    EXPECT_NE(r.hall_skip_reason.find("singular"), std::string::npos);
    EXPECT_EQ(r.find_check("hall"), nullptr);
    EXPECT_NE(r.find_check("holevo"), nullptr);
    EXPECT_TRUE(r.overall_pass);
}

TEST(run_scenario, dead_outcome_does_not_depend_on_default_state) {
    Scenario s{"dead", Ensemble({"z"}, {1.0}, {DensityMatrix::basis_state(2, 0)}), computational_instrument(2), {}};
    const AnalysisReport a = run_scenario(s);
    s.options.default_state = DensityMatrix::basis_state(2, 1);
    const AnalysisReport b = run_scenario(s);
    EXPECT_TRUE(a.find_check("default_state_invariance")->pass);
    EXPECT_EQ(a.panel, b.panel);
}

TEST(run_scenario, failing_check_gives_exit_code_one) {
    Scenario s = example_scenario("orthogonal-projective");
    s.options.tol.bound = -1e-3;  // demands slack >= 1e-3; the Holevo slack is 0
    const AnalysisReport r = run_scenario(s);
    EXPECT_FALSE(r.find_check("holevo")->pass);
    EXPECT_FALSE(r.overall_pass);
    EXPECT_EQ(exit_code_for(r), 1);
}

TEST(run_scenario, bits_are_nats_over_ln2) {
    Scenario s = example_scenario("zero-one-plus");
    const AnalysisReport nats = run_scenario(s);
    s.options.log_base = LogBase::Bits;
    const AnalysisReport bits = run_scenario(s);
    for (std::size_t k = 0; k < nats.panel.size(); ++k) {
        EXPECT_NEAR(bits.panel[k].value.value(), nats.panel[k].value.value() / std::log(2.0), 1e-14);
    }
    EXPECT_EQ(bits.checks.size(), nats.checks.size());
    EXPECT_EQ(bits.find_check("holevo")->slack, nats.find_check("holevo")->slack);
}

TEST(report, json_roundtrip_is_lossless) {
    AnalysisReport r = run_scenario(example_scenario("zero-one-plus"));
    r.checks.push_back(BoundRecord::less_eq("synthetic_infinite", 1.0, ExtReal::infinity(), 1e-8));
    EXPECT_EQ(report_from_json(Json::parse(emit_report(r, ReportFormat::Json))), r);
    EXPECT_QINSTR_ERROR(report_from_json(Json::object()), ErrorCode::SchemaError);
}

TEST(report, deterministic_bytes) {
    const std::string a = emit_report(run_scenario(example_scenario("zero-one-plus")), ReportFormat::Json);
    const std::string b = emit_report(run_scenario(example_scenario("zero-one-plus")), ReportFormat::Json);
    EXPECT_EQ(a, b);
}

TEST(report, markdown_and_csv_rows) {
    const AnalysisReport r = run_scenario(example_scenario("zero-one-plus"));
    const std::string csv = emit_report(r, ReportFormat::Csv);
    EXPECT_EQ(count_lines(csv), r.checks.size() + 1);
    const std::string md = emit_report(r, ReportFormat::Markdown);
    for (const BoundRecord &b : r.checks) {
        EXPECT_NE(md.find("| " + b.name + " |"), std::string::npos) << b.name;
    }
}

TEST(report, unknown_format) {
    EXPECT_QINSTR_ERROR(parse_format("yaml"), ErrorCode::UnknownFormat);
    EXPECT_EQ(parse_format("md"), ReportFormat::Markdown);
}

TEST(random_suite, single_trial_is_deterministic) {
    RandomSuiteParams p;
    p.trials = 1;
    p.master_seed = 77;
    const RandomSuiteResult a = run_random_suite(p);
    const RandomSuiteResult b = run_random_suite(p);
    EXPECT_EQ(emit_suite(a, ReportFormat::Json), emit_suite(b, ReportFormat::Json));
    EXPECT_EQ(a.summary, b.summary);
    p.master_seed = 78;
    EXPECT_NE(emit_suite(run_random_suite(p), ReportFormat::Json), emit_suite(a, ReportFormat::Json));
}

TEST(random_suite, fixed_sizes_are_respected) {
    RandomSuiteParams p;
    p.trials = 3;
    p.d1 = 3;
    p.d2 = 2;
    p.letters = 2;
    p.outcomes = 4;
    p.kraus = 1;
    for (std::size_t k = 0; k < p.trials; ++k) {
        const Scenario s = random_scenario(p, k);
        EXPECT_EQ(s.ensemble.dim(), 3);
        EXPECT_EQ(s.instrument.dim_out(), 2);
        EXPECT_EQ(s.ensemble.size(), 2u);
        EXPECT_EQ(s.instrument.size(), 4u);
        EXPECT_EQ(s.instrument.max_kraus_rank(), 1u);
    }
    EXPECT_EQ(run_random_suite(p).summary.failures, 0u);
}

TEST(random_suite, single_letter_has_zero_information) {
    RandomSuiteParams p;
    p.trials = 5;
    p.letters = 1;
    const RandomSuiteResult r = run_random_suite(p);
    for (const AnalysisReport &rep : r.reports) {
        EXPECT_NEAR(rep.panel_value("classical_info")->value(), 0.0, 1e-12);
    }
    EXPECT_EQ(r.summary.failures, 0u);
}

TEST(random_suite, csv_has_one_row_per_check) {
    RandomSuiteParams p;
    p.trials = 2;
    const RandomSuiteResult r = run_random_suite(p);
    std::size_t checks = 0;
    for (const AnalysisReport &rep : r.reports) {
        checks += rep.checks.size();
    }
    EXPECT_EQ(count_lines(emit_suite(r, ReportFormat::Csv)), checks + 1);
}
