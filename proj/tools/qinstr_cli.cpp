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

// Exit codes: 0 every check passed, 1 some check failed, 2 bad input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qinstr/error.hpp"
#include "qinstr/harness.hpp"

namespace {

constexpr int kExitInputError = 2;

std::optional<double> env_tolerance() {
    const char *raw = std::getenv("QINSTR_TOL");
    if (raw == nullptr || *raw == '\0') {
        return std::nullopt;
    }
    char *end = nullptr;
    const double v = std::strtod(raw, &end);
    if (*end != '\0' || !(v > 0.0)) {
        throw qinstr::Error(qinstr::ErrorCode::InvalidArgument, std::string("QINSTR_TOL is not a positive number: ") + raw);
    }
    return v;
}

qinstr::Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw qinstr::Error(qinstr::ErrorCode::InvalidArgument, "cannot open " + path);
    }
    try {
        return qinstr::Json::parse(in);
    } catch (const qinstr::Json::parse_error &ex) {
        throw qinstr::Error(qinstr::ErrorCode::SchemaError, path + ": " + ex.what());
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Information bounds for quantum instruments"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string format = "json";
    std::string base = "e";
    std::optional<double> tol;
    auto *analyze = app.add_subcommand("analyze", "Run every check on a scenario file");
    analyze->add_option("scenario", scenario_path, "Scenario JSON")->required();
    analyze->add_option("--format", format, "json | markdown | csv");
    analyze->add_option("--base", base, "Logarithm base for printed entropies: e | 2");
    analyze->add_option("--tol", tol, "Inequality slack tolerance (nats)");

    qinstr::RandomSuiteParams params;
    std::optional<long long> d1, d2;
    std::optional<std::size_t> letters, outcomes, kraus;
    auto *random = app.add_subcommand("random", "Seeded random-instance suite");
    random->add_option("--d1", d1, "Input dimension (default: drawn from {2,3})");
    random->add_option("--d2", d2, "Output dimension (default: drawn from {2,3})");
    random->add_option("--letters", letters, "Ensemble size (default: drawn from {2,3,4})");
    random->add_option("--outcomes", outcomes, "Instrument outcomes (default: drawn from {2,3,4})");
    random->add_option("--kraus", kraus, "Kraus operators per outcome (default: drawn from {1,2})");
    random->add_option("--trials", params.trials, "Number of trials");
    random->add_option("--seed", params.master_seed, "Master seed");
    random->add_option("--format", format, "json | markdown | csv");
    random->add_option("--tol", tol, "Inequality slack tolerance (nats)");

    std::string example_name;
    auto *example = app.add_subcommand("example", "Print a built-in scenario as JSON");
    example->add_option("name", example_name, "orthogonal-projective | zero-one-plus | identity-instrument")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    try {
        const qinstr::ReportFormat fmt = qinstr::parse_format(format);
        std::optional<double> bound_tol = env_tolerance();
        if (tol) {
            if (!(*tol > 0.0)) {
                throw qinstr::Error(qinstr::ErrorCode::InvalidArgument, "--tol must be positive");
            }
            bound_tol = tol;
        }

        if (*analyze) {
            qinstr::Scenario s = qinstr::scenario_from_json(read_json_file(scenario_path));
            if (bound_tol) {
                s.options.tol.bound = *bound_tol;
            }
            if (analyze->count("--base") > 0) {
                s.options.log_base = qinstr::parse_log_base(base);
            }
            const qinstr::AnalysisReport r = qinstr::run_scenario(s);
            std::cout << qinstr::emit_report(r, fmt);
            return qinstr::exit_code_for(r);
        }

        if (*random) {
            if ((d1 && *d1 <= 0) || (d2 && *d2 <= 0) || (letters && *letters == 0) || (outcomes && *outcomes == 0) ||
                (kraus && *kraus == 0) || params.trials == 0) {
                throw qinstr::Error(qinstr::ErrorCode::InvalidArgument, "random suite parameters must be positive");
            }
            if (d1) {
                params.d1 = static_cast<qinstr::Index>(*d1);
            }
            if (d2) {
                params.d2 = static_cast<qinstr::Index>(*d2);
            }
            params.letters = letters;
            params.outcomes = outcomes;
            params.kraus = kraus;
            if (bound_tol) {
                params.tol.bound = *bound_tol;
            }
            const qinstr::RandomSuiteResult result = qinstr::run_random_suite(params);
            std::cout << qinstr::emit_suite(result, fmt);
            std::cerr << "random suite: " << result.summary.trials << " trials in " << result.summary.runtime_seconds
                      << " s\n";
            return result.summary.failures == 0 ? 0 : 1;
        }

        if (*example) {
            std::cout << qinstr::scenario_to_json(qinstr::example_scenario(example_name)).dump(2) << "\n";
            return 0;
        }
    } catch (const qinstr::Error &e) {
        std::cerr << "error [" << qinstr::to_string(e.code()) << "]: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
