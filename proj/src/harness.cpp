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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

#include "qinstr/error.hpp"
#include "qinstr/random.hpp"

namespace qinstr {

ReportFormat parse_format(const std::string &name) {
    if (name == "json") {
        return ReportFormat::Json;
    }
    if (name == "markdown" || name == "md") {
        return ReportFormat::Markdown;
    }
    if (name == "csv") {
        return ReportFormat::Csv;
    }
    throw Error(ErrorCode::UnknownFormat, "unknown report format '" + name + "'");
}

LogBase parse_log_base(const std::string &name) {
    if (name == "e") {
        return LogBase::Nats;
    }
    if (name == "2") {
        return LogBase::Bits;
    }
    throw Error(ErrorCode::InvalidArgument, "log base must be 'e' or '2', got '" + name + "'");
}

namespace {

const Json *optional_field(const Json &j, const char *key) {
    if (j.is_object() && j.contains(key)) {
        return &j.at(key);
    }
    return nullptr;
}

double positive_number(const Json &j, const char *what) {
    if (!j.is_number() || !(j.get<double>() > 0.0)) {
        throw Error(ErrorCode::SchemaError, std::string(what) + " must be a positive number");
    }
    return j.get<double>();
}

}  // namespace

Scenario scenario_from_json(const Json &j) {
    if (!j.is_object() || !j.contains("ensemble") || !j.contains("instrument")) {
        throw Error(ErrorCode::SchemaError, "scenario needs 'ensemble' and 'instrument'");
    }
    std::string name = "scenario";
    if (const Json *n = optional_field(j, "name")) {
        if (!n->is_string()) {
            throw Error(ErrorCode::SchemaError, "'name' must be a string");
        }
        name = n->get<std::string>();
    }
    Ensemble e = ensemble_from_json(j.at("ensemble"));
    Instrument ins = instrument_from_json(j.at("instrument"));
    if (e.dim() != ins.dim_in()) {
        throw Error(ErrorCode::DimensionMismatch, "ensemble dimension " + std::to_string(e.dim()) +
                                                      " does not match instrument input dimension " +
                                                      std::to_string(ins.dim_in()));
    }

    ScenarioOptions opt;
    if (const Json *o = optional_field(j, "options")) {
        if (!o->is_object()) {
            throw Error(ErrorCode::SchemaError, "'options' must be an object");
        }
        if (const Json *x = optional_field(*o, "log_base")) {
            if (!x->is_string()) {
                throw Error(ErrorCode::SchemaError, "'log_base' must be \"e\" or \"2\"");
            }
            opt.log_base = parse_log_base(x->get<std::string>());
        }
        if (const Json *x = optional_field(*o, "tol")) {
            opt.tol.bound = positive_number(*x, "'tol'");
        }
        if (const Json *x = optional_field(*o, "identity_tol")) {
            opt.tol.identity = positive_number(*x, "'identity_tol'");
        }
        if (const Json *x = optional_field(*o, "default_state")) {
            DensityMatrix d = DensityMatrix::validate(HermMatrix(matrix_from_json(*x)));
            if (d.dim() != ins.dim_out()) {
                throw Error(ErrorCode::DimensionMismatch, "default state must live on the output space");
            }
            opt.default_state = std::move(d);
        }
        if (const Json *x = optional_field(*o, "seed")) {
            if (!x->is_number_unsigned()) {
                throw Error(ErrorCode::SchemaError, "'seed' must be a non-negative integer");
            }
            opt.seed = x->get<std::uint64_t>();
        }
        if (const Json *x = optional_field(*o, "gl_trials")) {
            if (!x->is_number_unsigned()) {
                throw Error(ErrorCode::SchemaError, "'gl_trials' must be a non-negative integer");
            }
            opt.gl_trials = x->get<std::size_t>();
        }
    }
    return Scenario{std::move(name), std::move(e), std::move(ins), std::move(opt)};
}

Json scenario_to_json(const Scenario &s) {
    Json opt{{"log_base", s.options.log_base == LogBase::Nats ? "e" : "2"},
             {"tol", s.options.tol.bound},
             {"identity_tol", s.options.tol.identity},
             {"seed", s.options.seed},
             {"gl_trials", s.options.gl_trials}};
    if (s.options.default_state) {
        opt["default_state"] = matrix_to_json(s.options.default_state->matrix());
    }
    return Json{{"name", s.name},
                {"ensemble", ensemble_to_json(s.ensemble)},
                {"instrument", instrument_to_json(s.instrument)},
                {"options", std::move(opt)}};
}

std::string scenario_fingerprint(const Scenario &s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : scenario_to_json(s).dump()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::vector<std::string> example_names() {
    return {"orthogonal-projective", "zero-one-plus", "identity-instrument"};
}

Scenario example_scenario(const std::string &name) {
    const CVector zero = CVector::Unit(2, 0);
    const CVector one = CVector::Unit(2, 1);
    const CVector plus = (zero + one) / std::sqrt(2.0);
    if (name == "orthogonal-projective") {
        return Scenario{name,
                        Ensemble({"0", "1"}, {0.5, 0.5}, {DensityMatrix::pure(zero), DensityMatrix::pure(one)}),
                        computational_instrument(2),
                        {}};
    }
    if (name == "zero-one-plus") {
        return Scenario{name,
                        Ensemble({"0", "+"}, {0.5, 0.5}, {DensityMatrix::pure(zero), DensityMatrix::pure(plus)}),
                        computational_instrument(2),
                        {}};
    }
    if (name == "identity-instrument") {
        return Scenario{name,
                        Ensemble({"0", "+"}, {0.5, 0.5}, {DensityMatrix::pure(zero), DensityMatrix::pure(plus)}),
                        identity_instrument(2),
                        {}};
    }
    throw Error(ErrorCode::InvalidArgument, "unknown example '" + name + "'");
}

namespace {

template <typename T>
auto find_named(const std::vector<T> &v, const std::string &name) {
    return std::find_if(v.begin(), v.end(), [&](const T &x) { return x.name == name; });
}

std::vector<NamedValue> panel_values(const EntropyPanel &p) {
    return {{"chi_initial", p.chi_initial},
            {"chi_post", p.chi_post},
            {"chi_out", p.chi_out},
            {"chi_joint", p.chi_joint},
            {"mean_chi_given_out", p.mean_chi_given_out},
            {"mean_chi_given_in", p.mean_chi_given_in},
            {"classical_info", p.classical_info},
            {"tripartite", p.tripartite}};
}

double max_panel_gap(const EntropyPanel &a, const EntropyPanel &b) {
    const auto va = panel_values(a);
    const auto vb = panel_values(b);
    double gap = 0.0;
    for (std::size_t k = 0; k < va.size(); ++k) {
        if (va[k].value.is_finite() != vb[k].value.is_finite()) {
            return std::numeric_limits<double>::infinity();
        }
        if (va[k].value.is_finite()) {
            gap = std::max(gap, std::abs(va[k].value.value() - vb[k].value.value()));
        }
    }
    return gap;
}

ExtReal in_unit(ExtReal x, LogBase base) {
    return base == LogBase::Bits ? ExtReal(nats_to_bits(x.value())) : x;
}

void append(BoundReport &dst, const BoundReport &src) {
    dst.insert(dst.end(), src.begin(), src.end());
}

}  // namespace

const BoundRecord *AnalysisReport::find_check(const std::string &name) const {
    const auto it = find_named(checks, name);
    return it == checks.end() ? nullptr : &*it;
}

std::optional<ExtReal> AnalysisReport::panel_value(const std::string &name) const {
    const auto it = find_named(panel, name);
    return it == panel.end() ? std::nullopt : std::optional<ExtReal>(it->value);
}

std::optional<ExtReal> AnalysisReport::quantity(const std::string &name) const {
    const auto it = find_named(quantities, name);
    return it == quantities.end() ? std::nullopt : std::optional<ExtReal>(it->value);
}

AnalysisReport run_scenario(const Scenario &s) {
    const ScenarioOptions &opt = s.options;
    const Tolerances &tol = opt.tol;
    const Ensemble &e = s.ensemble;
    const Instrument &ins = s.instrument;
    if (e.dim() != ins.dim_in()) {
        throw Error(ErrorCode::DimensionMismatch, "ensemble and instrument input spaces differ");
    }

    AnalysisReport r;
    r.scenario = s.name;
    r.fingerprint = scenario_fingerprint(s);
    r.seed = opt.seed;
    r.unit = opt.log_base == LogBase::Nats ? "nats" : "bits";
    auto entropic = [&](const std::string &name, ExtReal v) { r.quantities.push_back({name, in_unit(v, opt.log_base)}); };
    auto plain = [&](const std::string &name, ExtReal v) { r.quantities.push_back({name, v}); };

    const MeasurementStatistics ms = analyze(e, ins, opt.default_state);
    const EntropyPanel panel = entropy_panel(ms, e);
    for (const NamedValue &v : panel_values(panel)) {
        r.panel.push_back({v.name, in_unit(v.value, opt.log_base)});
    }

    r.checks.push_back(BoundRecord::equal("mixture_identities", mixture_residuals(ms).max(), 0.0, tol.identity));
    r.checks.push_back(BoundRecord::equal("classical_info_entropy_route", classical_mutual_info_from_entropies(ms),
                                          panel.classical_info, tol.identity));
    append(r.checks, check_identities(panel, tol));
    append(r.checks, check_bounds(panel, tol));

    // Zero-probability outcomes must not leak the fallback state into any number.
    const DensityMatrix primary = opt.default_state.value_or(DensityMatrix::maximally_mixed(ins.dim_out()));
    const DensityMatrix ground = DensityMatrix::basis_state(ins.dim_out(), 0);
    const DensityMatrix alternate = max_abs_diff(primary.matrix(), ground.matrix()) < kSupportCutoff
                                        ? DensityMatrix::maximally_mixed(ins.dim_out())
                                        : ground;
    const EntropyPanel alt_panel = entropy_panel(analyze(e, ins, alternate), e);
    r.checks.push_back(
        BoundRecord::equal("default_state_invariance", max_panel_gap(panel, alt_panel), 0.0, tol.default_state));

    const GroenewoldLindbladResult gl = groenewold_lindblad_check(ins, opt.gl_trials, opt.seed, tol);
    append(r.checks, gl.report);

    const CompoundStates cs = compound_states(ms, e);
    append(r.checks, compound_consistency(cs, ms, e, tol));
    append(r.checks, scutaru_chains(ms, e, tol));

    entropic("info_gain_apriori", quantum_info_gain(ins, ms.a_priori));
    plain("gl_purity_preserving", gl.purity_preserving ? 1.0 : 0.0);
    plain("gl_min_pure_input_purity", gl.min_pure_input_purity);
    if (gl.min_info_gain) {
        entropic("gl_min_info_gain", *gl.min_info_gain);
    }
    plain("max_kraus_rank", static_cast<double>(ins.max_kraus_rank()));

    const double min_eig = ms.a_priori.spectrum().eigenvalues(0);
    if (min_eig <= kInvertibilityTol) {
        r.hall_skipped = true;
        r.hall_skip_reason = "a priori state is singular (smallest eigenvalue " + to_string(min_eig) + ")";
    } else {
        append(r.checks, verify_duality(e, ins, tol));
        const BoundRecord hall = hall_bound(e, ins, tol);
        r.checks.push_back(hall);
        const NewBoundResult nb = new_bound(e, ins, tol);
        append(r.checks, nb.report);
        const double d_generic = d_term_generic(e, ins);
        r.checks.push_back(BoundRecord::equal("dual_info_gain_routes", nb.d_term, d_generic, tol.identity));

        entropic("hall_bound", hall.rhs);
        entropic("d_term", nb.d_term);
        entropic("new_bound", nb.value);
        entropic("new_minus_hall", nb.value - hall.rhs.value());
        entropic("dual_min_info_gain", nb.min_sigma_gain);
    }

    r.overall_pass = all_pass(r.checks);
    return r;
}

int exit_code_for(const AnalysisReport &r) {
    return r.overall_pass ? 0 : 1;
}

bool operator==(const SuiteSummary &a, const SuiteSummary &b) {
    return a.trials == b.trials && a.failures == b.failures && a.hall_skipped == b.hall_skipped &&
           a.min_slack == b.min_slack && a.max_mean_chi_given_out == b.max_mean_chi_given_out &&
           a.max_d_term == b.max_d_term && a.rank1_instruments == b.rank1_instruments &&
           a.rank1_purity_preserving == b.rank1_purity_preserving &&
           a.multi_kraus_instruments == b.multi_kraus_instruments &&
           a.multi_kraus_not_preserving == b.multi_kraus_not_preserving;
}

Scenario random_scenario(const RandomSuiteParams &p, std::size_t k) {
    const std::uint64_t seed = splitmix64(p.master_seed + k);
    Rng rng(seed);
    auto pick = [&rng](std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };
    const Index d1 = p.d1 ? *p.d1 : static_cast<Index>(pick(2, 3));
    const Index d2 = p.d2 ? *p.d2 : static_cast<Index>(pick(2, 3));
    const std::size_t letters = p.letters ? *p.letters : pick(2, 4);
    const std::size_t outcomes = p.outcomes ? *p.outcomes : pick(2, 4);
    const std::size_t kraus = p.kraus ? *p.kraus : pick(1, 2);
    if (d1 <= 0 || d2 <= 0 || letters == 0 || outcomes == 0 || kraus == 0) {
        throw Error(ErrorCode::InvalidArgument, "random suite sizes must be positive");
    }

    Ensemble e = random_ensemble(rng, d1, letters);
    Instrument ins = random_instrument(d1, d2, outcomes, kraus, rng());
    ScenarioOptions opt;
    opt.tol = p.tol;
    opt.seed = seed;
    opt.gl_trials = p.gl_trials;
    return Scenario{"random-" + std::to_string(k), std::move(e), std::move(ins), std::move(opt)};
}

RandomSuiteResult run_random_suite(const RandomSuiteParams &p) {
    const auto start = std::chrono::steady_clock::now();
    RandomSuiteResult out;
    SuiteSummary &sum = out.summary;
    for (std::size_t k = 0; k < p.trials; ++k) {
        const Scenario s = random_scenario(p, k);
        AnalysisReport r = run_scenario(s);

        ++sum.trials;
        if (!r.overall_pass) {
            ++sum.failures;
        }
        if (r.hall_skipped) {
            ++sum.hall_skipped;
        }
        for (const BoundRecord &b : r.checks) {
            if (b.relation != Relation::LessEq) {
                continue;
            }
            auto [it, inserted] = sum.min_slack.emplace(b.name, b.slack.value());
            if (!inserted) {
                it->second = std::min(it->second, b.slack.value());
            }
        }
        sum.max_mean_chi_given_out = std::max(sum.max_mean_chi_given_out, r.panel_value("mean_chi_given_out")->value());
        if (auto d = r.quantity("d_term")) {
            sum.max_d_term = std::max(sum.max_d_term, d->value());
        }
        const bool preserving = r.quantity("gl_purity_preserving")->value() == 1.0;
        if (s.instrument.max_kraus_rank() == 1) {
            ++sum.rank1_instruments;
            sum.rank1_purity_preserving += preserving ? 1 : 0;
        } else {
            ++sum.multi_kraus_instruments;
            sum.multi_kraus_not_preserving += preserving ? 0 : 1;
        }
        out.reports.push_back(std::move(r));
    }
    sum.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

}  // namespace qinstr
