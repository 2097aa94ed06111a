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

#include <sstream>

#include "qinstr/error.hpp"
#include "qinstr/harness.hpp"

namespace qinstr {

namespace {

const char *relation_name(Relation r) {
    return r == Relation::LessEq ? "le" : "eq";
}

Relation relation_from(const std::string &s) {
    if (s == "le") {
        return Relation::LessEq;
    }
    if (s == "eq") {
        return Relation::Equal;
    }
    throw Error(ErrorCode::SchemaError, "unknown relation '" + s + "'");
}

Json named_values_to_json(const std::vector<NamedValue> &v) {
    Json out = Json::array();
    for (const NamedValue &x : v) {
        out.push_back(Json{{"name", x.name}, {"value", ext_real_to_json(x.value)}});
    }
    return out;
}

std::vector<NamedValue> named_values_from_json(const Json &j) {
    std::vector<NamedValue> out;
    for (const Json &x : j) {
        out.push_back({x.at("name").get<std::string>(), ext_real_from_json(x.at("value"))});
    }
    return out;
}

Json record_to_json(const BoundRecord &b) {
    return Json{{"name", b.name},
                {"relation", relation_name(b.relation)},
                {"lhs", ext_real_to_json(b.lhs)},
                {"rhs", ext_real_to_json(b.rhs)},
                {"slack", ext_real_to_json(b.slack)},
                {"pass", b.pass}};
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return out + "\"";
}

void csv_rows(std::ostringstream &os, const AnalysisReport &r, const std::string &prefix) {
    for (const BoundRecord &b : r.checks) {
        os << prefix << csv_field(b.name) << ',' << relation_name(b.relation) << ',' << to_string(b.lhs) << ','
           << to_string(b.rhs) << ',' << to_string(b.slack) << ',' << (b.pass ? "true" : "false") << '\n';
    }
}

void markdown_checks(std::ostringstream &os, const AnalysisReport &r) {
    os << "| name | relation | lhs | rhs | slack | pass |\n";
    os << "|---|---|---|---|---|---|\n";
    for (const BoundRecord &b : r.checks) {
        os << "| " << b.name << " | " << (b.relation == Relation::LessEq ? "<=" : "==") << " | " << to_string(b.lhs)
           << " | " << to_string(b.rhs) << " | " << to_string(b.slack) << " | " << (b.pass ? "pass" : "FAIL")
           << " |\n";
    }
}

void markdown_values(std::ostringstream &os, const std::vector<NamedValue> &v) {
    os << "| name | value |\n|---|---|\n";
    for (const NamedValue &x : v) {
        os << "| " << x.name << " | " << to_string(x.value) << " |\n";
    }
}

Json summary_to_json(const SuiteSummary &s) {
    Json slack = Json::object();
    for (const auto &[name, v] : s.min_slack) {
        slack[name] = ext_real_to_json(v);
    }
    return Json{{"trials", s.trials},
                {"failures", s.failures},
                {"hall_skipped", s.hall_skipped},
                {"min_slack", std::move(slack)},
                {"max_mean_chi_given_out", s.max_mean_chi_given_out},
                {"max_d_term", s.max_d_term},
                {"rank1_instruments", s.rank1_instruments},
                {"rank1_purity_preserving", s.rank1_purity_preserving},
                {"multi_kraus_instruments", s.multi_kraus_instruments},
                {"multi_kraus_not_preserving", s.multi_kraus_not_preserving}};
}

}  // namespace

Json report_to_json(const AnalysisReport &r) {
    Json checks = Json::array();
    for (const BoundRecord &b : r.checks) {
        checks.push_back(record_to_json(b));
    }
    return Json{{"scenario", r.scenario},
                {"fingerprint", r.fingerprint},
                {"seed", r.seed},
                {"unit", r.unit},
                {"panel", named_values_to_json(r.panel)},
                {"quantities", named_values_to_json(r.quantities)},
                {"checks", std::move(checks)},
                {"hall", Json{{"skipped", r.hall_skipped}, {"reason", r.hall_skip_reason}}},
                {"overall_pass", r.overall_pass}};
}

AnalysisReport report_from_json(const Json &j) {
    try {
        AnalysisReport r;
        r.scenario = j.at("scenario").get<std::string>();
        r.fingerprint = j.at("fingerprint").get<std::string>();
        r.seed = j.at("seed").get<std::uint64_t>();
        r.unit = j.at("unit").get<std::string>();
        r.panel = named_values_from_json(j.at("panel"));
        r.quantities = named_values_from_json(j.at("quantities"));
        for (const Json &c : j.at("checks")) {
            r.checks.push_back(BoundRecord{c.at("name").get<std::string>(),
                                           relation_from(c.at("relation").get<std::string>()),
                                           ext_real_from_json(c.at("lhs")), ext_real_from_json(c.at("rhs")),
                                           ext_real_from_json(c.at("slack")), c.at("pass").get<bool>()});
        }
        r.hall_skipped = j.at("hall").at("skipped").get<bool>();
        r.hall_skip_reason = j.at("hall").at("reason").get<std::string>();
        r.overall_pass = j.at("overall_pass").get<bool>();
        return r;
    } catch (const nlohmann::json::exception &ex) {
        throw Error(ErrorCode::SchemaError, std::string("malformed report: ") + ex.what());
    }
}

std::string emit_report(const AnalysisReport &r, ReportFormat format) {
    std::ostringstream os;
    switch (format) {
        case ReportFormat::Json:
            return report_to_json(r).dump(2) + "\n";
        case ReportFormat::Csv:
            os << "name,relation,lhs,rhs,slack,pass\n";
            csv_rows(os, r, "");
            return os.str();
        case ReportFormat::Markdown:
            os << "# " << r.scenario << "\n\n";
            os << "fingerprint `" << r.fingerprint << "`, seed " << r.seed << ", overall "
               << (r.overall_pass ? "PASS" : "FAIL") << "\n\n";
            os << "## Entropy panel (" << r.unit << ")\n\n";
            markdown_values(os, r.panel);
            os << "\n## Checks (nats)\n\n";
            markdown_checks(os, r);
            os << "\n## Quantities\n\n";
            markdown_values(os, r.quantities);
            if (r.hall_skipped) {
                os << "\nDual-construction checks skipped: " << r.hall_skip_reason << "\n";
            }
            return os.str();
    }
    throw Error(ErrorCode::UnknownFormat, "unknown report format");
}

std::string emit_suite(const RandomSuiteResult &s, ReportFormat format) {
    std::ostringstream os;
    switch (format) {
        case ReportFormat::Json: {
            Json reports = Json::array();
            for (const AnalysisReport &r : s.reports) {
                reports.push_back(report_to_json(r));
            }
            return Json{{"summary", summary_to_json(s.summary)}, {"reports", std::move(reports)}}.dump(2) + "\n";
        }
        case ReportFormat::Csv:
            os << "trial,name,relation,lhs,rhs,slack,pass\n";
            for (const AnalysisReport &r : s.reports) {
                csv_rows(os, r, csv_field(r.scenario) + ",");
            }
            return os.str();
        case ReportFormat::Markdown: {
            const SuiteSummary &m = s.summary;
            os << "# Random suite\n\n";
            os << m.trials << " trials, " << m.failures << " failing, " << m.hall_skipped
               << " without the dual construction\n\n";
            os << "| check | min slack |\n|---|---|\n";
            for (const auto &[name, v] : m.min_slack) {
                os << "| " << name << " | " << to_string(v) << " |\n";
            }
            os << "\nmax mean_chi_given_out " << to_string(m.max_mean_chi_given_out) << ", max d_term "
               << to_string(m.max_d_term) << "\n";
            os << "rank-1 instruments " << m.rank1_instruments << " (" << m.rank1_purity_preserving
               << " purity preserving), multi-Kraus " << m.multi_kraus_instruments << " ("
               << m.multi_kraus_not_preserving << " not purity preserving)\n";
            return os.str();
        }
    }
    throw Error(ErrorCode::UnknownFormat, "unknown report format");
}

}  // namespace qinstr
