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

#include "qinstr/json_io.hpp"

#include <limits>

#include "qinstr/error.hpp"

namespace qinstr {

namespace {

[[noreturn]] void schema_error(const std::string &what) {
    throw Error(ErrorCode::SchemaError, what);
}

const Json &field(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        schema_error(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

Labels labels_from_json(const Json &j) {
    if (!j.is_array()) {
        schema_error("labels must be an array of strings");
    }
    Labels out;
    for (const Json &x : j) {
        if (!x.is_string()) {
            schema_error("labels must be an array of strings");
        }
        out.push_back(x.get<std::string>());
    }
    return out;
}

Index dim_from_json(const Json &j, const char *key) {
    const Json &x = field(j, key);
    if (!x.is_number_integer() || x.get<long long>() <= 0) {
        schema_error(std::string("'") + key + "' must be a positive integer");
    }
    return static_cast<Index>(x.get<long long>());
}

}  // namespace

Json matrix_to_json(const CMatrix &m) {
    Json rows = Json::array();
    for (Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Index c = 0; c < m.cols(); ++c) {
            row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

CMatrix matrix_from_json(const Json &j) {
    if (!j.is_array() || j.empty() || !j.front().is_array() || j.front().empty()) {
        schema_error("matrix must be a non-empty array of rows");
    }
    const Index rows = static_cast<Index>(j.size());
    const Index cols = static_cast<Index>(j.front().size());
    CMatrix m(rows, cols);
    for (Index r = 0; r < rows; ++r) {
        const Json &row = j[r];
        if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
            schema_error("matrix rows must have equal length");
        }
        for (Index c = 0; c < cols; ++c) {
            const Json &x = row[c];
            if (x.is_number()) {
                m(r, c) = Complex(x.get<double>(), 0.0);
            } else if (x.is_array() && x.size() == 2 && x[0].is_number() && x[1].is_number()) {
                m(r, c) = Complex(x[0].get<double>(), x[1].get<double>());
            } else {
                schema_error("matrix entry must be a number or a [re, im] pair");
            }
        }
    }
    return m;
}

Json ensemble_to_json(const Ensemble &e) {
    Json states = Json::array();
    for (const DensityMatrix &s : e.states()) {
        states.push_back(matrix_to_json(s.matrix()));
    }
    return Json{{"letters", e.letters()}, {"probs", e.probs()}, {"states", std::move(states)}};
}

Ensemble ensemble_from_json(const Json &j) {
    Labels letters = labels_from_json(field(j, "letters"));
    const Json &jp = field(j, "probs");
    const Json &js = field(j, "states");
    if (!jp.is_array() || !js.is_array()) {
        schema_error("'probs' and 'states' must be arrays");
    }
    std::vector<double> probs;
    for (const Json &x : jp) {
        if (!x.is_number()) {
            schema_error("probabilities must be numbers");
        }
        probs.push_back(x.get<double>());
    }
    std::vector<DensityMatrix> states;
    for (const Json &x : js) {
        states.push_back(DensityMatrix::validate(HermMatrix(matrix_from_json(x))));
    }
    return Ensemble(std::move(letters), std::move(probs), std::move(states));
}

Json instrument_to_json(const Instrument &ins) {
    Json kraus = Json::array();
    for (const KrausMap &m : ins.maps()) {
        Json ops = Json::array();
        for (const CMatrix &k : m.kraus) {
            ops.push_back(matrix_to_json(k));
        }
        kraus.push_back(std::move(ops));
    }
    return Json{{"dim_in", ins.dim_in()},
                {"dim_out", ins.dim_out()},
                {"outcomes", ins.outcomes()},
                {"kraus", std::move(kraus)}};
}

Instrument instrument_from_json(const Json &j) {
    const Index d1 = dim_from_json(j, "dim_in");
    const Index d2 = dim_from_json(j, "dim_out");
    Labels outcomes = labels_from_json(field(j, "outcomes"));
    const Json &jk = field(j, "kraus");
    if (!jk.is_array()) {
        schema_error("'kraus' must be an array of operator lists");
    }
    std::vector<KrausMap> maps;
    for (const Json &ops : jk) {
        if (!ops.is_array() || ops.empty()) {
            schema_error("each outcome needs a non-empty list of Kraus operators");
        }
        KrausMap m{d1, d2, {}};
        for (const Json &k : ops) {
            m.kraus.push_back(matrix_from_json(k));
        }
        maps.push_back(std::move(m));
    }
    return Instrument(std::move(outcomes), std::move(maps));
}

Json ext_real_to_json(ExtReal x) {
    if (x.is_finite()) {
        return x.value();
    }
    return to_string(x);
}

ExtReal ext_real_from_json(const Json &j) {
    if (j.is_number()) {
        return j.get<double>();
    }
    if (j == "+inf") {
        return ExtReal::infinity();
    }
    if (j == "-inf") {
        return -std::numeric_limits<double>::infinity();
    }
    schema_error("expected a number or \"+inf\"/\"-inf\"");
}

}  // namespace qinstr
