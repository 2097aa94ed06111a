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
 * JSON encoding of the toolkit's matrix and measurement types.
 *
 * A complex matrix is an array of rows; each entry is either a [re, im] pair
 * or a bare real number. Decoding errors raise SchemaError.
 */

#pragma once

#include "json.hpp"
#include "qinstr/entropy.hpp"
#include "qinstr/instrument.hpp"

namespace qinstr {

using Json = nlohmann::json;

Json matrix_to_json(const CMatrix &m);
CMatrix matrix_from_json(const Json &j);

Json ensemble_to_json(const Ensemble &e);
Ensemble ensemble_from_json(const Json &j);

Json instrument_to_json(const Instrument &ins);
Instrument instrument_from_json(const Json &j);

/// Finite values as numbers, infinities as the strings "+inf" / "-inf".
Json ext_real_to_json(ExtReal x);
ExtReal ext_real_from_json(const Json &j);

}  // namespace qinstr
