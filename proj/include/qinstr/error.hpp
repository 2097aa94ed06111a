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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qinstr {

enum class ErrorCode {
    NotHermitian,
    NoConvergence,
    DimensionMismatch,
    NotPositive,
    BadTrace,
    BadDistribution,
    NotNormalized,
    UnknownOutcome,
    SingularNormalizer,
    LabelMismatch,
    InfiniteQuantity,
    SingularAprioriState,
    SchemaError,
    UnknownFormat,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// that callers (and the CLI exit-code mapping) can dispatch on it.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {
    }

    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotHermitian:
            return "NotHermitian";
        case ErrorCode::NoConvergence:
            return "NoConvergence";
        case ErrorCode::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::NotPositive:
            return "NotPositive";
        case ErrorCode::BadTrace:
            return "BadTrace";
        case ErrorCode::BadDistribution:
            return "BadDistribution";
        case ErrorCode::NotNormalized:
            return "NotNormalized";
        case ErrorCode::UnknownOutcome:
            return "UnknownOutcome";
        case ErrorCode::SingularNormalizer:
            return "SingularNormalizer";
        case ErrorCode::LabelMismatch:
            return "LabelMismatch";
        case ErrorCode::InfiniteQuantity:
            return "InfiniteQuantity";
        case ErrorCode::SingularAprioriState:
            return "SingularAprioriState";
        case ErrorCode::SchemaError:
            return "SchemaError";
        case ErrorCode::UnknownFormat:
            return "UnknownFormat";
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace qinstr
