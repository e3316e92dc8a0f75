// Copyright 2026 The ulab Authors
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

#include "ulab/errors.hpp"

namespace ulab {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonHermitian:
            return "NonHermitian";
        case ErrorCode::NotPSD:
            return "NotPSD";
        case ErrorCode::BadDim:
            return "BadDim";
        case ErrorCode::BadIndex:
            return "BadIndex";
        case ErrorCode::DimMismatch:
            return "DimMismatch";
        case ErrorCode::InvalidParams:
            return "InvalidParams";
        case ErrorCode::InvalidState:
            return "InvalidState";
        case ErrorCode::Unphysical:
            return "Unphysical";
        case ErrorCode::RankTooHigh:
            return "RankTooHigh";
        case ErrorCode::OutOfRange:
            return "OutOfRange";
        case ErrorCode::NotADistribution:
            return "NotADistribution";
        case ErrorCode::DegenerateObservable:
            return "DegenerateObservable";
        case ErrorCode::Parse:
            return "Parse";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

}  // namespace ulab
