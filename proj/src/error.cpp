// Copyright 2026 The szilard Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "szilard/error.hpp"

namespace szilard {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidState:
        return "InvalidState";
    case ErrorCode::InvalidBloch:
        return "InvalidBloch";
    case ErrorCode::InvalidParam:
        return "InvalidParam";
    case ErrorCode::InvalidStrategy:
        return "InvalidStrategy";
    case ErrorCode::InvalidConfig:
        return "InvalidConfig";
    case ErrorCode::NonDiagonalReduced:
        return "NonDiagonalReduced";
    case ErrorCode::DecompositionMismatch:
        return "DecompositionMismatch";
    case ErrorCode::InfeasibleConstraint:
        return "InfeasibleConstraint";
    case ErrorCode::NoConvergence:
        return "NoConvergence";
    case ErrorCode::NoCrossing:
        return "NoCrossing";
    }
    return "Unknown";
}

} // namespace szilard
