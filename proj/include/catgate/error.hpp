// Copyright 2026 The catgate Authors
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

#ifndef CATGATE_ERROR_HPP
#define CATGATE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace catgate {

enum class ErrorKind {
    InvalidExtent,
    InvalidSize,
    WrongRepresentation,
    GridMismatch,
    InvalidGamma,
    InvalidOutcome,
    InvalidWindow,
    InvalidConfig,
    OutcomeOffGrid,
    ZeroState,
    ZeroOverlap,
    Truncation,
    NonConvergence,
    OutOfRegime,
    NoBimodality,
};

/// Coarse grouping used by the command-line driver to pick an exit code.
enum class ErrorClass { Config, Numerical, Regime };

constexpr std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidExtent: return "invalid-extent";
        case ErrorKind::InvalidSize: return "invalid-size";
        case ErrorKind::WrongRepresentation: return "wrong-representation";
        case ErrorKind::GridMismatch: return "grid-mismatch";
        case ErrorKind::InvalidGamma: return "invalid-gamma";
        case ErrorKind::InvalidOutcome: return "invalid-outcome";
        case ErrorKind::InvalidWindow: return "invalid-window";
        case ErrorKind::InvalidConfig: return "invalid-config";
        case ErrorKind::OutcomeOffGrid: return "outcome-off-grid";
        case ErrorKind::ZeroState: return "zero-state";
        case ErrorKind::ZeroOverlap: return "zero-overlap";
        case ErrorKind::Truncation: return "truncation";
        case ErrorKind::NonConvergence: return "non-convergence";
        case ErrorKind::OutOfRegime: return "out-of-regime";
        case ErrorKind::NoBimodality: return "no-bimodality";
    }
    return "unknown";
}

constexpr ErrorClass error_class(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ZeroState:
        case ErrorKind::ZeroOverlap:
        case ErrorKind::Truncation:
        case ErrorKind::NonConvergence:
            return ErrorClass::Numerical;
        case ErrorKind::OutOfRegime:
        case ErrorKind::NoBimodality:
            return ErrorClass::Regime;
        default:
            return ErrorClass::Config;
    }
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

namespace detail {

inline void require(bool condition, ErrorKind kind, const char* message) {
    if (!condition) {
        throw Error(kind, message);
    }
}

}  // namespace detail

}  // namespace catgate

#endif  // CATGATE_ERROR_HPP
