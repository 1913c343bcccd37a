// Copyright 2026 The HyPAQ Authors
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

namespace hypaq {

enum class ErrorCode {
    // circuit text / IR
    Syntax,
    UndeclaredRegister,
    IndexOutOfRange,
    UnsupportedConstruct,
    InvalidCircuit,
    WhileInStaticMode,
    AdaptiveConstructInStaticMode,
    InvalidSize,
    // hypergraph
    DuplicateLabel,
    EmptyPins,
    UnknownVertex,
    ModeViolation,
    // partitioning
    UnassignedVertex,
    TooFewQubits,
    UnsupportedK,
    // general
    InvalidArgument,
    Io,
    InvariantViolation,
};

std::string_view error_code_name(ErrorCode code);

/// Base exception for every failure reported by the library. The code lets
/// callers (the CLI in particular) map failures onto exit statuses without
/// string matching.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message);

    ErrorCode code() const noexcept { return code_; }

    /// True for failures caused by bad input rather than a broken invariant.
    bool is_input_error() const noexcept { return code_ != ErrorCode::InvariantViolation; }

   private:
    ErrorCode code_;
};

/// Error raised while reading circuit text; carries a 1-based position.
class ParseError : public Error {
   public:
    ParseError(ErrorCode code, int line, int column, const std::string &message);

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

   private:
    int line_;
    int column_;
};

}  // namespace hypaq
