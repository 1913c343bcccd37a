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

#include "hypaq/error.hpp"

namespace hypaq {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::Syntax: return "SyntaxError";
        case ErrorCode::UndeclaredRegister: return "UndeclaredRegister";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::UnsupportedConstruct: return "UnsupportedConstruct";
        case ErrorCode::InvalidCircuit: return "InvalidCircuit";
        case ErrorCode::WhileInStaticMode: return "WhileInStaticMode";
        case ErrorCode::AdaptiveConstructInStaticMode: return "AdaptiveConstructInStaticMode";
        case ErrorCode::InvalidSize: return "InvalidSize";
        case ErrorCode::DuplicateLabel: return "DuplicateLabel";
        case ErrorCode::EmptyPins: return "EmptyPins";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::ModeViolation: return "ModeViolation";
        case ErrorCode::UnassignedVertex: return "UnassignedVertex";
        case ErrorCode::TooFewQubits: return "TooFewQubits";
        case ErrorCode::UnsupportedK: return "UnsupportedK";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::Io: return "IoError";
        case ErrorCode::InvariantViolation: return "InvariantViolation";
    }
    return "Error";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

ParseError::ParseError(ErrorCode code, int line, int column, const std::string &message)
    : Error(code, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace hypaq
