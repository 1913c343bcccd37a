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

#include <string>
#include <string_view>

#include "hypaq/circuit.hpp"

namespace hypaq {

inline constexpr int kCircuitJsonVersion = 1;

/// JSON document mirroring the IR tree:
///
///   {"ir_version": 1, "name": ..., "qubits": {"name": "q", "size": n},
///    "clbit_registers": [{"name": ..., "size": ...}, ...],
///    "body": [statement, ...]}
///
/// Statements are objects tagged by "op": "gate" (name, params, qubits),
/// "measure" (qubit, clbit), "reset" (qubit), "if" (condition, then, else),
/// "while" (condition, body) or "for" (count, body). Conditions are
/// {"kind": "bit_equals"|"register_equals", "bits": [...], "expected": "..."}
/// with expected[i] the value required of bits[i]. All indices are global.
std::string circuit_to_json(const Circuit &c, int indent = 2);

/// Inverse of circuit_to_json. Throws Error(InvalidArgument) on schema
/// mismatch and Error(InvalidCircuit) when the result fails validate().
Circuit circuit_from_json(std::string_view text);

}  // namespace hypaq
