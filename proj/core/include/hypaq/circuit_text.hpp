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

// Reader and writer for the circuit text format, a small OpenQASM-3-like
// language:
//
//   circuit <name>;
//   qubit[<n>] q;
//   bit[<n>] <reg>;                      (any number of registers)
//   <gate>(<real>, ...) q[<i>], q[<j>];  (parameters optional)
//   <reg>[<i>] = measure q[<i>];
//   reset q[<i>];
//   if (<cond>) { ... } else { ... }
//   while (<cond>) { ... }
//   for <k> { ... }
//
// where <cond> is `reg[i]`, `reg[i] == 0|1` or `reg == "<bits>"`. Comments
// start with `//`. `OPENQASM 3;` and `include "...";` lines are accepted and
// ignored, as is the alternative `measure q[i] -> reg[j];` form.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hypaq/circuit.hpp"

namespace hypaq {

struct ParseOptions {
    /// Reject conditions reading bits not yet measured on every path
    /// instead of reporting them as warnings.
    bool strict_conditions = false;
};

struct ParseResult {
    Circuit circuit;
    std::vector<Diagnostic> warnings;
};

/// Throws ParseError (Syntax, UndeclaredRegister, IndexOutOfRange,
/// UnsupportedConstruct) with the 1-based line and column of the problem.
ParseResult parse_circuit_checked(std::string_view text, const ParseOptions &options = {});

inline Circuit parse_circuit(std::string_view text, const ParseOptions &options = {}) {
    return parse_circuit_checked(text, options).circuit;
}

std::string serialize_circuit(const Circuit &c);

}  // namespace hypaq
