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

// Tree-shaped circuit IR: quantum operations plus classical control flow
// (if/else, while, fixed-count for) over measured classical bits.

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace hypaq {

struct QubitRef {
    std::uint32_t index = 0;
    friend auto operator<=>(const QubitRef &, const QubitRef &) = default;
};

/// Global classical bit index; registers are laid out in declaration order.
struct ClbitRef {
    std::uint32_t index = 0;
    friend auto operator<=>(const ClbitRef &, const ClbitRef &) = default;
};

struct GateOp {
    std::string name;
    std::vector<double> params;
    std::vector<QubitRef> qubits;
    friend bool operator==(const GateOp &, const GateOp &) = default;
};

struct MeasureOp {
    QubitRef qubit;
    ClbitRef clbit;
    friend bool operator==(const MeasureOp &, const MeasureOp &) = default;
};

struct ResetOp {
    QubitRef qubit;
    friend bool operator==(const ResetOp &, const ResetOp &) = default;
};

enum class ConditionKind { BitEquals, RegisterEquals };

/// Classical predicate over measured bits. `expected[i]` is the required value
/// ('0' or '1') of `bits[i]`; BitEquals has exactly one bit.
struct Condition {
    ConditionKind kind = ConditionKind::BitEquals;
    std::vector<ClbitRef> bits;
    std::string expected;

    static Condition bit_equals(ClbitRef bit, bool value = true);
    static Condition register_equals(std::vector<ClbitRef> bits, std::string expected);

    friend bool operator==(const Condition &, const Condition &) = default;
};

struct Statement;

struct Sequence {
    std::vector<Statement> items;
    bool empty() const noexcept { return items.empty(); }
    friend bool operator==(const Sequence &, const Sequence &);
};

struct IfBlock {
    Condition cond;
    Sequence then_body;
    Sequence else_body;
    friend bool operator==(const IfBlock &, const IfBlock &) = default;
};

struct WhileBlock {
    Condition cond;
    Sequence body;
    friend bool operator==(const WhileBlock &, const WhileBlock &) = default;
};

struct ForBlock {
    std::uint32_t count = 1;
    Sequence body;
    friend bool operator==(const ForBlock &, const ForBlock &) = default;
};

struct Statement {
    using Node = std::variant<GateOp, MeasureOp, ResetOp, IfBlock, WhileBlock, ForBlock>;

    Node node;
    int line = 0;  // 1-based source line; 0 when synthesized

    // Structural equality; source positions are ignored.
    friend bool operator==(const Statement &a, const Statement &b) { return a.node == b.node; }
};

struct ClassicalRegister {
    std::string name;
    std::uint32_t size = 0;
    friend bool operator==(const ClassicalRegister &, const ClassicalRegister &) = default;
};

struct Circuit {
    std::string name = "main";
    std::string qubit_register = "q";
    std::uint32_t num_qubits = 0;
    std::vector<ClassicalRegister> clbit_registers;
    Sequence body;

    std::uint32_t num_clbits() const noexcept;

    /// Register index and offset of a global classical bit.
    std::pair<std::size_t, std::uint32_t> locate_clbit(ClbitRef bit) const;
    /// Global offset of the first bit of register `reg`.
    std::uint32_t register_offset(std::size_t reg) const;

    std::string qubit_label(QubitRef q) const;  // "q0"
    std::string clbit_label(ClbitRef c) const;  // "mid[0]"

    friend bool operator==(const Circuit &, const Circuit &) = default;
};

// --- construction helpers -------------------------------------------------

Statement make_gate(std::string name, std::vector<std::uint32_t> qubits, std::vector<double> params = {});
Statement make_measure(std::uint32_t qubit, std::uint32_t clbit);
Statement make_reset(std::uint32_t qubit);
Statement make_if(Condition cond, std::vector<Statement> then_body, std::vector<Statement> else_body = {});
Statement make_while(Condition cond, std::vector<Statement> body);
Statement make_for(std::uint32_t count, std::vector<Statement> body);

// --- validation and analysis ----------------------------------------------

bool is_identifier(std::string_view text);

/// Throws Error(InvalidCircuit) when a structural invariant is broken:
/// out-of-range refs, repeated gate operands, bad identifiers, For count 0,
/// or a RegisterEquals condition that is not a whole declared register.
void validate(const Circuit &c);

struct Diagnostic {
    int line = 0;
    std::string message;
};

/// Conditions that may read a classical bit before any measurement wrote it
/// on every control-flow path. While bodies are assumed to run zero or more
/// times, For bodies at least once.
std::vector<Diagnostic> find_unwritten_condition_reads(const Circuit &c);

/// "mid[0] == 1", "mid[0] == 0" or `mid == "01"` (bitstring written
/// most-significant bit first, as in OpenQASM).
std::string condition_text(const Condition &cond, const Circuit &c);

/// Whitespace-free form of condition_text, used as probability override key.
std::string condition_pattern(const Condition &cond, const Circuit &c);

struct OpCounts {
    std::size_t gates = 0;
    std::size_t multi_qubit_gates = 0;
    std::size_t measures = 0;
    std::size_t resets = 0;
    std::size_t if_blocks = 0;
    std::size_t while_blocks = 0;
    std::size_t for_blocks = 0;
};

/// Syntactic counts over the tree; loop bodies are counted once.
OpCounts count_ops(const Circuit &c);

inline bool has_adaptive_blocks(const Circuit &c) {
    auto n = count_ops(c);
    return n.if_blocks + n.while_blocks > 0;
}

inline bool has_control_flow(const Circuit &c) {
    auto n = count_ops(c);
    return n.if_blocks + n.while_blocks + n.for_blocks > 0;
}

}  // namespace hypaq
