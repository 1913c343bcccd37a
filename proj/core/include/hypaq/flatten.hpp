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

// Linearization of the circuit tree and ASAP layering.
//
// flatten() walks the tree in program order and emits every leaf operation
// with the guards of the blocks enclosing it and the id of its outermost
// control-flow block (its group). For bodies are repeated `count` times;
// While bodies appear once.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hypaq/circuit.hpp"

namespace hypaq {

/// One enclosing If/While condition. Statements in an else branch carry the
/// negated condition.
struct Guard {
    Condition condition;
    bool negated = false;
    bool loop = false;        // guard of a While block
    std::uint32_t scope = 0;  // unique per dynamic block occurrence
    friend bool operator==(const Guard &, const Guard &) = default;
};

enum class GroupKind { If, While, For };

struct ControlGroup {
    std::uint32_t id = 0;
    GroupKind kind = GroupKind::If;
    int line = 0;
    std::string label;  // "while_0", "if_1", ...
};

using LeafOp = std::variant<GateOp, MeasureOp, ResetOp>;

struct FlatOp {
    LeafOp op;
    std::vector<Guard> guards;  // outermost first; empty when unconditioned
    std::optional<std::uint32_t> group;
    int line = 0;

    const GateOp *gate() const { return std::get_if<GateOp>(&op); }
    const MeasureOp *measure() const { return std::get_if<MeasureOp>(&op); }
    const ResetOp *reset() const { return std::get_if<ResetOp>(&op); }
    bool conditioned() const { return !guards.empty(); }

    std::vector<QubitRef> qubits() const;
    /// Distinct classical bits read by the guards, ascending.
    std::vector<ClbitRef> read_bits() const;
};

struct FlatCircuit {
    std::vector<FlatOp> ops;
    std::vector<ControlGroup> groups;  // indexed by group id
};

struct FlattenOptions {
    bool unroll_for = true;
    /// Reject If (AdaptiveConstructInStaticMode) and While
    /// (WhileInStaticMode) blocks.
    bool static_semantics = false;
};

/// Throws Error(UnsupportedConstruct) for a For block when unroll_for is
/// false.
FlatCircuit flatten(const Circuit &c, const FlattenOptions &options = {});

std::string_view group_kind_name(GroupKind kind);

/// ASAP schedule: each op sits one layer after the latest earlier op it
/// conflicts with. Ops conflict when they share a qubit, when one writes a
/// classical bit the other reads, or when both write the same bit.
struct Layering {
    std::vector<std::vector<std::size_t>> layers;  // indices into FlatCircuit::ops
    std::vector<std::size_t> layer_of;             // per op

    std::size_t depth() const noexcept { return layers.size(); }
};

Layering compute_layering(const FlatCircuit &flat);
Layering compute_layering(const Circuit &c);

}  // namespace hypaq
