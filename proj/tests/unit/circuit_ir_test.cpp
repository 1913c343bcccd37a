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

#include <cmath>
#include <functional>
#include <gtest/gtest.h>

#include "hypaq/circuit.hpp"
#include "hypaq/circuit_json.hpp"
#include "hypaq/error.hpp"
#include "test_util.hpp"

using namespace hypaq;

namespace {

Circuit two_qubits() {
    Circuit c;
    c.num_qubits = 2;
    c.clbit_registers = {{"m", 2}, {"out", 1}};
    return c;
}

ErrorCode code_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "no hypaq::Error thrown";
    return ErrorCode::InvariantViolation;
}

}  // namespace

TEST(circuit_ir, clbit_layout_follows_declaration_order) {
    auto c = two_qubits();
    EXPECT_EQ(c.num_clbits(), 3u);
    EXPECT_EQ(c.register_offset(1), 2u);
    EXPECT_EQ(c.clbit_label(ClbitRef{2}), "out[0]");
    EXPECT_EQ(c.clbit_label(ClbitRef{1}), "m[1]");
    EXPECT_EQ(c.qubit_label(QubitRef{1}), "q1");
    auto [reg, off] = c.locate_clbit(ClbitRef{1});
    EXPECT_EQ(reg, 0u);
    EXPECT_EQ(off, 1u);
    EXPECT_EQ(code_of([&] { c.locate_clbit(ClbitRef{3}); }), ErrorCode::IndexOutOfRange);
}

TEST(circuit_ir, validate_rejects_broken_structure) {
    auto c = two_qubits();
    c.body.items.push_back(make_gate("cx", {0, 0}));
    EXPECT_EQ(code_of([&] { validate(c); }), ErrorCode::InvalidCircuit);

    c = two_qubits();
    c.body.items.push_back(make_gate("h", {2}));
    EXPECT_EQ(code_of([&] { validate(c); }), ErrorCode::InvalidCircuit);

    c = two_qubits();
    c.body.items.push_back(make_for(0, {make_gate("h", {0})}));
    EXPECT_EQ(code_of([&] { validate(c); }), ErrorCode::InvalidCircuit);

    c = two_qubits();
    c.body.items.push_back(make_gate("rz", {0}, {std::nan("")}));
    EXPECT_EQ(code_of([&] { validate(c); }), ErrorCode::InvalidCircuit);

    c = two_qubits();
    // Register comparison over part of a register.
    c.body.items.push_back(make_if(Condition::register_equals({ClbitRef{0}}, "1"), {make_gate("x", {0})}));
    EXPECT_EQ(code_of([&] { validate(c); }), ErrorCode::InvalidCircuit);

    c = two_qubits();
    c.num_qubits = 0;
    EXPECT_EQ(code_of([&] { validate(c); }), ErrorCode::InvalidCircuit);

    c = two_qubits();
    c.name = "not valid";
    EXPECT_EQ(code_of([&] { validate(c); }), ErrorCode::InvalidCircuit);
}

TEST(circuit_ir, condition_text_writes_bitstrings_msb_first) {
    auto c = two_qubits();
    auto cond = Condition::register_equals({ClbitRef{0}, ClbitRef{1}}, "10");  // m[0]=1, m[1]=0
    EXPECT_EQ(condition_text(cond, c), "m == \"01\"");
    EXPECT_EQ(condition_pattern(cond, c), "m==\"01\"");
    EXPECT_EQ(condition_text(Condition::bit_equals(ClbitRef{2}, false), c), "out[0] == 0");
}

TEST(circuit_ir, unwritten_reads_follow_definite_assignment) {
    auto c = two_qubits();
    c.body.items = {
        make_if(Condition::bit_equals(ClbitRef{0}), {make_gate("x", {1})}),
    };
    EXPECT_EQ(find_unwritten_condition_reads(c).size(), 1u);

    c.body.items = {
        make_measure(0, 0),
        make_if(Condition::bit_equals(ClbitRef{0}), {make_measure(1, 1)}, {make_measure(1, 1)}),
        make_if(Condition::bit_equals(ClbitRef{1}), {make_gate("x", {1})}),
    };
    EXPECT_TRUE(find_unwritten_condition_reads(c).empty());

    // A while body may not run, so its writes do not count afterwards.
    c.body.items = {
        make_measure(0, 0),
        make_while(Condition::bit_equals(ClbitRef{0}), {make_measure(1, 1), make_measure(0, 0)}),
        make_if(Condition::bit_equals(ClbitRef{1}), {make_gate("x", {1})}),
    };
    EXPECT_EQ(find_unwritten_condition_reads(c).size(), 1u);

    // A for body always runs.
    c.body.items = {
        make_for(2, {make_measure(1, 1)}),
        make_if(Condition::bit_equals(ClbitRef{1}), {make_gate("x", {1})}),
    };
    EXPECT_TRUE(find_unwritten_condition_reads(c).empty());
}

TEST(circuit_ir, count_ops_counts_syntactic_occurrences) {
    auto c = test_util::corpus_circuit("retry_loop.qc");
    auto n = count_ops(c);
    EXPECT_EQ(n.gates, 5u);
    EXPECT_EQ(n.multi_qubit_gates, 2u);
    EXPECT_EQ(n.measures, 7u);
    EXPECT_EQ(n.resets, 4u);
    EXPECT_EQ(n.while_blocks, 1u);
    EXPECT_EQ(n.if_blocks, 1u);
    EXPECT_TRUE(has_adaptive_blocks(c));
    EXPECT_FALSE(has_adaptive_blocks(test_util::corpus_circuit("gate_chain.qc")));
}

TEST(circuit_json, round_trips_every_corpus_circuit) {
    for (const auto &file : test_util::corpus_files()) {
        auto c = test_util::corpus_circuit(file);
        EXPECT_EQ(circuit_from_json(circuit_to_json(c)), c) << file;
    }
}

TEST(circuit_json, rejects_schema_errors) {
    EXPECT_EQ(code_of([] { circuit_from_json("{"); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { circuit_from_json(R"({"ir_version": 99})"); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] {
                  circuit_from_json(
                      R"({"ir_version":1,"name":"x","qubits":{"name":"q","size":1},"clbit_registers":[],)"
                      R"("body":[{"op":"teleport"}]})");
              }),
              ErrorCode::InvalidArgument);
}
