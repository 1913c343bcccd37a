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

#include "hypaq/circuit_json.hpp"

#include <nlohmann/json.hpp>

#include "detail.hpp"
#include "hypaq/error.hpp"

namespace hypaq {

using nlohmann::json;

namespace {

using detail::Overloaded;

json condition_json(const Condition &cond) {
    json bits = json::array();
    for (auto b : cond.bits) bits.push_back(b.index);
    return {{"kind", cond.kind == ConditionKind::BitEquals ? "bit_equals" : "register_equals"},
            {"bits", bits},
            {"expected", cond.expected}};
}

json sequence_json(const Sequence &s);

json statement_json(const Statement &st) {
    return std::visit(Overloaded{
                          [](const GateOp &g) {
                              json qubits = json::array();
                              for (auto q : g.qubits) qubits.push_back(q.index);
                              return json{{"op", "gate"}, {"name", g.name}, {"params", g.params}, {"qubits", qubits}};
                          },
                          [](const MeasureOp &m) {
                              return json{{"op", "measure"}, {"qubit", m.qubit.index}, {"clbit", m.clbit.index}};
                          },
                          [](const ResetOp &r) { return json{{"op", "reset"}, {"qubit", r.qubit.index}}; },
                          [](const IfBlock &b) {
                              return json{{"op", "if"},
                                          {"condition", condition_json(b.cond)},
                                          {"then", sequence_json(b.then_body)},
                                          {"else", sequence_json(b.else_body)}};
                          },
                          [](const WhileBlock &b) {
                              return json{{"op", "while"}, {"condition", condition_json(b.cond)}, {"body", sequence_json(b.body)}};
                          },
                          [](const ForBlock &b) {
                              return json{{"op", "for"}, {"count", b.count}, {"body", sequence_json(b.body)}};
                          },
                      },
                      st.node);
}

json sequence_json(const Sequence &s) {
    json out = json::array();
    for (const auto &st : s.items) out.push_back(statement_json(st));
    return out;
}

[[noreturn]] void schema_error(const std::string &msg) { throw Error(ErrorCode::InvalidArgument, "circuit JSON: " + msg); }

const json &field(const json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) schema_error(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::uint32_t index_of(const json &j, const char *what) {
    if (!j.is_number_unsigned()) schema_error(std::string(what) + " must be a non-negative integer");
    return j.get<std::uint32_t>();
}

Condition condition_from(const json &j) {
    Condition c;
    auto kind = field(j, "kind").get<std::string>();
    if (kind == "bit_equals") {
        c.kind = ConditionKind::BitEquals;
    } else if (kind == "register_equals") {
        c.kind = ConditionKind::RegisterEquals;
    } else {
        schema_error("unknown condition kind '" + kind + "'");
    }
    for (const auto &b : field(j, "bits")) c.bits.push_back(ClbitRef{index_of(b, "bit")});
    c.expected = field(j, "expected").get<std::string>();
    return c;
}

Sequence sequence_from(const json &j);

Statement statement_from(const json &j) {
    auto op = field(j, "op").get<std::string>();
    Statement st;
    if (op == "gate") {
        GateOp g;
        g.name = field(j, "name").get<std::string>();
        g.params = j.value("params", std::vector<double>{});
        for (const auto &q : field(j, "qubits")) g.qubits.push_back(QubitRef{index_of(q, "qubit")});
        st.node = std::move(g);
    } else if (op == "measure") {
        st.node = MeasureOp{QubitRef{index_of(field(j, "qubit"), "qubit")}, ClbitRef{index_of(field(j, "clbit"), "clbit")}};
    } else if (op == "reset") {
        st.node = ResetOp{QubitRef{index_of(field(j, "qubit"), "qubit")}};
    } else if (op == "if") {
        IfBlock b;
        b.cond = condition_from(field(j, "condition"));
        b.then_body = sequence_from(field(j, "then"));
        if (j.contains("else")) b.else_body = sequence_from(j.at("else"));
        st.node = std::move(b);
    } else if (op == "while") {
        st.node = WhileBlock{condition_from(field(j, "condition")), sequence_from(field(j, "body"))};
    } else if (op == "for") {
        st.node = ForBlock{index_of(field(j, "count"), "count"), sequence_from(field(j, "body"))};
    } else {
        schema_error("unknown op '" + op + "'");
    }
    return st;
}

Sequence sequence_from(const json &j) {
    if (!j.is_array()) schema_error("statement list must be an array");
    Sequence s;
    for (const auto &item : j) s.items.push_back(statement_from(item));
    return s;
}

}  // namespace

std::string circuit_to_json(const Circuit &c, int indent) {
    json regs = json::array();
    for (const auto &r : c.clbit_registers) regs.push_back({{"name", r.name}, {"size", r.size}});
    json doc = {{"ir_version", kCircuitJsonVersion},
                {"name", c.name},
                {"qubits", {{"name", c.qubit_register}, {"size", c.num_qubits}}},
                {"clbit_registers", regs},
                {"body", sequence_json(c.body)}};
    return doc.dump(indent) + "\n";
}

Circuit circuit_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        schema_error(e.what());
    }
    try {
        if (field(doc, "ir_version").get<int>() != kCircuitJsonVersion) schema_error("unsupported ir_version");
        Circuit c;
        c.name = field(doc, "name").get<std::string>();
        const auto &q = field(doc, "qubits");
        c.qubit_register = field(q, "name").get<std::string>();
        c.num_qubits = index_of(field(q, "size"), "qubit count");
        for (const auto &r : field(doc, "clbit_registers"))
            c.clbit_registers.push_back({field(r, "name").get<std::string>(), index_of(field(r, "size"), "register size")});
        c.body = sequence_from(field(doc, "body"));
        validate(c);
        return c;
    } catch (const json::exception &e) {
        schema_error(e.what());
    }
}

}  // namespace hypaq
