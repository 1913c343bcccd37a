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

#include "hypaq/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

#include "detail.hpp"
#include "hypaq/error.hpp"

namespace hypaq {

namespace {

using detail::Overloaded;

std::string where(int line) { return line > 0 ? " (line " + std::to_string(line) + ")" : std::string(); }

}  // namespace

bool operator==(const Sequence &a, const Sequence &b) { return a.items == b.items; }

Condition Condition::bit_equals(ClbitRef bit, bool value) {
    return Condition{ConditionKind::BitEquals, {bit}, value ? "1" : "0"};
}

Condition Condition::register_equals(std::vector<ClbitRef> bits, std::string expected) {
    return Condition{ConditionKind::RegisterEquals, std::move(bits), std::move(expected)};
}

std::uint32_t Circuit::num_clbits() const noexcept {
    std::uint32_t n = 0;
    for (const auto &r : clbit_registers) n += r.size;
    return n;
}

std::pair<std::size_t, std::uint32_t> Circuit::locate_clbit(ClbitRef bit) const {
    std::uint32_t offset = 0;
    for (std::size_t r = 0; r < clbit_registers.size(); ++r) {
        if (bit.index < offset + clbit_registers[r].size) return {r, bit.index - offset};
        offset += clbit_registers[r].size;
    }
    throw Error(ErrorCode::IndexOutOfRange, "classical bit " + std::to_string(bit.index) + " is not declared");
}

std::uint32_t Circuit::register_offset(std::size_t reg) const {
    std::uint32_t offset = 0;
    for (std::size_t r = 0; r < reg && r < clbit_registers.size(); ++r) offset += clbit_registers[r].size;
    return offset;
}

std::string Circuit::qubit_label(QubitRef q) const { return qubit_register + std::to_string(q.index); }

std::string Circuit::clbit_label(ClbitRef c) const {
    auto [reg, off] = locate_clbit(c);
    return clbit_registers[reg].name + "[" + std::to_string(off) + "]";
}

Statement make_gate(std::string name, std::vector<std::uint32_t> qubits, std::vector<double> params) {
    GateOp g{std::move(name), std::move(params), {}};
    g.qubits.reserve(qubits.size());
    for (auto q : qubits) g.qubits.push_back(QubitRef{q});
    return Statement{std::move(g)};
}

Statement make_measure(std::uint32_t qubit, std::uint32_t clbit) {
    return Statement{MeasureOp{QubitRef{qubit}, ClbitRef{clbit}}};
}

Statement make_reset(std::uint32_t qubit) { return Statement{ResetOp{QubitRef{qubit}}}; }

Statement make_if(Condition cond, std::vector<Statement> then_body, std::vector<Statement> else_body) {
    return Statement{IfBlock{std::move(cond), Sequence{std::move(then_body)}, Sequence{std::move(else_body)}}};
}

Statement make_while(Condition cond, std::vector<Statement> body) {
    return Statement{WhileBlock{std::move(cond), Sequence{std::move(body)}}};
}

Statement make_for(std::uint32_t count, std::vector<Statement> body) {
    return Statement{ForBlock{count, Sequence{std::move(body)}}};
}

bool is_identifier(std::string_view text) {
    if (text.empty()) return false;
    auto head = static_cast<unsigned char>(text[0]);
    if (!(std::isalpha(head) || head == '_')) return false;
    return std::all_of(text.begin() + 1, text.end(), [](char ch) {
        auto u = static_cast<unsigned char>(ch);
        return std::isalnum(u) || u == '_';
    });
}

namespace {

class Validator {
   public:
    explicit Validator(const Circuit &c) : c_(c), nclbits_(c.num_clbits()) {}

    void run() {
        if (!is_identifier(c_.name)) fail(0, "circuit name '" + c_.name + "' is not an identifier");
        if (!is_identifier(c_.qubit_register)) fail(0, "qubit register name is not an identifier");
        if (c_.num_qubits == 0) fail(0, "circuit declares no qubits");
        std::set<std::string> names{c_.qubit_register};
        for (const auto &r : c_.clbit_registers) {
            if (!is_identifier(r.name)) fail(0, "register name '" + r.name + "' is not an identifier");
            if (r.size == 0) fail(0, "register '" + r.name + "' has size 0");
            if (!names.insert(r.name).second) fail(0, "register '" + r.name + "' declared twice");
        }
        seq(c_.body);
    }

   private:
    [[noreturn]] void fail(int line, const std::string &msg) const {
        throw Error(ErrorCode::InvalidCircuit, msg + where(line));
    }

    void qubit(QubitRef q, int line) const {
        if (q.index >= c_.num_qubits)
            fail(line, "qubit index " + std::to_string(q.index) + " out of range (" + std::to_string(c_.num_qubits) +
                           " declared)");
    }

    void clbit(ClbitRef b, int line) const {
        if (b.index >= nclbits_)
            fail(line, "classical bit " + std::to_string(b.index) + " out of range (" + std::to_string(nclbits_) +
                           " declared)");
    }

    void condition(const Condition &cond, int line) const {
        if (cond.bits.empty()) fail(line, "condition reads no bits");
        if (cond.bits.size() != cond.expected.size()) fail(line, "condition bit count and expected value differ");
        for (char ch : cond.expected)
            if (ch != '0' && ch != '1') fail(line, "condition expects non-binary value");
        for (auto b : cond.bits) clbit(b, line);
        if (cond.kind == ConditionKind::BitEquals) {
            if (cond.bits.size() != 1) fail(line, "bit condition must read exactly one bit");
            return;
        }
        // Register conditions must name a whole register, in order.
        auto [reg, off] = c_.locate_clbit(cond.bits.front());
        const auto &r = c_.clbit_registers[reg];
        bool whole = off == 0 && cond.bits.size() == r.size;
        for (std::size_t i = 0; whole && i < cond.bits.size(); ++i)
            whole = cond.bits[i].index == cond.bits.front().index + i;
        if (!whole) fail(line, "register condition must cover register '" + r.name + "' exactly");
    }

    void seq(const Sequence &s) const {
        for (const auto &st : s.items) stmt(st);
    }

    void stmt(const Statement &st) const {
        const int line = st.line;
        std::visit(Overloaded{
                       [&](const GateOp &g) {
                           if (!is_identifier(g.name)) fail(line, "gate name '" + g.name + "' is not an identifier");
                           if (g.qubits.empty()) fail(line, "gate '" + g.name + "' has no operands");
                           for (double p : g.params)
                               if (!std::isfinite(p)) fail(line, "gate '" + g.name + "' has a non-finite parameter");
                           std::set<std::uint32_t> seen;
                           for (auto q : g.qubits) {
                               qubit(q, line);
                               if (!seen.insert(q.index).second)
                                   fail(line, "gate '" + g.name + "' repeats operand q[" + std::to_string(q.index) + "]");
                           }
                       },
                       [&](const MeasureOp &m) {
                           qubit(m.qubit, line);
                           clbit(m.clbit, line);
                       },
                       [&](const ResetOp &r) { qubit(r.qubit, line); },
                       [&](const IfBlock &b) {
                           condition(b.cond, line);
                           seq(b.then_body);
                           seq(b.else_body);
                       },
                       [&](const WhileBlock &b) {
                           condition(b.cond, line);
                           seq(b.body);
                       },
                       [&](const ForBlock &b) {
                           if (b.count < 1) fail(line, "for loop count must be at least 1");
                           seq(b.body);
                       },
                   },
                   st.node);
    }

    const Circuit &c_;
    std::uint32_t nclbits_;
};

class WriteTracker {
   public:
    explicit WriteTracker(const Circuit &c) : c_(c) {}

    std::vector<Diagnostic> run() {
        std::vector<bool> written(c_.num_clbits(), false);
        seq(c_.body, written);
        return std::move(out_);
    }

   private:
    void check(const Condition &cond, const std::vector<bool> &written, int line) {
        for (auto b : cond.bits) {
            if (b.index < written.size() && !written[b.index]) {
                out_.push_back({line, "condition '" + condition_text(cond, c_) + "' reads " + c_.clbit_label(b) +
                                          " before it is measured on every path"});
            }
        }
    }

    void seq(const Sequence &s, std::vector<bool> &written) {
        for (const auto &st : s.items) stmt(st, written);
    }

    void stmt(const Statement &st, std::vector<bool> &written) {
        std::visit(Overloaded{
                       [&](const GateOp &) {},
                       [&](const ResetOp &) {},
                       [&](const MeasureOp &m) {
                           if (m.clbit.index < written.size()) written[m.clbit.index] = true;
                       },
                       [&](const IfBlock &b) {
                           check(b.cond, written, st.line);
                           auto then_w = written;
                           auto else_w = written;
                           seq(b.then_body, then_w);
                           seq(b.else_body, else_w);
                           for (std::size_t i = 0; i < written.size(); ++i) written[i] = then_w[i] && else_w[i];
                       },
                       [&](const WhileBlock &b) {
                           check(b.cond, written, st.line);
                           auto inner = written;
                           seq(b.body, inner);
                       },
                       [&](const ForBlock &b) { seq(b.body, written); },
                   },
                   st.node);
    }

    const Circuit &c_;
    std::vector<Diagnostic> out_;
};

void count_seq(const Sequence &s, OpCounts &n) {
    for (const auto &st : s.items) {
        std::visit(Overloaded{
                       [&](const GateOp &g) {
                           ++n.gates;
                           if (g.qubits.size() >= 2) ++n.multi_qubit_gates;
                       },
                       [&](const MeasureOp &) { ++n.measures; },
                       [&](const ResetOp &) { ++n.resets; },
                       [&](const IfBlock &b) {
                           ++n.if_blocks;
                           count_seq(b.then_body, n);
                           count_seq(b.else_body, n);
                       },
                       [&](const WhileBlock &b) {
                           ++n.while_blocks;
                           count_seq(b.body, n);
                       },
                       [&](const ForBlock &b) {
                           ++n.for_blocks;
                           count_seq(b.body, n);
                       },
                   },
                   st.node);
    }
}

}  // namespace

void validate(const Circuit &c) { Validator(c).run(); }

std::vector<Diagnostic> find_unwritten_condition_reads(const Circuit &c) { return WriteTracker(c).run(); }

std::string condition_text(const Condition &cond, const Circuit &c) {
    if (cond.kind == ConditionKind::BitEquals) {
        return c.clbit_label(cond.bits.front()) + " == " + cond.expected;
    }
    auto [reg, off] = c.locate_clbit(cond.bits.front());
    (void)off;
    std::string literal(cond.expected.rbegin(), cond.expected.rend());
    return c.clbit_registers[reg].name + " == \"" + literal + "\"";
}

std::string condition_pattern(const Condition &cond, const Circuit &c) {
    std::string text = condition_text(cond, c);
    std::erase_if(text, [](char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; });
    return text;
}

OpCounts count_ops(const Circuit &c) {
    OpCounts n;
    count_seq(c.body, n);
    return n;
}

}  // namespace hypaq
