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

#include "hypaq/flatten.hpp"

#include <algorithm>

#include "detail.hpp"
#include "hypaq/error.hpp"

namespace hypaq {

namespace {

using detail::Overloaded;

// Generated circuits carry line 0.
std::string at_line(int line) { return line > 0 ? " at line " + std::to_string(line) : std::string(); }

class Flattener {
   public:
    Flattener(const Circuit &c, const FlattenOptions &options) : c_(c), options_(options) {}

    FlatCircuit run() {
        std::vector<Guard> guards;
        seq(c_.body, guards, std::nullopt);
        return std::move(out_);
    }

   private:
    std::uint32_t open_group(GroupKind kind, int line) {
        auto id = static_cast<std::uint32_t>(out_.groups.size());
        out_.groups.push_back({id, kind, line, std::string(group_kind_name(kind)) + "_" + std::to_string(id)});
        return id;
    }

    void emit(LeafOp op, const std::vector<Guard> &guards, std::optional<std::uint32_t> group, int line) {
        out_.ops.push_back(FlatOp{std::move(op), guards, group, line});
    }

    void seq(const Sequence &s, std::vector<Guard> &guards, std::optional<std::uint32_t> group) {
        for (const auto &st : s.items) stmt(st, guards, group);
    }

    void stmt(const Statement &st, std::vector<Guard> &guards, std::optional<std::uint32_t> group) {
        const int line = st.line;
        std::visit(Overloaded{
                       [&](const GateOp &g) { emit(g, guards, group, line); },
                       [&](const MeasureOp &m) { emit(m, guards, group, line); },
                       [&](const ResetOp &r) { emit(r, guards, group, line); },
                       [&](const IfBlock &b) {
                           if (options_.static_semantics)
                               throw Error(ErrorCode::AdaptiveConstructInStaticMode,
                                           "if block" + at_line(line) + " requires adaptive mode");
                           auto g = group ? group : std::optional(open_group(GroupKind::If, line));
                           auto scope = next_scope_++;
                           guards.push_back(Guard{b.cond, false, false, scope});
                           seq(b.then_body, guards, g);
                           guards.back().negated = true;
                           seq(b.else_body, guards, g);
                           guards.pop_back();
                       },
                       [&](const WhileBlock &b) {
                           if (options_.static_semantics)
                               throw Error(ErrorCode::WhileInStaticMode,
                                           "while block" + at_line(line) + " requires adaptive mode");
                           auto g = group ? group : std::optional(open_group(GroupKind::While, line));
                           guards.push_back(Guard{b.cond, false, true, next_scope_++});
                           seq(b.body, guards, g);
                           guards.pop_back();
                       },
                       [&](const ForBlock &b) {
                           if (!options_.unroll_for)
                               throw Error(ErrorCode::UnsupportedConstruct,
                                           "for block" + at_line(line) + " needs unrolling");
                           auto g = group ? group : std::optional(open_group(GroupKind::For, line));
                           for (std::uint32_t i = 0; i < b.count; ++i) seq(b.body, guards, g);
                       },
                   },
                   st.node);
    }

    const Circuit &c_;
    const FlattenOptions &options_;
    FlatCircuit out_;
    std::uint32_t next_scope_ = 0;
};

}  // namespace

std::vector<QubitRef> FlatOp::qubits() const {
    return std::visit(Overloaded{
                          [](const GateOp &g) { return g.qubits; },
                          [](const MeasureOp &m) { return std::vector<QubitRef>{m.qubit}; },
                          [](const ResetOp &r) { return std::vector<QubitRef>{r.qubit}; },
                      },
                      op);
}

std::vector<ClbitRef> FlatOp::read_bits() const {
    std::vector<ClbitRef> bits;
    for (const auto &g : guards) bits.insert(bits.end(), g.condition.bits.begin(), g.condition.bits.end());
    std::sort(bits.begin(), bits.end());
    bits.erase(std::unique(bits.begin(), bits.end()), bits.end());
    return bits;
}

std::string_view group_kind_name(GroupKind kind) {
    switch (kind) {
        case GroupKind::If: return "if";
        case GroupKind::While: return "while";
        case GroupKind::For: return "for";
    }
    return "group";
}

FlatCircuit flatten(const Circuit &c, const FlattenOptions &options) { return Flattener(c, options).run(); }

Layering compute_layering(const FlatCircuit &flat) {
    // Track the last layer (+1, so 0 means "never") touching each resource.
    std::uint32_t max_qubit = 0;
    std::uint32_t max_clbit = 0;
    for (const auto &op : flat.ops) {
        for (auto q : op.qubits()) max_qubit = std::max(max_qubit, q.index + 1);
        for (auto b : op.read_bits()) max_clbit = std::max(max_clbit, b.index + 1);
        if (auto *m = op.measure()) max_clbit = std::max(max_clbit, m->clbit.index + 1);
    }
    std::vector<std::size_t> qubit_busy(max_qubit, 0);
    std::vector<std::size_t> last_write(max_clbit, 0);
    std::vector<std::size_t> last_read(max_clbit, 0);

    Layering out;
    out.layer_of.reserve(flat.ops.size());
    for (std::size_t i = 0; i < flat.ops.size(); ++i) {
        const auto &op = flat.ops[i];
        auto qubits = op.qubits();
        auto reads = op.read_bits();
        std::size_t after = 0;
        for (auto q : qubits) after = std::max(after, qubit_busy[q.index]);
        for (auto b : reads) after = std::max(after, last_write[b.index]);
        const MeasureOp *m = op.measure();
        if (m) after = std::max({after, last_write[m->clbit.index], last_read[m->clbit.index]});

        std::size_t layer = after;  // 0-based index == previous layer count
        for (auto q : qubits) qubit_busy[q.index] = layer + 1;
        for (auto b : reads) last_read[b.index] = std::max(last_read[b.index], layer + 1);
        if (m) last_write[m->clbit.index] = layer + 1;

        if (out.layers.size() <= layer) out.layers.resize(layer + 1);
        out.layers[layer].push_back(i);
        out.layer_of.push_back(layer);
    }
    return out;
}

Layering compute_layering(const Circuit &c) { return compute_layering(flatten(c)); }

}  // namespace hypaq
