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

#include "hypaq/builders.hpp"

#include <algorithm>
#include <map>

#include "hypaq/flatten.hpp"

namespace hypaq {

namespace {

void add_qubit_vertices(Hypergraph &g, const Circuit &c) {
    for (std::uint32_t q = 0; q < c.num_qubits; ++q) g.add_vertex(VertexKind::Qubit, c.qubit_label(QubitRef{q}));
}

std::vector<VertexId> qubit_pins(const FlatOp &op) {
    std::vector<VertexId> pins;
    for (auto q : op.qubits()) pins.push_back(q.index);
    return pins;
}

bool reads(const FlatOp &op, ClbitRef bit) {
    auto bits = op.read_bits();
    return std::binary_search(bits.begin(), bits.end(), bit);
}

// Ops whose guards read the bit written by measurement `i`: any later op,
// plus every op of an enclosing while loop that tests the bit, since the
// next iteration runs after this write.
std::size_t dependent_count(const FlatCircuit &flat, std::size_t i) {
    const auto &m = *flat.ops[i].measure();
    std::vector<std::uint32_t> loop_scopes;
    for (const auto &g : flat.ops[i].guards) {
        if (g.loop && std::find(g.condition.bits.begin(), g.condition.bits.end(), m.clbit) != g.condition.bits.end())
            loop_scopes.push_back(g.scope);
    }
    std::size_t n = 0;
    for (std::size_t j = 0; j < flat.ops.size(); ++j) {
        const auto &op = flat.ops[j];
        if (!reads(op, m.clbit)) continue;
        bool in_loop = std::any_of(op.guards.begin(), op.guards.end(), [&](const Guard &g) {
            return std::find(loop_scopes.begin(), loop_scopes.end(), g.scope) != loop_scopes.end();
        });
        if (j > i || in_loop) ++n;
    }
    return n;
}

EdgeOrigin origin_of(const FlatCircuit &flat, const Layering &layers, std::size_t i) {
    return EdgeOrigin{{i}, layers.layer_of[i], flat.ops[i].line};
}

}  // namespace

Hypergraph build_static(const Circuit &c, const WeightModel &wm) {
    wm.validate();
    FlatCircuit flat = flatten(c, FlattenOptions{.unroll_for = true, .static_semantics = true});
    Layering layers = compute_layering(flat);
    Hypergraph g(HypergraphMode::Primal);
    add_qubit_vertices(g, c);
    for (std::size_t i = 0; i < flat.ops.size(); ++i) {
        const auto &op = flat.ops[i];
        if (op.reset()) ++g.reset_count;
        const GateOp *gate = op.gate();
        if (!gate || gate->qubits.size() < 2) continue;
        Hyperedge e;
        e.pins = qubit_pins(op);
        e.weight = wm.base_weight(gate->qubits.size());
        e.origin = origin_of(flat, layers, i);
        g.add_edge(std::move(e));
    }
    return g;
}

Hypergraph build_adaptive(const Circuit &c, const WeightModel &wm, bool grouping) {
    wm.validate();
    FlatCircuit flat = flatten(c);
    Layering layers = compute_layering(flat);
    Hypergraph g(HypergraphMode::Extended);
    add_qubit_vertices(g, c);

    // Classical vertices for every bit that is written or read, in bit order.
    std::map<std::uint32_t, std::optional<VertexId>> bits;  // bit -> first writer qubit
    for (const auto &op : flat.ops) {
        if (const auto *m = op.measure()) {
            auto &w = bits[m->clbit.index];
            if (!w) w = m->qubit.index;
        }
        for (auto b : op.read_bits()) bits.try_emplace(b.index);
    }
    std::map<std::uint32_t, VertexId> bit_vertex;
    for (const auto &[bit, writer] : bits)
        bit_vertex[bit] = g.add_vertex(VertexKind::Clbit, c.clbit_label(ClbitRef{bit}), writer);

    std::size_t n_standard = 0, n_conditional = 0, n_measure = 0;
    std::vector<std::vector<EdgeId>> group_members(flat.groups.size());

    for (const auto &layer : layers.layers) {
        for (std::size_t i : layer) {
            const auto &op = flat.ops[i];
            std::optional<EdgeId> made;
            if (op.reset()) {
                ++g.reset_count;
            } else if (const GateOp *gate = op.gate()) {
                double base = wm.base_weight(gate->qubits.size());
                if (op.conditioned()) {
                    Hyperedge e;
                    e.kind = EdgeKind::Conditional;
                    e.pins = qubit_pins(op);
                    for (auto b : op.read_bits()) e.pins.push_back(bit_vertex.at(b.index));
                    ConditionalInfo info;
                    bool in_loop = false;
                    for (const auto &guard : op.guards) {
                        info.path.push_back(GuardTerm{guard.condition, guard.negated});
                        in_loop = in_loop || guard.loop;
                    }
                    info.probability = path_probability(info.path, c, wm);
                    info.text = path_text(info.path, c);
                    e.weight = base * info.probability * (in_loop ? wm.while_multiplier : 1.0);
                    e.conditional = std::move(info);
                    e.label = "e_c" + std::to_string(++n_conditional);
                    e.origin = origin_of(flat, layers, i);
                    made = g.add_edge(std::move(e));
                } else if (gate->qubits.size() >= 2) {
                    Hyperedge e;
                    e.pins = qubit_pins(op);
                    e.weight = base;
                    e.label = "e" + std::to_string(++n_standard);
                    e.origin = origin_of(flat, layers, i);
                    made = g.add_edge(std::move(e));
                }
            } else if (const MeasureOp *m = op.measure()) {
                std::size_t deps = dependent_count(flat, i);
                if (deps > 0) {
                    Hyperedge e;
                    e.kind = EdgeKind::Measurement;
                    e.pins = {m->qubit.index, bit_vertex.at(m->clbit.index)};
                    e.weight = wm.measurement_impact == MeasurementImpact::Constant ? wm.measurement_constant
                                                                                    : static_cast<double>(deps);
                    e.label = "e_m" + std::to_string(++n_measure);
                    e.origin = origin_of(flat, layers, i);
                    made = g.add_edge(std::move(e));
                }
            }
            if (made && op.group) group_members[*op.group].push_back(*made);
        }
    }

    if (grouping) {
        for (const auto &grp : flat.groups) {
            auto &members = group_members[grp.id];
            if (members.empty()) continue;
            EdgeOrigin origin;
            origin.line = grp.line;
            for (std::size_t i = 0; i < flat.ops.size(); ++i)
                if (flat.ops[i].group == grp.id) origin.ops.push_back(i);
            g.add_super_group(members, grp.label, std::move(origin));
        }
    }
    return g;
}

}  // namespace hypaq
