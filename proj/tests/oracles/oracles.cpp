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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hypaq::oracle {

double cut(const Hypergraph &g, const std::vector<std::uint32_t> &block) {
    double total = 0.0;
    for (const auto &e : g.edges()) {
        if (!e.active) continue;
        std::set<std::uint32_t> seen;
        for (auto v : e.pins) seen.insert(block.at(v));
        total += e.weight * static_cast<double>(seen.size() - 1);
    }
    return total;
}

namespace {

std::vector<std::size_t> qubit_counts(const Hypergraph &g, const std::vector<std::uint32_t> &block,
                                      std::uint32_t k) {
    std::vector<std::size_t> n(k, 0);
    for (std::size_t v = 0; v < block.size(); ++v)
        if (g.vertex(static_cast<VertexId>(v)).kind == VertexKind::Qubit) ++n.at(block[v]);
    return n;
}

}  // namespace

double balance(const Hypergraph &g, const std::vector<std::uint32_t> &block, std::uint32_t k) {
    std::size_t nq = g.num_qubit_vertices();
    std::size_t ideal = nq / k + (nq % k ? 1 : 0);
    double over = 0.0;
    for (auto n : qubit_counts(g, block, k)) over += n > ideal ? static_cast<double>(n - ideal) : 0.0;
    return over;
}

bool admissible(const Hypergraph &g, const std::vector<std::uint32_t> &block, std::uint32_t k, double eps) {
    std::size_t nq = g.num_qubit_vertices();
    std::size_t ideal = nq / k + (nq % k ? 1 : 0);
    auto cap = static_cast<std::size_t>(std::floor(static_cast<double>(ideal) * (1.0 + eps) + 1e-9));
    for (auto n : qubit_counts(g, block, k))
        if (n > cap) return false;
    return true;
}

BruteForce brute_force(const Hypergraph &g, std::uint32_t k, double eps, double lambda) {
    const std::size_t n = g.num_vertices();
    std::vector<std::uint32_t> block(n, 0);
    BruteForce out;
    bool any = false;
    for (;;) {
        if (admissible(g, block, k, eps)) {
            double c = cut(g, block);
            double f = c + lambda * balance(g, block, k);
            if (!any || c < out.min_cut) out.min_cut = c;
            if (!any || f < out.min_objective - 1e-12) {
                out.min_objective = f;
                out.argmin_objective.clear();
            }
            if (std::abs(f - out.min_objective) <= 1e-12) out.argmin_objective.push_back(block);
            any = true;
        }
        std::size_t i = 0;
        while (i < n && ++block[i] == k) block[i++] = 0;
        if (i == n) break;
    }
    if (!any) throw std::runtime_error("no admissible assignment");
    return out;
}

namespace {

struct Walk {
    std::size_t gates = 0;
    std::size_t multi = 0;
};

void walk(const Sequence &s, std::size_t times, Walk &w) {
    for (const auto &st : s.items) {
        if (const auto *g = std::get_if<GateOp>(&st.node)) {
            w.gates += times;
            if (g->qubits.size() >= 2) w.multi += times;
        } else if (const auto *b = std::get_if<IfBlock>(&st.node)) {
            walk(b->then_body, times, w);
            walk(b->else_body, times, w);
        } else if (const auto *b = std::get_if<WhileBlock>(&st.node)) {
            walk(b->body, times, w);
        } else if (const auto *b = std::get_if<ForBlock>(&st.node)) {
            walk(b->body, times * b->count, w);
        }
    }
}

}  // namespace

std::size_t multi_qubit_gate_count(const Circuit &c) {
    Walk w;
    walk(c.body, 1, w);
    return w.multi;
}

std::size_t gate_count(const Circuit &c) {
    Walk w;
    walk(c.body, 1, w);
    return w.gates;
}

namespace {

std::set<std::uint32_t> qubits_of(const FlatOp &op) {
    std::set<std::uint32_t> s;
    for (auto q : op.qubits()) s.insert(q.index);
    return s;
}

std::set<std::uint32_t> reads_of(const FlatOp &op) {
    std::set<std::uint32_t> s;
    for (const auto &g : op.guards)
        for (auto b : g.condition.bits) s.insert(b.index);
    return s;
}

std::optional<std::uint32_t> write_of(const FlatOp &op) {
    if (const auto *m = std::get_if<MeasureOp>(&op.op)) return m->clbit.index;
    return std::nullopt;
}

bool conflict(const FlatOp &a, const FlatOp &b) {
    auto qa = qubits_of(a), qb = qubits_of(b);
    for (auto q : qa)
        if (qb.contains(q)) return true;
    auto wa = write_of(a), wb = write_of(b);
    if (wa && (reads_of(b).contains(*wa) || wa == wb)) return true;
    if (wb && reads_of(a).contains(*wb)) return true;
    return false;
}

}  // namespace

std::size_t conflict_depth(const FlatCircuit &flat) {
    std::vector<std::size_t> level(flat.ops.size(), 1);
    std::size_t depth = 0;
    for (std::size_t j = 0; j < flat.ops.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i)
            if (conflict(flat.ops[i], flat.ops[j])) level[j] = std::max(level[j], level[i] + 1);
        depth = std::max(depth, level[j]);
    }
    return depth;
}

std::vector<std::size_t> influential_measurements(const FlatCircuit &flat) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < flat.ops.size(); ++i) {
        auto w = write_of(flat.ops[i]);
        if (!w) continue;
        bool hit = false;
        for (std::size_t j = i + 1; j < flat.ops.size() && !hit; ++j) hit = reads_of(flat.ops[j]).contains(*w);
        for (const auto &g : flat.ops[i].guards) {
            if (!g.loop) continue;
            for (auto b : g.condition.bits) hit = hit || b.index == *w;
        }
        if (hit) out.push_back(i);
    }
    return out;
}

HmetisGraph read_hmetis(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    HmetisGraph g;
    if (!std::getline(in, line)) throw std::runtime_error("empty hMETIS text");
    {
        std::istringstream head(line);
        if (!(head >> g.num_edges >> g.num_vertices >> g.fmt)) throw std::runtime_error("bad header");
    }
    for (std::size_t e = 0; e < g.num_edges; ++e) {
        if (!std::getline(in, line)) throw std::runtime_error("missing edge line");
        std::istringstream row(line);
        long long w = 0;
        if (!(row >> w)) throw std::runtime_error("missing edge weight");
        g.edge_weights.push_back(w);
        std::vector<std::size_t> pins;
        std::size_t p = 0;
        while (row >> p) {
            if (p < 1 || p > g.num_vertices) throw std::runtime_error("pin out of range");
            pins.push_back(p);
        }
        if (pins.empty()) throw std::runtime_error("edge without pins");
        g.pins.push_back(pins);
    }
    for (std::size_t v = 0; v < g.num_vertices; ++v) {
        if (!std::getline(in, line)) throw std::runtime_error("missing vertex weight");
        g.vertex_weights.push_back(std::stoll(line));
    }
    if (std::getline(in, line) && !line.empty()) throw std::runtime_error("trailing content");
    return g;
}

Hypergraph random_hypergraph(std::mt19937_64 &rng, const RandomGraphOptions &opt) {
    auto pick = [&](std::uint32_t lo, std::uint32_t hi) {
        return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng);
    };
    static const double grid[] = {0.25, 0.5, 1.0, 1.5, 2.0, 3.0};
    Hypergraph g(HypergraphMode::Extended);
    std::uint32_t nv = pick(opt.min_vertices, opt.max_vertices);
    std::uint32_t nc = std::min(pick(0, opt.max_clbits), nv - 2);
    std::uint32_t nq = nv - nc;
    for (std::uint32_t q = 0; q < nq; ++q) g.add_vertex(VertexKind::Qubit, "q" + std::to_string(q));
    for (std::uint32_t c = 0; c < nc; ++c)
        g.add_vertex(VertexKind::Clbit, "c[" + std::to_string(c) + "]", pick(0, nq - 1));
    std::uint32_t ne = pick(1, opt.max_edges);
    for (std::uint32_t e = 0; e < ne; ++e) {
        std::uint32_t p = pick(2, std::min(opt.max_pins, nv));
        std::vector<VertexId> pins;
        while (pins.size() < p) {
            VertexId v = pick(0, nv - 1);
            if (std::find(pins.begin(), pins.end(), v) == pins.end()) pins.push_back(v);
        }
        Hyperedge h;
        h.pins = pins;
        h.weight = grid[pick(0, 5)];
        std::uint32_t kind = nc > 0 ? pick(0, 2) : 0;
        h.kind = kind == 0 ? EdgeKind::Standard : kind == 1 ? EdgeKind::Conditional : EdgeKind::Measurement;
        if (h.kind == EdgeKind::Conditional) h.conditional = ConditionalInfo{{}, "c[0] == 1", 0.5};
        g.add_edge(std::move(h));
    }
    return g;
}

}  // namespace hypaq::oracle
