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

#include "hypaq/partition.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "hypaq/error.hpp"

namespace hypaq {

std::string_view heuristic_name(Heuristic h) { return h == Heuristic::FM ? "fm" : "kl"; }

Heuristic parse_heuristic(std::string_view text) {
    if (text == "fm" || text == "FM") return Heuristic::FM;
    if (text == "kl" || text == "KL") return Heuristic::KL;
    throw Error(ErrorCode::InvalidArgument, "unknown heuristic '" + std::string(text) + "' (expected fm or kl)");
}

void PartitionConfig::validate() const {
    auto fail = [](const std::string &msg) { throw Error(ErrorCode::InvalidArgument, msg); };
    if (k < 2) fail("k must be at least 2");
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) fail("lambda must be finite and non-negative");
    if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) fail("epsilon must be finite and non-negative");
    if (max_passes < 1) fail("max_passes must be positive");
    if (!(comm_overhead_factor >= 1.0) || !std::isfinite(comm_overhead_factor))
        fail("comm_overhead_factor must be at least 1");
}

namespace {

void check_assignment(const Hypergraph &g, const Assignment &a) {
    if (a.size() != g.num_vertices())
        throw Error(ErrorCode::UnassignedVertex, "assignment covers " + std::to_string(a.size()) + " of " +
                                                     std::to_string(g.num_vertices()) + " vertices");
    for (std::size_t v = 0; v < a.size(); ++v)
        if (a[v] == kUnassigned)
            throw Error(ErrorCode::UnassignedVertex, "vertex " + g.vertex(static_cast<VertexId>(v)).label +
                                                         " has no block");
}

std::size_t spanned_blocks(const Hyperedge &e, const Assignment &a) {
    std::vector<std::uint32_t> blocks;
    for (auto v : e.pins) blocks.push_back(a[v]);
    std::sort(blocks.begin(), blocks.end());
    return static_cast<std::size_t>(std::unique(blocks.begin(), blocks.end()) - blocks.begin());
}

std::size_t ideal_size(std::size_t nq, std::uint32_t k) { return (nq + k - 1) / k; }

}  // namespace

double compute_cut_size(const Hypergraph &g, const Assignment &a) {
    check_assignment(g, a);
    double cut = 0.0;
    for (const auto &e : g.edges())
        if (e.active) cut += e.weight * static_cast<double>(spanned_blocks(e, a) - 1);
    return cut;
}

double compute_balance(const Hypergraph &g, const Assignment &a, std::uint32_t k) {
    check_assignment(g, a);
    auto ideal = ideal_size(g.num_qubit_vertices(), k);
    double overflow = 0.0;
    for (auto n : block_qubit_counts(g, a, k))
        if (n > ideal) overflow += static_cast<double>(n - ideal);
    return overflow;
}

std::size_t block_capacity(std::size_t num_qubits, std::uint32_t k, double epsilon) {
    double cap = static_cast<double>(ideal_size(num_qubits, k)) * (1.0 + epsilon);
    return static_cast<std::size_t>(std::floor(cap + 1e-9));
}

std::vector<std::size_t> block_qubit_counts(const Hypergraph &g, const Assignment &a, std::uint32_t k) {
    std::vector<std::size_t> counts(k, 0);
    for (const auto &v : g.vertices())
        if (v.kind == VertexKind::Qubit && a.at(v.id) < k) ++counts[a[v.id]];
    return counts;
}

bool is_admissible(const Hypergraph &g, const Assignment &a, std::uint32_t k, double epsilon) {
    if (a.size() != g.num_vertices()) return false;
    for (auto b : a)
        if (b >= k) return false;
    auto cap = block_capacity(g.num_qubit_vertices(), k, epsilon);
    auto counts = block_qubit_counts(g, a, k);
    return std::all_of(counts.begin(), counts.end(), [&](std::size_t n) { return n <= cap; });
}

namespace {

void coassign_clbits(const Hypergraph &g, Assignment &a) {
    for (const auto &v : g.vertices())
        if (v.kind == VertexKind::Clbit) a[v.id] = v.writer ? a[*v.writer] : 0;
}

// Contiguous ranges over the given qubit order.
Assignment contiguous(const Hypergraph &g, const std::vector<VertexId> &qubits, std::uint32_t k) {
    Assignment a(g.num_vertices(), kUnassigned);
    std::size_t nq = qubits.size();
    std::size_t base = nq / k, extra = nq % k, pos = 0;
    for (std::uint32_t b = 0; b < k; ++b) {
        std::size_t size = base + (b < extra ? 1 : 0);
        for (std::size_t i = 0; i < size; ++i) a[qubits[pos++]] = b;
    }
    coassign_clbits(g, a);
    return a;
}

std::vector<VertexId> qubit_ids(const Hypergraph &g) {
    std::vector<VertexId> out;
    for (const auto &v : g.vertices())
        if (v.kind == VertexKind::Qubit) out.push_back(v.id);
    return out;
}

}  // namespace

Assignment initial_partition(const Hypergraph &g, const PartitionConfig &cfg) {
    cfg.validate();
    if (g.num_qubit_vertices() < cfg.k)
        throw Error(ErrorCode::TooFewQubits, "cannot split " + std::to_string(g.num_qubit_vertices()) +
                                                 " qubits into " + std::to_string(cfg.k) + " blocks");
    return contiguous(g, qubit_ids(g), cfg.k);
}

PartitionResult handle_conditional_cuts(const Hypergraph &g, PartitionResult r, const PartitionConfig &cfg) {
    cfg.validate();
    check_assignment(g, r.assignment);
    r.comm_records.clear();
    double overhead_cut = 0.0;
    for (const auto &e : g.edges()) {
        if (!e.active) continue;
        double w = e.weight;
        auto spanned = spanned_blocks(e, r.assignment);
        std::string condition;
        bool conditional = false;
        if (e.kind == EdgeKind::Conditional) {
            conditional = true;
            condition = e.conditional ? e.conditional->text : "";
        } else if (e.kind == EdgeKind::SuperGroup && e.group) {
            for (auto m : e.group->members) {
                const auto &member = g.edge(m);
                if (member.kind != EdgeKind::Conditional) continue;
                conditional = true;
                auto text = member.conditional ? member.conditional->text : "";
                if (condition.find(text) == std::string::npos) condition += (condition.empty() ? "" : "; ") + text;
            }
        }
        if (conditional && spanned >= 2) {
            CommRecord rec;
            rec.edge = e.id;
            rec.edge_label = e.label;
            rec.kind = e.kind;
            for (auto v : e.pins) rec.blocks.push_back(r.assignment[v]);
            std::sort(rec.blocks.begin(), rec.blocks.end());
            rec.blocks.erase(std::unique(rec.blocks.begin(), rec.blocks.end()), rec.blocks.end());
            rec.condition = condition;
            rec.weight = w;
            rec.adjusted_weight = w * cfg.comm_overhead_factor;
            std::string blocks;
            for (auto b : rec.blocks) blocks += (blocks.empty() ? "" : ",") + std::to_string(b);
            rec.protocol_note = "broadcast measured condition bits to blocks {" + blocks + "} before " + e.label;
            w = rec.adjusted_weight;
            r.comm_records.push_back(std::move(rec));
        }
        overhead_cut += w * static_cast<double>(spanned - 1);
    }
    r.cut_size_with_overhead = overhead_cut;
    return r;
}

PartitionResult partition(const Hypergraph &g, const PartitionConfig &cfg) {
    cfg.validate();
    PartitionResult best;
    if (cfg.heuristic == Heuristic::KL) {
        best = kl_partition(g, cfg);
    } else {
        best = fm_refine(g, cfg);
        if (cfg.restarts > 0) {
            std::mt19937_64 rng(cfg.seed);
            auto qubits = qubit_ids(g);
            for (std::uint32_t r = 0; r < cfg.restarts; ++r) {
                // Fisher-Yates with an explicit modulo keeps the order
                // independent of the standard library's shuffle.
                for (std::size_t i = qubits.size(); i > 1; --i) std::swap(qubits[i - 1], qubits[rng() % i]);
                auto run = fm_refine(g, cfg, contiguous(g, qubits, cfg.k));
                if (run.cut_size < best.cut_size - 1e-9 * (1.0 + std::abs(best.cut_size))) {
                    run.initial_cut = best.initial_cut;
                    best = std::move(run);
                }
            }
        }
    }
    best = handle_conditional_cuts(g, std::move(best), cfg);
    if (cfg.repartition_after_overhead && !best.comm_records.empty()) {
        std::vector<double> weights;
        for (const auto &e : g.edges()) weights.push_back(e.weight);
        for (const auto &rec : best.comm_records) weights[rec.edge] = rec.adjusted_weight;
        auto rerun = fm_refine_weighted(g, cfg, best.assignment, weights);
        // Reported metrics stay on the stored weights.
        best.assignment = std::move(rerun.assignment);
        best.cut_size = compute_cut_size(g, best.assignment);
        best.balance = compute_balance(g, best.assignment, cfg.k);
        best.moves_applied += rerun.moves_applied;
        best = handle_conditional_cuts(g, std::move(best), cfg);
    }
    return best;
}

}  // namespace hypaq
