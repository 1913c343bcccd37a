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

#include <algorithm>
#include <optional>

#include "hypaq/error.hpp"
#include "hypaq/partition.hpp"

namespace hypaq {

GainTable::GainTable(const Hypergraph &g, const PartitionConfig &cfg, Assignment start, std::vector<double> weights)
    : k_(cfg.k),
      lambda_(cfg.lambda),
      ideal_((g.num_qubit_vertices() + cfg.k - 1) / cfg.k),
      capacity_(block_capacity(g.num_qubit_vertices(), cfg.k, cfg.epsilon)),
      assignment_(std::move(start)) {
    if (assignment_.size() != g.num_vertices())
        throw Error(ErrorCode::UnassignedVertex, "assignment does not cover every vertex");
    for (auto b : assignment_)
        if (b >= k_) throw Error(ErrorCode::UnassignedVertex, "assignment names a block outside 0..k-1");
    if (!weights.empty() && weights.size() != g.edges().size())
        throw Error(ErrorCode::InvalidArgument, "weight override must list every edge");

    const auto n = g.num_vertices();
    is_qubit_.resize(n);
    for (const auto &v : g.vertices()) is_qubit_[v.id] = v.kind == VertexKind::Qubit;
    incident_.resize(n);
    for (const auto &e : g.edges()) {
        if (!e.active) continue;
        auto slot = static_cast<std::uint32_t>(pins_.size());
        pins_.push_back(e.pins);
        weight_.push_back(weights.empty() ? e.weight : weights[e.id]);
        for (auto v : e.pins) incident_[v].push_back(slot);
    }
    pin_count_.assign(pins_.size() * k_, 0);
    qubits_in_.assign(k_, 0);
    cut_gain_.assign(n * k_, 0.0);
    for (std::size_t s = 0; s < pins_.size(); ++s)
        for (auto v : pins_[s]) ++pin_count_[s * k_ + assignment_[v]];
    for (VertexId v = 0; v < n; ++v)
        if (is_qubit_[v]) ++qubits_in_[assignment_[v]];
    for (VertexId v = 0; v < n; ++v) refresh(v);
    resync();
}

void GainTable::refresh(VertexId v) {
    const auto from = assignment_[v];
    for (std::uint32_t b = 0; b < k_; ++b) {
        double gain = 0.0;
        if (b != from) {
            for (auto s : incident_[v]) {
                const auto *count = &pin_count_[s * k_];
                int delta = (count[from] == 1 ? 1 : 0) - (count[b] == 0 ? 1 : 0);
                gain += weight_[s] * delta;
            }
        }
        cut_gain_[v * k_ + b] = gain;
    }
}

double GainTable::balance_increase(VertexId v, std::uint32_t to) const {
    if (!is_qubit_[v]) return 0.0;
    const auto from = assignment_[v];
    if (from == to) return 0.0;
    auto nf = qubits_in_[from], nt = qubits_in_[to];
    return (overflow(nf - 1) - overflow(nf)) + (overflow(nt + 1) - overflow(nt));
}

bool GainTable::admissible(VertexId v, std::uint32_t to) const {
    if (to >= k_ || to == assignment_[v]) return false;
    return !is_qubit_[v] || qubits_in_[to] + 1 <= capacity_;
}

bool GainTable::tentative(VertexId v, std::uint32_t to) const {
    if (to >= k_ || to == assignment_[v]) return false;
    return !is_qubit_[v] || qubits_in_[to] + 1 <= capacity_ + 1;
}

bool GainTable::admissible_state() const {
    return std::all_of(qubits_in_.begin(), qubits_in_.end(), [&](std::size_t n) { return n <= capacity_; });
}

void GainTable::move(VertexId v, std::uint32_t to) {
    const auto from = assignment_[v];
    if (from == to) return;
    cut_ -= cut_gain(v, to);
    balance_ += balance_increase(v, to);
    for (auto s : incident_[v]) {
        --pin_count_[s * k_ + from];
        ++pin_count_[s * k_ + to];
    }
    if (is_qubit_[v]) {
        --qubits_in_[from];
        ++qubits_in_[to];
    }
    assignment_[v] = to;
    refresh(v);
    for (auto s : incident_[v])
        for (auto u : pins_[s])
            if (u != v) refresh(u);
}

void GainTable::resync() {
    cut_ = 0.0;
    for (std::size_t s = 0; s < pins_.size(); ++s) {
        std::size_t spanned = 0;
        for (std::uint32_t b = 0; b < k_; ++b)
            if (pin_count_[s * k_ + b] > 0) ++spanned;
        cut_ += weight_[s] * static_cast<double>(spanned - 1);
    }
    balance_ = 0.0;
    for (auto n : qubits_in_) balance_ += overflow(n);
}

namespace {

struct Move {
    VertexId v;
    std::uint32_t from;
    std::uint32_t to;
};

std::optional<Move> best_move(const GainTable &table, const std::vector<bool> &locked, std::uint32_t k) {
    std::optional<Move> best;
    double best_gain = 0.0;
    const auto &a = table.assignment();
    for (VertexId v = 0; v < a.size(); ++v) {
        if (locked[v]) continue;
        for (std::uint32_t b = 0; b < k; ++b) {
            if (!table.tentative(v, b)) continue;
            double gain = table.gain(v, b);
            // Strict comparison keeps the lowest (vertex, block) among ties.
            if (!best || gain > best_gain) {
                best = Move{v, a[v], b};
                best_gain = gain;
            }
        }
    }
    return best;
}

PartitionResult run_fm(const Hypergraph &g, const PartitionConfig &cfg, Assignment start,
                       std::vector<double> weights) {
    cfg.validate();
    GainTable table(g, cfg, std::move(start), std::move(weights));
    double total_weight = 0.0;
    for (const auto &e : g.edges())
        if (e.active) total_weight += e.weight;
    const double tol = 1e-9 * (total_weight + cfg.lambda * static_cast<double>(g.num_qubit_vertices()) + 1.0);

    PartitionResult result;
    result.heuristic = Heuristic::FM;
    result.initial_cut = table.cut();
    const auto n = g.num_vertices();

    for (std::uint32_t pass = 0; pass < cfg.max_passes; ++pass) {
        const double start_cut = table.cut();
        const double start_f = start_cut + cfg.lambda * table.balance();
        std::vector<bool> locked(n, false);
        std::vector<Move> moves;
        double best_f = start_f;
        std::size_t best_len = 0;
        while (auto m = best_move(table, locked, cfg.k)) {
            table.move(m->v, m->to);
            locked[m->v] = true;
            moves.push_back(*m);
            double f = table.cut() + cfg.lambda * table.balance();
            if (table.admissible_state() && table.cut() <= start_cut + tol && f < best_f - tol) {
                best_f = f;
                best_len = moves.size();
            }
        }
        for (std::size_t i = moves.size(); i > best_len; --i) table.move(moves[i - 1].v, moves[i - 1].from);
        table.resync();
        if (best_len > 0 && table.cut() > start_cut) {
            // Rounding pushed the exact cut above the pass start; drop the pass.
            for (std::size_t i = best_len; i > 0; --i) table.move(moves[i - 1].v, moves[i - 1].from);
            table.resync();
            best_len = 0;
        }
        result.moves_applied += best_len;
        result.pass_history.push_back(PassRecord{pass, table.cut()});
        if (best_len == 0) break;
    }
    result.assignment = table.assignment();
    result.cut_size = table.cut();
    result.balance = table.balance();
    result.cut_size_with_overhead = result.cut_size;
    return result;
}

}  // namespace

PartitionResult fm_refine(const Hypergraph &g, const PartitionConfig &cfg) {
    return fm_refine(g, cfg, initial_partition(g, cfg));
}

PartitionResult fm_refine(const Hypergraph &g, const PartitionConfig &cfg, Assignment start) {
    const double initial = compute_cut_size(g, start);
    auto r = run_fm(g, cfg, std::move(start), {});
    r.initial_cut = initial;
    r.cut_size = compute_cut_size(g, r.assignment);
    r.balance = compute_balance(g, r.assignment, cfg.k);
    r.cut_size_with_overhead = r.cut_size;
    return r;
}

PartitionResult fm_refine_weighted(const Hypergraph &g, const PartitionConfig &cfg, Assignment start,
                                   const std::vector<double> &weights) {
    return run_fm(g, cfg, std::move(start), weights);
}

}  // namespace hypaq
