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

// k-way partitioning of a hypergraph's vertices into blocks (one per QPU).
//
// Objective: cut = sum over active edges of w(e) * (blocks spanned - 1).
// Balance: total overflow of per-block qubit counts above ceil(nq / k);
// classical vertices weigh nothing. Moves are inadmissible when they push a
// block past floor(ceil(nq / k) * (1 + epsilon)) qubits.

#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "hypaq/hypergraph.hpp"

namespace hypaq {

enum class Heuristic { FM, KL };

std::string_view heuristic_name(Heuristic h);  // "fm", "kl"
/// Throws Error(InvalidArgument) for anything but "fm" / "kl".
Heuristic parse_heuristic(std::string_view text);

struct PartitionConfig {
    std::uint32_t k = 2;
    double lambda = 1.0;
    double epsilon = 0.1;
    std::uint32_t max_passes = 20;
    std::uint64_t seed = 0;
    Heuristic heuristic = Heuristic::FM;
    double comm_overhead_factor = 2.0;
    /// Extra FM runs from seeded random balanced starts; the lowest cut wins
    /// and the middle-cut run wins ties. 0 gives a single FM run.
    std::uint32_t restarts = 4;
    /// Rerun FM with overhead-adjusted weights after conditional-cut handling.
    bool repartition_after_overhead = false;

    /// Throws Error(InvalidArgument) naming the offending field.
    void validate() const;
};

inline constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();

/// Block per vertex id.
using Assignment = std::vector<std::uint32_t>;

struct CommRecord {
    EdgeId edge = 0;
    std::string edge_label;
    EdgeKind kind = EdgeKind::Conditional;
    std::vector<std::uint32_t> blocks;  // ascending, at least two
    std::string condition;
    double weight = 0.0;
    double adjusted_weight = 0.0;
    std::string protocol_note;
};

struct PassRecord {
    std::uint32_t pass = 0;
    double cut = 0.0;
};

struct PartitionResult {
    Assignment assignment;
    Heuristic heuristic = Heuristic::FM;
    double initial_cut = 0.0;
    double cut_size = 0.0;
    double balance = 0.0;
    double cut_size_with_overhead = 0.0;
    std::vector<CommRecord> comm_records;
    std::vector<PassRecord> pass_history;
    std::size_t moves_applied = 0;
};

/// Throws Error(UnassignedVertex) when the assignment does not cover every
/// vertex.
double compute_cut_size(const Hypergraph &g, const Assignment &a);
double compute_balance(const Hypergraph &g, const Assignment &a, std::uint32_t k);

/// Largest admissible qubit count per block.
std::size_t block_capacity(std::size_t num_qubits, std::uint32_t k, double epsilon);
std::vector<std::size_t> block_qubit_counts(const Hypergraph &g, const Assignment &a, std::uint32_t k);
bool is_admissible(const Hypergraph &g, const Assignment &a, std::uint32_t k, double epsilon);

/// Qubits split into k contiguous index ranges (the first nq % k one
/// larger); each clbit joins the block of the qubit that first writes it,
/// or block 0. Throws Error(TooFewQubits) when nq < k.
Assignment initial_partition(const Hypergraph &g, const PartitionConfig &cfg);

/// Incrementally maintained move gains for FM. Cut gains are recomputed
/// for every vertex sharing an active edge with a moved vertex.
class GainTable {
   public:
    /// `weights` replaces the stored edge weights when non-empty.
    GainTable(const Hypergraph &g, const PartitionConfig &cfg, Assignment start, std::vector<double> weights = {});

    const Assignment &assignment() const noexcept { return assignment_; }
    double cut() const noexcept { return cut_; }          // running value
    double balance() const noexcept { return balance_; }  // running value
    std::size_t capacity() const noexcept { return capacity_; }

    /// Decrease in cut when `v` moves to `to`.
    double cut_gain(VertexId v, std::uint32_t to) const { return cut_gain_[v * k_ + to]; }
    /// Increase in balance when `v` moves to `to`.
    double balance_increase(VertexId v, std::uint32_t to) const;
    double gain(VertexId v, std::uint32_t to) const { return cut_gain(v, to) - lambda_ * balance_increase(v, to); }
    bool admissible(VertexId v, std::uint32_t to) const;
    /// Like admissible, but lets the target block exceed capacity by one
    /// qubit. FM passes explore such moves; only admissible states can end
    /// a kept prefix.
    bool tentative(VertexId v, std::uint32_t to) const;
    bool admissible_state() const;

    void move(VertexId v, std::uint32_t to);

    /// Recomputes cut and balance from scratch.
    void resync();

   private:
    double overflow(std::size_t n) const { return n > ideal_ ? static_cast<double>(n - ideal_) : 0.0; }
    void refresh(VertexId v);

    std::uint32_t k_;
    double lambda_;
    std::size_t ideal_;
    std::size_t capacity_;
    std::vector<bool> is_qubit_;
    std::vector<std::vector<VertexId>> pins_;       // per active edge
    std::vector<double> weight_;                    // per active edge
    std::vector<std::vector<std::uint32_t>> incident_;  // per vertex, active edge slots
    std::vector<std::uint32_t> pin_count_;          // per active edge x block
    std::vector<std::size_t> qubits_in_;            // per block
    Assignment assignment_;
    std::vector<double> cut_gain_;                  // per vertex x block
    double cut_ = 0.0;
    double balance_ = 0.0;
};

/// FM refinement from the initial partition (or `start`). Gain of moving v
/// to block b is the cut decrease minus lambda times the balance increase.
/// Each pass moves every vertex at most once, picking the best move with
/// ties broken by lower vertex id then lower block, and keeps the prefix
/// minimising cut + lambda * balance among admissible prefixes that do not
/// raise the cut. Within a pass a block may exceed capacity by one qubit, so
/// exact bisections can still exchange vertices. Stops after a pass without improvement or after max_passes.
PartitionResult fm_refine(const Hypergraph &g, const PartitionConfig &cfg);
PartitionResult fm_refine(const Hypergraph &g, const PartitionConfig &cfg, Assignment start);

/// Same, with per-edge weights replacing the stored ones (indexed by edge id).
PartitionResult fm_refine_weighted(const Hypergraph &g, const PartitionConfig &cfg, Assignment start,
                                   const std::vector<double> &weights);

struct WeightedPair {
    VertexId u = 0;
    VertexId v = 0;  // u < v
    double weight = 0.0;
};

/// Clique expansion of the active edges: every pin pair of a p-pin edge
/// gets w / (p - 1), accumulated per pair. Sorted by (u, v).
std::vector<WeightedPair> clique_expand(const Hypergraph &g);

/// Kernighan-Lin bisection on the clique expansion, swapping qubit pairs.
/// A pass prefix is kept only when it also does not raise the hypergraph
/// cut. Throws Error(UnsupportedK) unless k == 2.
PartitionResult kl_partition(const Hypergraph &g, const PartitionConfig &cfg);

/// Adds a CommRecord for every cut Conditional edge and every cut SuperGroup
/// with a conditional member, and fills cut_size_with_overhead using
/// w * comm_overhead_factor for those edges. The assignment is unchanged.
PartitionResult handle_conditional_cuts(const Hypergraph &g, PartitionResult r, const PartitionConfig &cfg);

/// initial_partition -> FM or KL -> handle_conditional_cuts.
PartitionResult partition(const Hypergraph &g, const PartitionConfig &cfg);

}  // namespace hypaq
