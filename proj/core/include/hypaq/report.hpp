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

// Static-vs-adaptive comparison rows and benchmark sweeps.
//
// CSV schema (version 1), one row per circuit and mode:
//   suite,circuit,size,num_qubits,mode,status,estimated_depth,total_gates,
//   active_edges,edge_kinds,edges_by_kind,total_edge_weight,cut_size,
//   cut_size_with_overhead,balance,heuristic,k,lambda,epsilon,seed,
//   runtime_ms,error

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hypaq/circuit.hpp"
#include "hypaq/generator_spec.hpp"
#include "hypaq/hypergraph.hpp"
#include "hypaq/partition.hpp"
#include "hypaq/weight_model.hpp"

namespace hypaq {

inline constexpr int kSweepCsvVersion = 1;

enum class RowStatus { Ok, Skipped, Error };
std::string_view row_status_name(RowStatus s);  // "ok", "skipped", "error"

struct ComparisonRow {
    std::string suite;
    std::string circuit;
    std::uint64_t size = 0;
    std::uint32_t num_qubits = 0;
    std::string mode;  // "static" or "adaptive"
    RowStatus status = RowStatus::Ok;
    std::size_t estimated_depth = 0;
    std::size_t total_gates = 0;
    std::size_t active_edges = 0;
    /// Distinct kinds over every stored edge, absorbed members included.
    std::size_t edge_kinds = 0;
    std::map<EdgeKind, std::size_t> edges_by_kind;  // active edges
    double total_edge_weight = 0.0;
    double cut_size = 0.0;
    double cut_size_with_overhead = 0.0;
    double balance = 0.0;
    Heuristic heuristic = Heuristic::FM;
    std::uint32_t k = 2;
    double lambda = 1.0;
    double epsilon = 0.1;
    std::uint64_t seed = 0;
    double runtime_ms = 0.0;
    std::string error;

    friend bool operator==(const ComparisonRow &, const ComparisonRow &) = default;
};

struct ReportOptions {
    bool grouping = true;
    /// Record wall time; off by default so output is reproducible.
    bool timing = false;
    /// Gates inside while bodies count this many times in total_gates.
    double expected_iterations = 1.0;
};

/// Static row first (status skipped when the circuit has if/while blocks),
/// then the adaptive row. Errors are recorded in the rows, never thrown.
std::array<ComparisonRow, 2> compare(const Circuit &c, const WeightModel &wm, const PartitionConfig &cfg,
                                     const ReportOptions &opts = {});

struct SweepEntry {
    std::string suite;
    std::uint64_t size = 0;
    GeneratorSpec spec;
};

struct SizeRange {
    std::uint64_t first = 0;
    std::uint64_t last = 0;
    std::uint64_t step = 1;
};

/// Parses "a:b:step" or "a:b" (step 1) or a single size.
SizeRange parse_size_range(std::string_view text);

/// Suites: rus, qpe, iqpe, vqe, random, or all. Default ranges: rus 4..48
/// step 4, qpe 2..10, iqpe 2..10 (iterations), vqe 2..10, random 4..16 with
/// depth 8 and seeds 1, 2, 3.
std::vector<SweepEntry> sweep_entries(std::string_view suite, const SizeRange *sizes = nullptr);
SizeRange default_sizes(std::string_view suite);
inline constexpr std::array<std::uint64_t, 3> kRandomSweepSeeds{1, 2, 3};

/// Two rows per entry, ordered as the entries. `jobs` > 1 computes entries
/// on worker threads; the output does not depend on it.
std::vector<ComparisonRow> sweep(const std::vector<SweepEntry> &entries, const WeightModel &wm,
                                 const PartitionConfig &cfg, const ReportOptions &opts = {}, unsigned jobs = 1);

std::string comparison_csv_header();
std::string comparison_csv_row(const ComparisonRow &row);
std::string comparison_csv(const std::vector<ComparisonRow> &rows);
std::string comparison_json_line(const ComparisonRow &row);

/// Reads back comparison_csv output. Throws Error(InvalidArgument) naming
/// the line on malformed input.
std::vector<ComparisonRow> parse_comparison_csv(std::string_view text);

}  // namespace hypaq
