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

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hypaq/hypergraph.hpp"

namespace hypaq {

inline constexpr int kHypergraphJsonVersion = 1;

/// Vertex-by-active-edge matrix. Entries are 1 for a pin, -1 for a pin of a
/// SuperGroup edge, 0 otherwise.
struct IncidenceMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<EdgeId> edge_ids;  // column -> edge
    std::vector<int> entries;      // row-major

    int at(std::size_t r, std::size_t c) const { return entries.at(r * cols + c); }
};

IncidenceMatrix incidence_matrix(const Hypergraph &g);

/// Weighted hMETIS text ("|E| |V| 11" header) over active edges. Edge
/// weights are scaled by 100 and rounded half-up; vertex weights are 1 for
/// qubits and 0 for clbits.
std::string export_hmetis(const Hypergraph &g);

/// Incidence matrix as CSV: header `vertex,<edge labels>`, one row per vertex.
std::string export_incidence_csv(const Hypergraph &g);

/// Every stored edge, inactive members included.
std::string hypergraph_to_json(const Hypergraph &g, int indent = 2);

struct HypergraphStats {
    std::size_t num_vertices = 0;
    std::size_t num_qubit_vertices = 0;
    std::size_t num_edges = 0;  // active
    std::map<EdgeKind, std::size_t> edges_by_kind;  // active, non-zero kinds only
    std::size_t total_pin_count = 0;
    double total_weight = 0.0;
};

HypergraphStats stats(const Hypergraph &g);

/// "Standard:1;MeasurementEdge:1" in EdgeKind order.
std::string format_edges_by_kind(const std::map<EdgeKind, std::size_t> &counts);

}  // namespace hypaq
