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

// Weighted hypergraph with typed vertices and edges.
//
// Edges absorbed into a SuperGroup stay in storage but are marked inactive;
// metrics, exports and partitioning look at active edges only.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypaq/circuit.hpp"

namespace hypaq {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

enum class VertexKind { Qubit, Clbit };

struct Vertex {
    VertexId id = 0;
    VertexKind kind = VertexKind::Qubit;
    std::string label;
    /// For clbits: qubit vertex of the first measurement writing the bit.
    std::optional<VertexId> writer;
};

enum class EdgeKind { Standard, Conditional, Measurement, SuperGroup };

/// One conjunct of a path condition; `negated` marks an else branch.
struct GuardTerm {
    Condition condition;
    bool negated = false;
    friend bool operator==(const GuardTerm &, const GuardTerm &) = default;
};

struct ConditionalInfo {
    std::vector<GuardTerm> path;  // outermost first
    std::string text;             // e.g. "mid[0] == 1"
    double probability = 1.0;
};

struct SuperGroupInfo {
    std::vector<EdgeId> members;
    std::string group_label;  // "while_0"
};

struct EdgeOrigin {
    std::vector<std::size_t> ops;  // flat-op indices the edge came from
    std::optional<std::size_t> layer;
    int line = 0;
};

struct Hyperedge {
    EdgeId id = 0;
    std::vector<VertexId> pins;  // sorted, distinct
    double weight = 1.0;
    EdgeKind kind = EdgeKind::Standard;
    std::optional<ConditionalInfo> conditional;  // Conditional only
    std::optional<SuperGroupInfo> group;         // SuperGroup only
    bool active = true;
    std::string label;
    EdgeOrigin origin;
};

enum class HypergraphMode { Primal, Extended };

class Hypergraph {
   public:
    explicit Hypergraph(HypergraphMode mode = HypergraphMode::Primal) : mode_(mode) {}

    HypergraphMode mode() const noexcept { return mode_; }
    const std::vector<Vertex> &vertices() const noexcept { return vertices_; }
    const std::vector<Hyperedge> &edges() const noexcept { return edges_; }
    const Vertex &vertex(VertexId id) const { return vertices_.at(id); }
    const Hyperedge &edge(EdgeId id) const { return edges_.at(id); }

    std::size_t num_vertices() const noexcept { return vertices_.size(); }
    std::size_t num_qubit_vertices() const noexcept { return num_qubits_; }
    std::vector<EdgeId> active_edges() const;
    std::optional<VertexId> find_vertex(std::string_view label) const;

    /// Throws Error(DuplicateLabel), or Error(ModeViolation) for a clbit in
    /// a primal graph.
    VertexId add_vertex(VertexKind kind, std::string label, std::optional<VertexId> writer = std::nullopt);

    /// Appends `e` with a fresh id; pins are sorted and deduplicated and the
    /// label defaults to "e<id+1>". Throws Error(EmptyPins),
    /// Error(UnknownVertex), Error(ModeViolation) when the kind is not
    /// Standard in a primal graph, and Error(InvalidArgument) for a negative
    /// weight, a probability outside [0, 1] or a SuperGroup (use
    /// add_super_group).
    EdgeId add_edge(Hyperedge e);
    EdgeId add_edge(std::vector<VertexId> pins, double weight, EdgeKind kind = EdgeKind::Standard);

    /// SuperGroup over active `members`: pins are their union, weight their
    /// sum, and the members are deactivated.
    EdgeId add_super_group(std::vector<EdgeId> members, std::string group_label, EdgeOrigin origin = {});

    /// Reset operations seen while building; they never become edges.
    std::size_t reset_count = 0;

   private:
    HypergraphMode mode_;
    std::vector<Vertex> vertices_;
    std::vector<Hyperedge> edges_;
    std::size_t num_qubits_ = 0;
};

std::string_view edge_kind_name(EdgeKind kind);      // "Standard", "MeasurementEdge", ...
std::string_view vertex_kind_name(VertexKind kind);  // "Qubit", "Clbit"
std::string_view mode_name(HypergraphMode mode);     // "primal", "extended"

}  // namespace hypaq
