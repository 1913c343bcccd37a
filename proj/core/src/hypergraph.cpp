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

#include "hypaq/hypergraph.hpp"

#include <algorithm>
#include <cmath>

#include "hypaq/error.hpp"

namespace hypaq {

std::vector<EdgeId> Hypergraph::active_edges() const {
    std::vector<EdgeId> out;
    for (const auto &e : edges_)
        if (e.active) out.push_back(e.id);
    return out;
}

std::optional<VertexId> Hypergraph::find_vertex(std::string_view label) const {
    for (const auto &v : vertices_)
        if (v.label == label) return v.id;
    return std::nullopt;
}

VertexId Hypergraph::add_vertex(VertexKind kind, std::string label, std::optional<VertexId> writer) {
    if (find_vertex(label)) throw Error(ErrorCode::DuplicateLabel, "vertex label '" + label + "' already used");
    if (mode_ == HypergraphMode::Primal && kind == VertexKind::Clbit)
        throw Error(ErrorCode::ModeViolation, "primal hypergraph cannot hold classical vertex '" + label + "'");
    if (writer && (*writer >= vertices_.size() || vertices_[*writer].kind != VertexKind::Qubit))
        throw Error(ErrorCode::UnknownVertex, "writer of '" + label + "' is not a qubit vertex");
    auto id = static_cast<VertexId>(vertices_.size());
    vertices_.push_back(Vertex{id, kind, std::move(label), writer});
    if (kind == VertexKind::Qubit) ++num_qubits_;
    return id;
}

EdgeId Hypergraph::add_edge(Hyperedge e) {
    if (e.pins.empty()) throw Error(ErrorCode::EmptyPins, "hyperedge needs at least one pin");
    std::sort(e.pins.begin(), e.pins.end());
    e.pins.erase(std::unique(e.pins.begin(), e.pins.end()), e.pins.end());
    if (e.pins.back() >= vertices_.size())
        throw Error(ErrorCode::UnknownVertex, "pin " + std::to_string(e.pins.back()) + " is not a vertex");
    if (mode_ == HypergraphMode::Primal && e.kind != EdgeKind::Standard)
        throw Error(ErrorCode::ModeViolation,
                    std::string(edge_kind_name(e.kind)) + " edge is not allowed in a primal hypergraph");
    if (e.kind == EdgeKind::SuperGroup)
        throw Error(ErrorCode::InvalidArgument, "SuperGroup edges are created with add_super_group");
    if (!(e.weight >= 0.0) || !std::isfinite(e.weight))
        throw Error(ErrorCode::InvalidArgument, "hyperedge weight must be finite and non-negative");
    if (e.kind == EdgeKind::Conditional) {
        if (!e.conditional) e.conditional.emplace();
        double p = e.conditional->probability;
        if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::InvalidArgument, "probability must lie in [0, 1]");
    } else {
        e.conditional.reset();
    }
    e.group.reset();
    e.active = true;
    e.id = static_cast<EdgeId>(edges_.size());
    if (e.label.empty()) e.label = "e" + std::to_string(e.id + 1);
    edges_.push_back(std::move(e));
    return edges_.back().id;
}

EdgeId Hypergraph::add_edge(std::vector<VertexId> pins, double weight, EdgeKind kind) {
    Hyperedge e;
    e.pins = std::move(pins);
    e.weight = weight;
    e.kind = kind;
    return add_edge(std::move(e));
}

EdgeId Hypergraph::add_super_group(std::vector<EdgeId> members, std::string group_label, EdgeOrigin origin) {
    if (mode_ == HypergraphMode::Primal)
        throw Error(ErrorCode::ModeViolation, "SuperGroup edge is not allowed in a primal hypergraph");
    if (members.empty()) throw Error(ErrorCode::EmptyPins, "SuperGroup '" + group_label + "' has no member edges");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Hyperedge g;
    g.kind = EdgeKind::SuperGroup;
    g.weight = 0.0;
    for (auto m : members) {
        if (m >= edges_.size() || !edges_[m].active)
            throw Error(ErrorCode::InvalidArgument, "SuperGroup member " + std::to_string(m) + " is not an active edge");
        const auto &e = edges_[m];
        g.pins.insert(g.pins.end(), e.pins.begin(), e.pins.end());
        g.weight += e.weight;
    }
    std::sort(g.pins.begin(), g.pins.end());
    g.pins.erase(std::unique(g.pins.begin(), g.pins.end()), g.pins.end());
    for (auto m : members) edges_[m].active = false;
    g.id = static_cast<EdgeId>(edges_.size());
    g.label = "e_" + group_label;
    g.group = SuperGroupInfo{std::move(members), std::move(group_label)};
    g.origin = std::move(origin);
    edges_.push_back(std::move(g));
    return edges_.back().id;
}

std::string_view edge_kind_name(EdgeKind kind) {
    switch (kind) {
        case EdgeKind::Standard: return "Standard";
        case EdgeKind::Conditional: return "Conditional";
        case EdgeKind::Measurement: return "MeasurementEdge";
        case EdgeKind::SuperGroup: return "SuperGroup";
    }
    return "Unknown";
}

std::string_view vertex_kind_name(VertexKind kind) { return kind == VertexKind::Qubit ? "Qubit" : "Clbit"; }

std::string_view mode_name(HypergraphMode mode) { return mode == HypergraphMode::Primal ? "primal" : "extended"; }

}  // namespace hypaq
