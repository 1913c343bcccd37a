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

#include "hypaq/hypergraph_export.hpp"

#include <cmath>
#include <nlohmann/json.hpp>

#include "detail.hpp"

namespace hypaq {

using nlohmann::json;

IncidenceMatrix incidence_matrix(const Hypergraph &g) {
    IncidenceMatrix m;
    m.edge_ids = g.active_edges();
    m.rows = g.num_vertices();
    m.cols = m.edge_ids.size();
    m.entries.assign(m.rows * m.cols, 0);
    for (std::size_t c = 0; c < m.cols; ++c) {
        const auto &e = g.edge(m.edge_ids[c]);
        int mark = e.kind == EdgeKind::SuperGroup ? -1 : 1;
        for (auto v : e.pins) m.entries[v * m.cols + c] = mark;
    }
    return m;
}

std::string export_hmetis(const Hypergraph &g) {
    auto active = g.active_edges();
    std::string out = std::to_string(active.size()) + " " + std::to_string(g.num_vertices()) + " 11\n";
    for (auto id : active) {
        const auto &e = g.edge(id);
        auto w = static_cast<long long>(std::floor(e.weight * 100.0 + 0.5));
        out += std::to_string(w);
        for (auto v : e.pins) out += " " + std::to_string(v + 1);
        out += "\n";
    }
    for (const auto &v : g.vertices()) out += v.kind == VertexKind::Qubit ? "1\n" : "0\n";
    return out;
}

std::string export_incidence_csv(const Hypergraph &g) {
    auto m = incidence_matrix(g);
    std::string out = "vertex";
    for (auto id : m.edge_ids) out += "," + detail::csv_field(g.edge(id).label);
    out += "\n";
    for (std::size_t r = 0; r < m.rows; ++r) {
        out += detail::csv_field(g.vertex(static_cast<VertexId>(r)).label);
        for (std::size_t c = 0; c < m.cols; ++c) out += "," + std::to_string(m.at(r, c));
        out += "\n";
    }
    return out;
}

namespace {

json condition_json(const Condition &cond) {
    json bits = json::array();
    for (auto b : cond.bits) bits.push_back(b.index);
    return {{"kind", cond.kind == ConditionKind::BitEquals ? "bit_equals" : "register_equals"},
            {"bits", bits},
            {"expected", cond.expected}};
}

json edge_json(const Hyperedge &e) {
    json j = {{"id", e.id},
              {"label", e.label},
              {"kind", edge_kind_name(e.kind)},
              {"pins", e.pins},
              {"weight", e.weight},
              {"active", e.active}};
    if (e.conditional) {
        json path = json::array();
        for (const auto &t : e.conditional->path)
            path.push_back({{"condition", condition_json(t.condition)}, {"negated", t.negated}});
        j["condition"] = {{"text", e.conditional->text}, {"probability", e.conditional->probability}, {"path", path}};
    }
    if (e.group) j["group"] = {{"label", e.group->group_label}, {"members", e.group->members}};
    json origin = {{"ops", e.origin.ops}, {"line", e.origin.line}};
    origin["layer"] = e.origin.layer ? json(*e.origin.layer) : json(nullptr);
    j["origin"] = origin;
    return j;
}

}  // namespace

std::string hypergraph_to_json(const Hypergraph &g, int indent) {
    json vertices = json::array();
    for (const auto &v : g.vertices()) {
        json jv = {{"id", v.id}, {"kind", vertex_kind_name(v.kind)}, {"label", v.label}};
        if (v.writer) jv["writer"] = *v.writer;
        vertices.push_back(jv);
    }
    json edges = json::array();
    for (const auto &e : g.edges()) edges.push_back(edge_json(e));
    json doc = {{"hypergraph_version", kHypergraphJsonVersion},
                {"mode", mode_name(g.mode())},
                {"reset_count", g.reset_count},
                {"vertices", vertices},
                {"edges", edges}};
    return doc.dump(indent) + "\n";
}

HypergraphStats stats(const Hypergraph &g) {
    HypergraphStats s;
    s.num_vertices = g.num_vertices();
    s.num_qubit_vertices = g.num_qubit_vertices();
    for (const auto &e : g.edges()) {
        if (!e.active) continue;
        ++s.num_edges;
        ++s.edges_by_kind[e.kind];
        s.total_pin_count += e.pins.size();
        s.total_weight += e.weight;
    }
    return s;
}

std::string format_edges_by_kind(const std::map<EdgeKind, std::size_t> &counts) {
    std::string out;
    for (const auto &[kind, n] : counts) {
        if (n == 0) continue;
        if (!out.empty()) out += ";";
        out += std::string(edge_kind_name(kind)) + ":" + std::to_string(n);
    }
    return out;
}

}  // namespace hypaq
