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

#include "hypaq/partition_io.hpp"

#include <nlohmann/json.hpp>

#include "detail.hpp"

namespace hypaq {

using nlohmann::json;

std::string partition_result_to_json(const Hypergraph &g, const PartitionResult &r, const PartitionConfig &cfg,
                                     int indent) {
    json assignment = json::array();
    for (const auto &v : g.vertices())
        assignment.push_back({{"vertex", v.id}, {"label", v.label}, {"block", r.assignment.at(v.id)}});
    json records = json::array();
    for (const auto &c : r.comm_records) {
        records.push_back({{"edge", c.edge},
                           {"label", c.edge_label},
                           {"kind", edge_kind_name(c.kind)},
                           {"blocks", c.blocks},
                           {"condition", c.condition},
                           {"weight", c.weight},
                           {"adjusted_weight", c.adjusted_weight},
                           {"protocol_note", c.protocol_note}});
    }
    json history = json::array();
    for (const auto &p : r.pass_history) history.push_back({{"pass", p.pass}, {"cut", p.cut}});
    json doc = {{"partition_version", kPartitionJsonVersion},
                {"config",
                 {{"k", cfg.k},
                  {"lambda", cfg.lambda},
                  {"epsilon", cfg.epsilon},
                  {"max_passes", cfg.max_passes},
                  {"seed", cfg.seed},
                  {"heuristic", heuristic_name(r.heuristic)},
                  {"comm_overhead_factor", cfg.comm_overhead_factor},
                  {"restarts", cfg.restarts},
                  {"repartition_after_overhead", cfg.repartition_after_overhead}}},
                {"mode", mode_name(g.mode())},
                {"assignment", assignment},
                {"block_qubits", block_qubit_counts(g, r.assignment, cfg.k)},
                {"metrics",
                 {{"initial_cut", r.initial_cut},
                  {"cut_size", r.cut_size},
                  {"cut_size_with_overhead", r.cut_size_with_overhead},
                  {"balance", r.balance},
                  {"moves_applied", r.moves_applied}}},
                {"comm_records", records},
                {"pass_history", history}};
    return doc.dump(indent) + "\n";
}

std::string partition_csv_header() {
    return "circuit,mode,k,lambda,epsilon,heuristic,cut,overhead_cut,balance,moves,wall_time_ms\n";
}

std::string partition_csv_row(const std::string &circuit, HypergraphMode mode, const PartitionConfig &cfg,
                              const PartitionResult &r, double wall_time_ms) {
    using detail::format_real;
    return detail::csv_field(circuit) + "," + std::string(mode_name(mode)) + "," + std::to_string(cfg.k) + "," +
           format_real(cfg.lambda) + "," + format_real(cfg.epsilon) + "," + std::string(heuristic_name(r.heuristic)) +
           "," + format_real(r.cut_size) + "," + format_real(r.cut_size_with_overhead) + "," +
           format_real(r.balance) + "," + std::to_string(r.moves_applied) + "," + format_real(wall_time_ms) + "\n";
}

}  // namespace hypaq
