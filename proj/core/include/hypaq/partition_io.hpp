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

#include <string>

#include "hypaq/hypergraph.hpp"
#include "hypaq/partition.hpp"

namespace hypaq {

inline constexpr int kPartitionJsonVersion = 1;

std::string partition_result_to_json(const Hypergraph &g, const PartitionResult &r, const PartitionConfig &cfg,
                                     int indent = 2);

/// circuit,mode,k,lambda,epsilon,heuristic,cut,overhead_cut,balance,moves,wall_time_ms
std::string partition_csv_header();
std::string partition_csv_row(const std::string &circuit, HypergraphMode mode, const PartitionConfig &cfg,
                              const PartitionResult &r, double wall_time_ms);

}  // namespace hypaq
