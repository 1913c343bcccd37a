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

// Edge weights and branch probabilities used by the hypergraph builders.
//
// Config files hold one `key = value` per line; `#` starts a comment.
//
//   base_weight.arity.<n> = <real>     weight of an n-qubit gate edge
//   measurement_impact = dependent_gate_count | constant:<real>
//   p_default = <real>                 probability of one constrained bit
//   p_override.<pattern> = <real>      e.g. p_override.mid[0]==1 = 0.9
//   while_multiplier = <real>          scale for edges inside while bodies

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hypaq/circuit.hpp"
#include "hypaq/hypergraph.hpp"

namespace hypaq {

enum class MeasurementImpact { DependentGateCount, Constant };

struct WeightModel {
    std::map<std::size_t, double> base_weight_by_arity;  // missing arity -> 1.0
    MeasurementImpact measurement_impact = MeasurementImpact::DependentGateCount;
    double measurement_constant = 1.0;
    double p_default = 0.5;
    std::map<std::string, double> probability_overrides;  // keyed by condition_pattern
    double while_multiplier = 1.0;

    double base_weight(std::size_t arity) const;

    /// Throws Error(InvalidArgument) for negative weights or probabilities
    /// outside [0, 1].
    void validate() const;
};

struct ConfigEntry {
    std::string key;
    std::string value;
    int line = 0;
};

/// Splits `key = value` lines. Throws Error(InvalidArgument) naming the line
/// on malformed input.
std::vector<ConfigEntry> parse_config_entries(std::string_view text);

/// True when `key` belongs to the weight model.
bool is_weight_model_key(std::string_view key);

/// Throws Error(InvalidArgument) for an unknown key or a bad value.
void apply_weight_setting(WeightModel &wm, const ConfigEntry &entry);

/// Every entry must be a weight-model key.
WeightModel parse_weight_model(std::string_view text);

/// Override for the condition if one matches, else p_default per
/// constrained bit (p_default^n for a register comparison).
double estimate_condition_probability(const Condition &cond, const Circuit &c, const WeightModel &wm);

/// Product over the path; a negated term contributes 1 - p.
double path_probability(const std::vector<GuardTerm> &path, const Circuit &c, const WeightModel &wm);

/// "mid[0] == 1 && !(c[1] == 0)".
std::string path_text(const std::vector<GuardTerm> &path, const Circuit &c);

}  // namespace hypaq
