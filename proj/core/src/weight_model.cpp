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

#include "hypaq/weight_model.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include "hypaq/error.hpp"

namespace hypaq {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string strip_spaces(std::string_view s) {
    std::string out;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
    return out;
}

[[noreturn]] void bad_entry(const ConfigEntry &e, const std::string &why) {
    throw Error(ErrorCode::InvalidArgument, "config line " + std::to_string(e.line) + " (" + e.key + "): " + why);
}

double real_value(const ConfigEntry &e, std::string_view text) {
    text = trim(text);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v))
        bad_entry(e, "expected a number, got '" + std::string(text) + "'");
    return v;
}

constexpr std::string_view kArityPrefix = "base_weight.arity.";
constexpr std::string_view kOverridePrefix = "p_override.";

}  // namespace

double WeightModel::base_weight(std::size_t arity) const {
    auto it = base_weight_by_arity.find(arity);
    return it == base_weight_by_arity.end() ? 1.0 : it->second;
}

void WeightModel::validate() const {
    auto fail = [](const std::string &msg) { throw Error(ErrorCode::InvalidArgument, "weight model: " + msg); };
    for (const auto &[arity, w] : base_weight_by_arity)
        if (!(w >= 0.0)) fail("base weight for arity " + std::to_string(arity) + " is negative");
    if (!(measurement_constant >= 0.0)) fail("measurement constant is negative");
    if (!(p_default >= 0.0 && p_default <= 1.0)) fail("p_default must lie in [0, 1]");
    for (const auto &[pattern, p] : probability_overrides)
        if (!(p >= 0.0 && p <= 1.0)) fail("override for '" + pattern + "' must lie in [0, 1]");
    if (!(while_multiplier >= 0.0)) fail("while_multiplier is negative");
}

std::vector<ConfigEntry> parse_config_entries(std::string_view text) {
    std::vector<ConfigEntry> out;
    int line_no = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        // Override keys contain "==", so split on the last '='.
        auto eq = line.rfind('=');
        if (eq == std::string_view::npos || eq == 0)
            throw Error(ErrorCode::InvalidArgument,
                        "config line " + std::to_string(line_no) + ": expected key = value");
        std::string key = strip_spaces(line.substr(0, eq));
        std::string value(trim(line.substr(eq + 1)));
        out.push_back({std::move(key), std::move(value), line_no});
    }
    return out;
}

bool is_weight_model_key(std::string_view key) {
    return key.starts_with(kArityPrefix) || key.starts_with(kOverridePrefix) || key == "measurement_impact" ||
           key == "p_default" || key == "while_multiplier";
}

void apply_weight_setting(WeightModel &wm, const ConfigEntry &e) {
    std::string_view key = e.key;
    if (key.starts_with(kArityPrefix)) {
        auto digits = key.substr(kArityPrefix.size());
        std::size_t arity = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), arity);
        if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size() || arity == 0)
            bad_entry(e, "arity must be a positive integer");
        double w = real_value(e, e.value);
        if (w < 0.0) bad_entry(e, "weight must be non-negative");
        wm.base_weight_by_arity[arity] = w;
    } else if (key.starts_with(kOverridePrefix)) {
        auto pattern = key.substr(kOverridePrefix.size());
        if (pattern.empty()) bad_entry(e, "missing condition pattern");
        double p = real_value(e, e.value);
        if (p < 0.0 || p > 1.0) bad_entry(e, "probability must lie in [0, 1]");
        wm.probability_overrides[std::string(pattern)] = p;
    } else if (key == "measurement_impact") {
        std::string_view v = e.value;
        if (v == "dependent_gate_count") {
            wm.measurement_impact = MeasurementImpact::DependentGateCount;
        } else if (v.starts_with("constant")) {
            wm.measurement_impact = MeasurementImpact::Constant;
            wm.measurement_constant = 1.0;
            if (v.size() > 8) {
                if (v[8] != ':') bad_entry(e, "expected constant:<real>");
                wm.measurement_constant = real_value(e, v.substr(9));
                if (wm.measurement_constant < 0.0) bad_entry(e, "constant must be non-negative");
            }
        } else {
            bad_entry(e, "expected dependent_gate_count or constant:<real>");
        }
    } else if (key == "p_default") {
        double p = real_value(e, e.value);
        if (p < 0.0 || p > 1.0) bad_entry(e, "probability must lie in [0, 1]");
        wm.p_default = p;
    } else if (key == "while_multiplier") {
        double m = real_value(e, e.value);
        if (m < 0.0) bad_entry(e, "multiplier must be non-negative");
        wm.while_multiplier = m;
    } else {
        bad_entry(e, "unknown weight-model key");
    }
}

WeightModel parse_weight_model(std::string_view text) {
    WeightModel wm;
    for (const auto &e : parse_config_entries(text)) apply_weight_setting(wm, e);
    return wm;
}

double estimate_condition_probability(const Condition &cond, const Circuit &c, const WeightModel &wm) {
    auto pattern = condition_pattern(cond, c);
    if (auto it = wm.probability_overrides.find(pattern); it != wm.probability_overrides.end()) return it->second;
    // `mid[0]` is shorthand for `mid[0]==1`.
    if (cond.kind == ConditionKind::BitEquals && cond.expected == "1") {
        auto bare = pattern.substr(0, pattern.find("=="));
        if (auto it = wm.probability_overrides.find(bare); it != wm.probability_overrides.end()) return it->second;
    }
    if (cond.kind == ConditionKind::RegisterEquals)
        return std::pow(wm.p_default, static_cast<double>(cond.bits.size()));
    return wm.p_default;
}

double path_probability(const std::vector<GuardTerm> &path, const Circuit &c, const WeightModel &wm) {
    double p = 1.0;
    for (const auto &t : path) {
        double q = estimate_condition_probability(t.condition, c, wm);
        p *= t.negated ? 1.0 - q : q;
    }
    return p;
}

std::string path_text(const std::vector<GuardTerm> &path, const Circuit &c) {
    std::string out;
    for (const auto &t : path) {
        if (!out.empty()) out += " && ";
        auto text = condition_text(t.condition, c);
        out += t.negated ? "!(" + text + ")" : text;
    }
    return out;
}

}  // namespace hypaq
