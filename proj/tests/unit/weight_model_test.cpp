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
#include <gtest/gtest.h>

#include "hypaq/error.hpp"
#include "hypaq/weight_model.hpp"

using namespace hypaq;

namespace {

Circuit two_registers() {
    Circuit c;
    c.name = "t";
    c.num_qubits = 2;
    c.clbit_registers = {{"mid", 2}, {"c", 1}};
    return c;
}

}  // namespace

TEST(weight_model, default_probabilities) {
    auto c = two_registers();
    WeightModel wm;
    EXPECT_DOUBLE_EQ(estimate_condition_probability(Condition::bit_equals(ClbitRef{0}), c, wm), 0.5);
    auto reg = Condition::register_equals({ClbitRef{0}, ClbitRef{1}}, "00");
    EXPECT_DOUBLE_EQ(estimate_condition_probability(reg, c, wm), 0.25);
    wm.p_default = 0.3;
    EXPECT_NEAR(estimate_condition_probability(reg, c, wm), 0.09, 1e-12);
}

TEST(weight_model, overrides_and_alias) {
    auto c = two_registers();
    auto wm = parse_weight_model("p_override.mid[0]==1 = 0.9\np_override.c[0] = 0.2\n");
    EXPECT_DOUBLE_EQ(estimate_condition_probability(Condition::bit_equals(ClbitRef{0}), c, wm), 0.9);
    EXPECT_DOUBLE_EQ(estimate_condition_probability(Condition::bit_equals(ClbitRef{0}, false), c, wm), 0.5);
    EXPECT_DOUBLE_EQ(estimate_condition_probability(Condition::bit_equals(ClbitRef{2}), c, wm), 0.2);
}

TEST(weight_model, path_probability_and_text) {
    auto c = two_registers();
    WeightModel wm;
    wm.probability_overrides["mid[0]==1"] = 0.9;
    std::vector<GuardTerm> path{{Condition::bit_equals(ClbitRef{0}), false},
                                {Condition::bit_equals(ClbitRef{2}), true}};
    EXPECT_NEAR(path_probability(path, c, wm), 0.45, 1e-12);
    EXPECT_EQ(path_text(path, c), "mid[0] == 1 && !(c[0] == 1)");
    EXPECT_DOUBLE_EQ(path_probability({}, c, wm), 1.0);
}

TEST(weight_model, parses_every_key) {
    auto wm = parse_weight_model(
        "# comment\n"
        "base_weight.arity.2 = 1.5\n"
        "base_weight.arity.3=2   # trailing\n"
        "measurement_impact = constant:4\n"
        "p_default = 0.25\n"
        "while_multiplier = 3\n");
    EXPECT_DOUBLE_EQ(wm.base_weight(2), 1.5);
    EXPECT_DOUBLE_EQ(wm.base_weight(3), 2.0);
    EXPECT_DOUBLE_EQ(wm.base_weight(5), 1.0);
    EXPECT_EQ(wm.measurement_impact, MeasurementImpact::Constant);
    EXPECT_DOUBLE_EQ(wm.measurement_constant, 4.0);
    EXPECT_DOUBLE_EQ(wm.p_default, 0.25);
    EXPECT_DOUBLE_EQ(wm.while_multiplier, 3.0);
    EXPECT_NO_THROW(wm.validate());
    EXPECT_EQ(parse_weight_model("measurement_impact = constant").measurement_constant, 1.0);
    EXPECT_EQ(parse_weight_model("measurement_impact = dependent_gate_count").measurement_impact,
              MeasurementImpact::DependentGateCount);
}

TEST(weight_model, rejects_bad_entries) {
    for (const char *text : {"p_default = 1.5", "p_default = x", "base_weight.arity.0 = 1",
                             "base_weight.arity.2 = -1", "measurement_impact = sometimes", "bogus = 1",
                             "just a line", "= 3", "while_multiplier = -2", "p_override.c[0] = 2"}) {
        try {
            parse_weight_model(text);
            ADD_FAILURE() << text;
        } catch (const Error &e) {
            EXPECT_EQ(e.code(), ErrorCode::InvalidArgument) << text;
            EXPECT_NE(std::string(e.what()).find("line 1"), std::string::npos) << text;
        }
    }
    WeightModel wm;
    wm.p_default = -0.1;
    EXPECT_THROW(wm.validate(), Error);
}

TEST(weight_model, config_entries_keep_line_numbers) {
    auto entries = parse_config_entries("\n# x\nk = 2\n  lambda=0.5 \n");
    ASSERT_EQ(entries.size(), 2u);
    EXPECT_EQ(entries[0].key, "k");
    EXPECT_EQ(entries[0].line, 3);
    EXPECT_EQ(entries[1].value, "0.5");
    EXPECT_TRUE(is_weight_model_key("p_override.x"));
    EXPECT_FALSE(is_weight_model_key("lambda"));
}
