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

#include <cmath>
#include <numbers>

#include "hypaq/error.hpp"
#include "hypaq/flatten.hpp"
#include "hypaq/generator_spec.hpp"
#include "hypaq/generators.hpp"
#include "oracles.hpp"

using namespace hypaq;

namespace {

std::size_t max_depth(const Sequence &s) {
    std::size_t d = 0;
    for (const auto &st : s.items) {
        if (const auto *b = std::get_if<IfBlock>(&st.node))
            d = std::max(d, 1 + std::max(max_depth(b->then_body), max_depth(b->else_body)));
        else if (const auto *b = std::get_if<WhileBlock>(&st.node))
            d = std::max(d, 1 + max_depth(b->body));
        else if (const auto *b = std::get_if<ForBlock>(&st.node))
            d = std::max(d, 1 + max_depth(b->body));
    }
    return d;
}

}  // namespace

TEST(generators, qpe_structure) {
    for (std::uint32_t n = 1; n <= 8; ++n) {
        auto c = gen_qpe(n);
        auto counts = count_ops(c);
        EXPECT_EQ(c.num_qubits, n + 1);
        EXPECT_EQ(counts.multi_qubit_gates, n + n * (n - 1) / 2);
        EXPECT_EQ(counts.gates, 2 * n + n + n * (n - 1) / 2);
        EXPECT_EQ(counts.measures, n);
        EXPECT_FALSE(has_control_flow(c));
    }
    auto c = gen_qpe(3);
    const auto &first_cp = std::get<GateOp>(c.body.items[3].node);
    EXPECT_EQ(first_cp.name, "cp");
    EXPECT_NEAR(first_cp.params[0], 2 * std::numbers::pi * 5.0 / 32.0, 1e-6);
}

TEST(generators, iqpe_structure) {
    auto c = gen_iqpe(4);
    auto counts = count_ops(c);
    EXPECT_EQ(c.num_qubits, 2u);
    EXPECT_EQ(counts.if_blocks, 3u);
    EXPECT_EQ(counts.resets, 4u);
    EXPECT_EQ(counts.measures, 4u);
    EXPECT_TRUE(find_unwritten_condition_reads(c).empty());
}

TEST(generators, vqe_statement_count) {
    for (std::uint32_t n = 1; n <= 5; ++n)
        for (std::uint32_t l = 1; l <= 3; ++l)
            for (std::uint32_t k = 1; k <= 3; ++k) {
                auto flat = flatten(gen_vqe(n, l, k));
                EXPECT_EQ(flat.ops.size(), k * (n * l + (n - 1) * l + 2 * n));
            }
}

TEST(generators, rus_blocks_and_angle) {
    EXPECT_NEAR(std::cos(rus_theta() - std::numbers::pi), 0.6, 1e-12);
    for (std::uint32_t n = 4; n <= 48; n += 4) {
        auto c = gen_rus(n);
        auto counts = count_ops(c);
        EXPECT_EQ(counts.while_blocks, n / 4);
        EXPECT_EQ(c.num_clbits(), n / 4);
        EXPECT_TRUE(find_unwritten_condition_reads(c).empty());
    }
    EXPECT_EQ(gen_rus(7).num_clbits(), 1u);
    try {
        gen_rus(3);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidSize);
    }
}

TEST(generators, random_is_seeded_and_well_formed) {
    RandomCircuitOptions opt;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto c = gen_random_adaptive(6, 10, seed);
        EXPECT_EQ(c, gen_random_adaptive(6, 10, seed));
        EXPECT_NO_THROW(validate(c));
        EXPECT_TRUE(find_unwritten_condition_reads(c).empty()) << seed;
        EXPECT_LE(max_depth(c.body), opt.max_nesting);
        EXPECT_EQ(c.body.items.size(), 60u);
    }
    EXPECT_NE(gen_random_adaptive(6, 10, 1), gen_random_adaptive(6, 10, 2));
}

TEST(generators, random_smaller_width_is_a_subsequence) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto small = gen_random_adaptive(5, 6, seed);
        auto big = gen_random_adaptive(6, 6, seed);
        const auto &a = small.body.items;
        const auto &b = big.body.items;
        std::size_t j = 0;
        for (const auto &st : b)
            if (j < a.size() && st == a[j]) ++j;
        EXPECT_EQ(j, a.size()) << seed;
    }
}

TEST(generator_spec, parses_defaults_and_overrides) {
    auto s = parse_generator_spec("random(seed=9, n=4)");
    EXPECT_EQ(s.family, "random");
    EXPECT_EQ(s.args.at("n"), 4u);
    EXPECT_EQ(s.args.at("depth"), 8u);
    EXPECT_EQ(s.args.at("seed"), 9u);
    EXPECT_EQ(s.to_string(), "random(n=4,depth=8,seed=9)");
    EXPECT_EQ(parse_generator_spec("rus()").args.at("n"), 8u);
    EXPECT_TRUE(looks_like_generator_spec("qpe(n=3)"));
    EXPECT_FALSE(looks_like_generator_spec("gate_chain.qc"));
    for (const char *bad : {"nope(n=1)", "rus(m=3)", "rus(n=-1)", "rus(n=3,)", "rus", "rus(n)"}) {
        try {
            parse_generator_spec(bad);
            ADD_FAILURE() << bad;
        } catch (const Error &e) {
            EXPECT_EQ(e.code(), ErrorCode::InvalidArgument) << bad;
        }
    }
}
