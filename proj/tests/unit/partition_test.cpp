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

#include <random>

#include "hypaq/builders.hpp"
#include "hypaq/error.hpp"
#include "hypaq/generator_spec.hpp"
#include "hypaq/partition.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace hypaq;

namespace {

Hypergraph gate_chain() { return build_static(test_util::corpus_circuit("gate_chain.qc")); }

Hypergraph conditional_gate() { return build_adaptive(test_util::corpus_circuit("conditional_gate.qc"), {}, false); }

PartitionConfig config(std::uint32_t k, double eps, double lambda = 1.0) {
    PartitionConfig cfg;
    cfg.k = k;
    cfg.epsilon = eps;
    cfg.lambda = lambda;
    return cfg;
}

}  // namespace

TEST(metrics, cut_examples) {
    auto g = gate_chain();
    EXPECT_DOUBLE_EQ(compute_cut_size(g, {0, 1, 1}), 1.0);
    EXPECT_DOUBLE_EQ(compute_cut_size(g, {0, 1, 0}), 2.0);
    EXPECT_DOUBLE_EQ(compute_cut_size(g, {0, 0, 0}), 0.0);
    EXPECT_THROW(compute_cut_size(g, {0, 1}), Error);
    try {
        compute_balance(g, {0, kUnassigned, 1}, 2);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::UnassignedVertex);
    }
}

TEST(metrics, balance_and_capacity) {
    auto g = gate_chain();
    EXPECT_DOUBLE_EQ(compute_balance(g, {0, 0, 0}, 2), 1.0);
    EXPECT_DOUBLE_EQ(compute_balance(g, {0, 0, 1}, 2), 0.0);
    EXPECT_DOUBLE_EQ(compute_balance(g, {0, 0, 0}, 3), 2.0);
    EXPECT_EQ(block_capacity(3, 2, 0.1), 2u);
    EXPECT_EQ(block_capacity(3, 2, 0.5), 3u);
    EXPECT_EQ(block_capacity(10, 2, 0.2), 6u);
    EXPECT_FALSE(is_admissible(g, {0, 0, 0}, 2, 0.1));
    EXPECT_TRUE(is_admissible(g, {0, 0, 0}, 2, 0.5));
    EXPECT_FALSE(is_admissible(g, {0, 0, 2}, 2, 0.5));
    // Classical vertices carry no weight.
    auto h = conditional_gate();
    Assignment a(h.num_vertices(), 0);
    a[*h.find_vertex("q2")] = 1;
    EXPECT_DOUBLE_EQ(compute_balance(h, a, 2), 0.0);
}

TEST(initial_partition, contiguous_ranges_and_clbits) {
    auto g = build_adaptive(generate("rus(n=8)"));
    auto a = initial_partition(g, config(3, 0.1));
    EXPECT_EQ(block_qubit_counts(g, a, 3), (std::vector<std::size_t>{3, 3, 2}));
    for (const auto &v : g.vertices())
        if (v.kind == VertexKind::Clbit) EXPECT_EQ(a[v.id], a[*v.writer]);
    try {
        initial_partition(gate_chain(), config(4, 0.1));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::TooFewQubits);
    }
}

TEST(config, validation) {
    EXPECT_THROW(config(1, 0.1).validate(), Error);
    EXPECT_THROW(config(2, -0.1).validate(), Error);
    EXPECT_THROW(config(2, 0.1, -1).validate(), Error);
    auto cfg = config(2, 0.1);
    cfg.comm_overhead_factor = 0.5;
    EXPECT_THROW(cfg.validate(), Error);
    EXPECT_EQ(parse_heuristic("kl"), Heuristic::KL);
    EXPECT_THROW(parse_heuristic("sa"), Error);
}

TEST(gain_table, matches_recomputation_under_random_moves) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = oracle::random_hypergraph(rng);
        std::uint32_t k = 2 + static_cast<std::uint32_t>(rng() % 2);
        if (g.num_qubit_vertices() < k) continue;
        auto cfg = config(k, 0.3, 0.7);
        GainTable table(g, cfg, initial_partition(g, cfg));
        for (int step = 0; step < 1000 / 20; ++step) {
            const auto &a = table.assignment();
            ASSERT_NEAR(table.cut(), oracle::cut(g, a), 1e-9);
            ASSERT_NEAR(table.balance(), oracle::balance(g, a, k), 1e-9);
            for (VertexId v = 0; v < g.num_vertices(); ++v) {
                for (std::uint32_t b = 0; b < k; ++b) {
                    if (b == a[v]) continue;
                    auto moved = a;
                    moved[v] = b;
                    ASSERT_NEAR(table.cut_gain(v, b), oracle::cut(g, a) - oracle::cut(g, moved), 1e-9);
                    ASSERT_NEAR(table.balance_increase(v, b), oracle::balance(g, moved, k) - oracle::balance(g, a, k),
                                1e-9);
                    if (oracle::admissible(g, a, k, cfg.epsilon))
                        ASSERT_EQ(table.admissible(v, b), oracle::admissible(g, moved, k, cfg.epsilon));
                }
            }
            VertexId v = static_cast<VertexId>(rng() % g.num_vertices());
            std::uint32_t to = static_cast<std::uint32_t>(rng() % k);
            if (to != a[v]) table.move(v, to);
        }
    }
}

TEST(fm, gate_chain_and_conditional_gate) {
    auto r = partition(gate_chain(), config(2, 0.1));
    EXPECT_DOUBLE_EQ(r.cut_size, 1.0);
    EXPECT_DOUBLE_EQ(r.balance, 0.0);
    auto h = conditional_gate();
    auto r4 = partition(h, config(2, 0.5));
    EXPECT_DOUBLE_EQ(r4.cut_size, 0.5);
    EXPECT_DOUBLE_EQ(r4.cut_size_with_overhead, 1.0);
    ASSERT_EQ(r4.comm_records.size(), 1u);
    EXPECT_EQ(r4.comm_records[0].edge_label, "e_c1");
    EXPECT_EQ(r4.comm_records[0].blocks, (std::vector<std::uint32_t>{0, 1}));
    EXPECT_EQ(r4.comm_records[0].condition, "mid[0] == 1");
    EXPECT_DOUBLE_EQ(r4.comm_records[0].adjusted_weight, 1.0);
    EXPECT_EQ(r4.comm_records[0].protocol_note, "broadcast measured condition bits to blocks {0,1} before e_c1");
}

TEST(fm, retry_loop_keeps_while_body_together) {
    auto g = build_adaptive(test_util::corpus_circuit("retry_loop.qc"));
    auto r = partition(g, config(2, 0.1));
    EXPECT_EQ(r.assignment[*g.find_vertex("q0")], r.assignment[*g.find_vertex("q1")]);
    auto best = oracle::brute_force(g, 2, 0.1, 1.0);
    EXPECT_DOUBLE_EQ(r.cut_size + r.balance, best.min_objective);
}

TEST(fm, near_brute_force_and_monotone) {
    std::mt19937_64 rng(17);
    int optimal = 0, total = 0;
    for (int trial = 0; trial < 60; ++trial) {
        auto g = oracle::random_hypergraph(rng, {4, 9, 2, 10, 4});
        auto cfg = config(2, 0.2);
        auto r = partition(g, cfg);
        ASSERT_TRUE(is_admissible(g, r.assignment, 2, cfg.epsilon));
        EXPECT_NEAR(r.cut_size, oracle::cut(g, r.assignment), 1e-9);
        EXPECT_LE(r.cut_size, r.initial_cut + 1e-9);
        for (std::size_t i = 1; i < r.pass_history.size(); ++i)
            EXPECT_LE(r.pass_history[i].cut, r.pass_history[i - 1].cut + 1e-9);
        auto best = oracle::brute_force(g, 2, cfg.epsilon, cfg.lambda);
        EXPECT_LE(r.cut_size, 2.0 * best.min_cut + 1e-9);
        optimal += r.cut_size <= best.min_cut + 1e-9;
        ++total;
    }
    EXPECT_GE(optimal * 10, total * 7);
}

TEST(fm, scale_invariant) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = oracle::random_hypergraph(rng);
        auto cfg = config(2, 0.25, 0.5);
        std::vector<double> doubled;
        for (const auto &e : g.edges()) doubled.push_back(2.0 * e.weight);
        auto cfg2 = cfg;
        cfg2.lambda = 2.0 * cfg.lambda;
        auto start = initial_partition(g, cfg);
        auto a = fm_refine(g, cfg, start);
        auto b = fm_refine_weighted(g, cfg2, start, doubled);
        EXPECT_EQ(a.assignment, b.assignment);
        EXPECT_EQ(a.moves_applied, b.moves_applied);
    }
}

TEST(fm, deterministic_and_restarts_never_worse) {
    auto g = build_adaptive(generate("random(n=8,depth=8,seed=3)"));
    auto cfg = config(3, 0.2);
    auto a = partition(g, cfg);
    auto b = partition(g, cfg);
    EXPECT_EQ(a.assignment, b.assignment);
    EXPECT_EQ(a.pass_history.size(), b.pass_history.size());
    auto single_cfg = cfg;
    single_cfg.restarts = 0;
    auto single = partition(g, single_cfg);
    EXPECT_LE(a.cut_size, single.cut_size + 1e-9);
    EXPECT_EQ(a.initial_cut, single.initial_cut);
    cfg.restarts = 5;
    cfg.seed = 9;
    auto c = partition(g, cfg);
    EXPECT_LE(c.cut_size, single.cut_size + 1e-9);
    EXPECT_EQ(c.assignment, partition(g, cfg).assignment);
}

TEST(kl, clique_expansion) {
    Hypergraph g(HypergraphMode::Primal);
    for (int i = 0; i < 4; ++i) g.add_vertex(VertexKind::Qubit, "q" + std::to_string(i));
    g.add_edge({0, 1, 2}, 1.0);
    g.add_edge({0, 1}, 2.0);
    auto pairs = clique_expand(g);
    ASSERT_EQ(pairs.size(), 3u);
    EXPECT_EQ(pairs[0].u, 0u);
    EXPECT_EQ(pairs[0].v, 1u);
    EXPECT_DOUBLE_EQ(pairs[0].weight, 2.5);
    EXPECT_DOUBLE_EQ(pairs[1].weight, 0.5);
    EXPECT_DOUBLE_EQ(pairs[2].weight, 0.5);
}

TEST(kl, bisection_results) {
    auto cfg = config(2, 0.1);
    cfg.heuristic = Heuristic::KL;
    auto r = partition(gate_chain(), cfg);
    EXPECT_EQ(r.heuristic, Heuristic::KL);
    EXPECT_DOUBLE_EQ(r.cut_size, 1.0);
    EXPECT_EQ(r.moves_applied % 2, 0u);
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = oracle::random_hypergraph(rng);
        auto res = partition(g, cfg);
        EXPECT_LE(res.cut_size, res.initial_cut + 1e-9);
        EXPECT_TRUE(is_admissible(g, res.assignment, 2, cfg.epsilon));
        // Swaps preserve the qubit counts of the start partition.
        EXPECT_EQ(block_qubit_counts(g, res.assignment, 2), block_qubit_counts(g, initial_partition(g, cfg), 2));
    }
    cfg.k = 3;
    try {
        kl_partition(gate_chain(), cfg);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::UnsupportedK);
    }
}

TEST(conditional_cuts, records_and_overhead) {
    auto g = build_adaptive(test_util::corpus_circuit("retry_loop.qc"));
    auto cfg = config(2, 0.5);
    PartitionResult r;
    r.assignment.assign(g.num_vertices(), 0);
    r.assignment[*g.find_vertex("q1")] = 1;
    r.cut_size = compute_cut_size(g, r.assignment);
    auto out = handle_conditional_cuts(g, r, cfg);
    EXPECT_EQ(out.assignment, r.assignment);
    ASSERT_EQ(out.comm_records.size(), 1u);
    const auto &rec = out.comm_records[0];
    EXPECT_EQ(rec.kind, EdgeKind::SuperGroup);
    EXPECT_EQ(rec.edge_label, "e_while_0");
    EXPECT_EQ(rec.condition, "mid == \"00\"");
    // e1 and e_m2 are cut too, but carry no condition.
    EXPECT_DOUBLE_EQ(out.cut_size_with_overhead, out.cut_size + 15.5);

    PartitionResult none;
    none.assignment.assign(g.num_vertices(), 0);
    none = handle_conditional_cuts(g, none, cfg);
    EXPECT_TRUE(none.comm_records.empty());
    EXPECT_DOUBLE_EQ(none.cut_size_with_overhead, 0.0);
}

TEST(conditional_cuts, repartition_keeps_original_metrics) {
    auto g = conditional_gate();
    auto cfg = config(2, 0.5);
    cfg.repartition_after_overhead = true;
    auto r = partition(g, cfg);
    EXPECT_NEAR(r.cut_size, compute_cut_size(g, r.assignment), 1e-12);
    EXPECT_TRUE(is_admissible(g, r.assignment, 2, cfg.epsilon));
}
