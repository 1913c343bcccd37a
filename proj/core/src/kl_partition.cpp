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

#include <algorithm>
#include <map>

#include "hypaq/error.hpp"
#include "hypaq/partition.hpp"

namespace hypaq {

std::vector<WeightedPair> clique_expand(const Hypergraph &g) {
    std::map<std::pair<VertexId, VertexId>, double> acc;
    for (const auto &e : g.edges()) {
        if (!e.active || e.pins.size() < 2) continue;
        double w = e.weight / static_cast<double>(e.pins.size() - 1);
        for (std::size_t i = 0; i < e.pins.size(); ++i)
            for (std::size_t j = i + 1; j < e.pins.size(); ++j) acc[{e.pins[i], e.pins[j]}] += w;
    }
    std::vector<WeightedPair> out;
    for (const auto &[uv, w] : acc) out.push_back({uv.first, uv.second, w});
    return out;
}

namespace {

void coassign_clbits(const Hypergraph &g, Assignment &a) {
    for (const auto &v : g.vertices())
        if (v.kind == VertexKind::Clbit) a[v.id] = v.writer ? a[*v.writer] : 0;
}

}  // namespace

PartitionResult kl_partition(const Hypergraph &g, const PartitionConfig &cfg) {
    cfg.validate();
    if (cfg.k != 2) throw Error(ErrorCode::UnsupportedK, "KL bisection needs k = 2, got k = " + std::to_string(cfg.k));
    Assignment a = initial_partition(g, cfg);

    const auto n = g.num_vertices();
    std::vector<double> c(n * n, 0.0);
    for (const auto &p : clique_expand(g)) {
        c[p.u * n + p.v] = p.weight;
        c[p.v * n + p.u] = p.weight;
    }
    std::vector<VertexId> qubits;
    for (const auto &v : g.vertices())
        if (v.kind == VertexKind::Qubit) qubits.push_back(v.id);

    double total = 0.0;
    for (const auto &e : g.edges())
        if (e.active) total += e.weight;
    const double tol = 1e-9 * (total + 1.0);

    PartitionResult result;
    result.heuristic = Heuristic::KL;
    result.initial_cut = compute_cut_size(g, a);
    double current = result.initial_cut;

    for (std::uint32_t pass = 0; pass < cfg.max_passes; ++pass) {
        // D(v) = external - internal connection weight on the expanded graph.
        std::vector<double> d(n, 0.0);
        for (VertexId v : qubits)
            for (VertexId u = 0; u < n; ++u)
                if (u != v) d[v] += a[u] == a[v] ? -c[v * n + u] : c[v * n + u];

        Assignment work = a;
        std::vector<bool> locked(n, false);
        std::vector<std::pair<VertexId, VertexId>> swaps;
        std::vector<double> cumulative;
        double sum = 0.0;
        for (;;) {
            bool found = false;
            VertexId best_x = 0, best_y = 0;
            double best_gain = 0.0;
            for (VertexId x : qubits) {
                if (locked[x] || work[x] != 0) continue;
                for (VertexId y : qubits) {
                    if (locked[y] || work[y] != 1) continue;
                    double gain = d[x] + d[y] - 2.0 * c[x * n + y];
                    if (!found || gain > best_gain) {
                        found = true;
                        best_x = x;
                        best_y = y;
                        best_gain = gain;
                    }
                }
            }
            if (!found) break;
            locked[best_x] = locked[best_y] = true;
            for (VertexId v : qubits) {
                if (locked[v]) continue;
                if (work[v] == 0)
                    d[v] += 2.0 * c[v * n + best_x] - 2.0 * c[v * n + best_y];
                else
                    d[v] += 2.0 * c[v * n + best_y] - 2.0 * c[v * n + best_x];
            }
            std::swap(work[best_x], work[best_y]);
            swaps.emplace_back(best_x, best_y);
            sum += best_gain;
            cumulative.push_back(sum);
        }

        // Best prefix on the expanded graph that does not raise the hypergraph cut.
        std::size_t best_len = 0;
        double best_sum = tol;
        double best_cut = current;
        Assignment trial = a;
        for (std::size_t i = 0; i < swaps.size(); ++i) {
            std::swap(trial[swaps[i].first], trial[swaps[i].second]);
            if (cumulative[i] <= best_sum) continue;
            Assignment full = trial;
            coassign_clbits(g, full);
            double cut = compute_cut_size(g, full);
            if (cut <= current) {
                best_len = i + 1;
                best_sum = cumulative[i];
                best_cut = cut;
            }
        }
        for (std::size_t i = 0; i < best_len; ++i) std::swap(a[swaps[i].first], a[swaps[i].second]);
        coassign_clbits(g, a);
        current = best_len > 0 ? best_cut : current;
        result.moves_applied += 2 * best_len;
        result.pass_history.push_back(PassRecord{pass, current});
        if (best_len == 0) break;
    }

    result.assignment = std::move(a);
    result.cut_size = compute_cut_size(g, result.assignment);
    result.balance = compute_balance(g, result.assignment, cfg.k);
    result.cut_size_with_overhead = result.cut_size;
    return result;
}

}  // namespace hypaq
