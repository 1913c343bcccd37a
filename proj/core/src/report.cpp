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

#include "hypaq/report.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <nlohmann/json.hpp>
#include <set>
#include <thread>

#include "detail.hpp"
#include "hypaq/builders.hpp"
#include "hypaq/error.hpp"
#include "hypaq/flatten.hpp"
#include "hypaq/hypergraph_export.hpp"

namespace hypaq {

std::string_view row_status_name(RowStatus s) {
    switch (s) {
        case RowStatus::Ok: return "ok";
        case RowStatus::Skipped: return "skipped";
        case RowStatus::Error: return "error";
    }
    return "error";
}

namespace {

using Clock = std::chrono::steady_clock;

ComparisonRow base_row(const Circuit &c, const PartitionConfig &cfg, std::string mode) {
    ComparisonRow row;
    row.circuit = c.name;
    row.num_qubits = c.num_qubits;
    row.mode = std::move(mode);
    row.heuristic = cfg.heuristic;
    row.k = cfg.k;
    row.lambda = cfg.lambda;
    row.epsilon = cfg.epsilon;
    row.seed = cfg.seed;
    return row;
}

void fill_from_graph(ComparisonRow &row, const Hypergraph &g, const PartitionConfig &cfg) {
    auto s = stats(g);
    row.active_edges = s.num_edges;
    row.edges_by_kind = s.edges_by_kind;
    row.total_edge_weight = s.total_weight;
    std::set<EdgeKind> kinds;
    for (const auto &e : g.edges()) kinds.insert(e.kind);
    row.edge_kinds = kinds.size();
    auto r = partition(g, cfg);
    row.cut_size = r.cut_size;
    row.cut_size_with_overhead = r.cut_size_with_overhead;
    row.balance = r.balance;
}

std::size_t weighted_gate_count(const FlatCircuit &flat, double expected_iterations) {
    std::size_t outside = 0, inside = 0;
    for (const auto &op : flat.ops) {
        if (!op.gate()) continue;
        bool in_loop = std::any_of(op.guards.begin(), op.guards.end(), [](const Guard &g) { return g.loop; });
        ++(in_loop ? inside : outside);
    }
    return outside + static_cast<std::size_t>(std::llround(static_cast<double>(inside) * expected_iterations));
}

template <class Build>
void run_mode(ComparisonRow &row, const PartitionConfig &cfg, const ReportOptions &opts, Build build) {
    auto start = Clock::now();
    try {
        Hypergraph g = build();
        fill_from_graph(row, g, cfg);
    } catch (const Error &e) {
        bool skip = e.code() == ErrorCode::AdaptiveConstructInStaticMode || e.code() == ErrorCode::WhileInStaticMode;
        row.status = skip ? RowStatus::Skipped : RowStatus::Error;
        row.error = e.what();
    }
    if (opts.timing) row.runtime_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

std::array<ComparisonRow, 2> compare(const Circuit &c, const WeightModel &wm, const PartitionConfig &cfg,
                                     const ReportOptions &opts) {
    std::array<ComparisonRow, 2> rows{base_row(c, cfg, "static"), base_row(c, cfg, "adaptive")};
    try {
        FlatCircuit flat = flatten(c);
        auto depth = compute_layering(flat).depth();
        auto gates = weighted_gate_count(flat, opts.expected_iterations);
        for (auto &row : rows) {
            row.estimated_depth = depth;
            row.total_gates = gates;
        }
    } catch (const Error &e) {
        for (auto &row : rows) {
            row.status = RowStatus::Error;
            row.error = e.what();
        }
        return rows;
    }
    run_mode(rows[0], cfg, opts, [&] { return build_static(c, wm); });
    run_mode(rows[1], cfg, opts, [&] { return build_adaptive(c, wm, opts.grouping); });
    return rows;
}

SizeRange parse_size_range(std::string_view text) {
    auto fail = [&] {
        throw Error(ErrorCode::InvalidArgument, "sizes '" + std::string(text) + "': expected first:last[:step]");
    };
    std::vector<std::uint64_t> parts;
    std::string_view rest = text;
    for (;;) {
        auto colon = rest.find(':');
        auto piece = rest.substr(0, colon);
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
        if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size()) fail();
        parts.push_back(v);
        if (colon == std::string_view::npos) break;
        rest = rest.substr(colon + 1);
    }
    if (parts.size() > 3) fail();
    SizeRange r{parts[0], parts.size() > 1 ? parts[1] : parts[0], parts.size() > 2 ? parts[2] : 1};
    if (r.step == 0 || r.last < r.first) fail();
    return r;
}

SizeRange default_sizes(std::string_view suite) {
    if (suite == "rus") return {4, 48, 4};
    if (suite == "qpe" || suite == "iqpe" || suite == "vqe") return {2, 10, 1};
    if (suite == "random") return {4, 16, 1};
    throw Error(ErrorCode::InvalidArgument,
                "unknown suite '" + std::string(suite) + "' (expected rus, qpe, iqpe, vqe, random or all)");
}

std::vector<SweepEntry> sweep_entries(std::string_view suite, const SizeRange *sizes) {
    if (suite == "all") {
        std::vector<SweepEntry> out;
        for (const char *s : {"iqpe", "qpe", "random", "rus", "vqe"}) {
            auto part = sweep_entries(s, sizes);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    SizeRange range = sizes ? *sizes : default_sizes(suite);
    std::vector<SweepEntry> out;
    for (std::uint64_t n = range.first; n <= range.last; n += range.step) {
        std::string name(suite);
        if (suite == "random") {
            for (auto seed : kRandomSweepSeeds)
                out.push_back({name, n,
                               parse_generator_spec("random(n=" + std::to_string(n) +
                                                    ",depth=8,seed=" + std::to_string(seed) + ")")});
        } else if (suite == "iqpe") {
            out.push_back({name, n, parse_generator_spec("iqpe(iterations=" + std::to_string(n) + ")")});
        } else if (suite == "rus" || suite == "qpe" || suite == "vqe") {
            out.push_back({name, n, parse_generator_spec(name + "(n=" + std::to_string(n) + ")")});
        } else {
            default_sizes(suite);  // throws for unknown suites
        }
        if (range.last - n < range.step) break;
    }
    return out;
}

std::vector<ComparisonRow> sweep(const std::vector<SweepEntry> &entries, const WeightModel &wm,
                                 const PartitionConfig &cfg, const ReportOptions &opts, unsigned jobs) {
    std::vector<ComparisonRow> rows(entries.size() * 2);
    auto work = [&](std::size_t i) {
        const auto &entry = entries[i];
        std::array<ComparisonRow, 2> pair;
        try {
            pair = compare(generate(entry.spec), wm, cfg, opts);
        } catch (const Error &e) {
            for (int m = 0; m < 2; ++m) {
                pair[m].circuit = entry.spec.to_string();
                pair[m].mode = m == 0 ? "static" : "adaptive";
                pair[m].status = RowStatus::Error;
                pair[m].error = e.what();
                pair[m].heuristic = cfg.heuristic;
                pair[m].k = cfg.k;
                pair[m].lambda = cfg.lambda;
                pair[m].epsilon = cfg.epsilon;
                pair[m].seed = cfg.seed;
            }
        }
        for (auto &row : pair) {
            row.suite = entry.suite;
            row.size = entry.size;
        }
        rows[2 * i] = std::move(pair[0]);
        rows[2 * i + 1] = std::move(pair[1]);
    };
    if (jobs <= 1 || entries.size() < 2) {
        for (std::size_t i = 0; i < entries.size(); ++i) work(i);
        return rows;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(jobs, entries.size()); ++t) {
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < entries.size();) work(i);
        });
    }
    for (auto &t : pool) t.join();
    return rows;
}

// --- CSV / JSON-lines --------------------------------------------------------

std::string comparison_csv_header() {
    return "suite,circuit,size,num_qubits,mode,status,estimated_depth,total_gates,active_edges,edge_kinds,"
           "edges_by_kind,total_edge_weight,cut_size,cut_size_with_overhead,balance,heuristic,k,lambda,epsilon,"
           "seed,runtime_ms,error\n";
}

std::string comparison_csv_row(const ComparisonRow &row) {
    using detail::csv_field;
    using detail::format_real;
    std::string out;
    bool first = true;
    auto add = [&](const std::string &field) {
        if (!first) out += ",";
        first = false;
        out += field;
    };
    add(csv_field(row.suite));
    add(csv_field(row.circuit));
    add(std::to_string(row.size));
    add(std::to_string(row.num_qubits));
    add(row.mode);
    add(std::string(row_status_name(row.status)));
    add(std::to_string(row.estimated_depth));
    add(std::to_string(row.total_gates));
    add(std::to_string(row.active_edges));
    add(std::to_string(row.edge_kinds));
    add(csv_field(format_edges_by_kind(row.edges_by_kind)));
    add(format_real(row.total_edge_weight));
    add(format_real(row.cut_size));
    add(format_real(row.cut_size_with_overhead));
    add(format_real(row.balance));
    add(std::string(heuristic_name(row.heuristic)));
    add(std::to_string(row.k));
    add(format_real(row.lambda));
    add(format_real(row.epsilon));
    add(std::to_string(row.seed));
    add(format_real(row.runtime_ms));
    add(csv_field(row.error));
    return out + "\n";
}

std::string comparison_csv(const std::vector<ComparisonRow> &rows) {
    std::string out = comparison_csv_header();
    for (const auto &row : rows) out += comparison_csv_row(row);
    return out;
}

std::string comparison_json_line(const ComparisonRow &row) {
    nlohmann::ordered_json kinds = nlohmann::ordered_json::object();
    for (const auto &[kind, n] : row.edges_by_kind) kinds[std::string(edge_kind_name(kind))] = n;
    nlohmann::ordered_json j = {{"suite", row.suite},
                                {"circuit", row.circuit},
                                {"size", row.size},
                                {"num_qubits", row.num_qubits},
                                {"mode", row.mode},
                                {"status", row_status_name(row.status)},
                                {"estimated_depth", row.estimated_depth},
                                {"total_gates", row.total_gates},
                                {"active_edges", row.active_edges},
                                {"edge_kinds", row.edge_kinds},
                                {"edges_by_kind", kinds},
                                {"total_edge_weight", row.total_edge_weight},
                                {"cut_size", row.cut_size},
                                {"cut_size_with_overhead", row.cut_size_with_overhead},
                                {"balance", row.balance},
                                {"heuristic", heuristic_name(row.heuristic)},
                                {"k", row.k},
                                {"lambda", row.lambda},
                                {"epsilon", row.epsilon},
                                {"seed", row.seed},
                                {"runtime_ms", row.runtime_ms},
                                {"error", row.error}};
    return j.dump() + "\n";
}

namespace {

// Splits one logical CSV record, honouring quoted fields with embedded
// commas, quotes and newlines. Advances `pos` past the record.
std::vector<std::string> read_record(std::string_view text, std::size_t &pos, int line) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    while (pos < text.size()) {
        char ch = text[pos++];
        if (quoted) {
            if (ch == '"') {
                if (pos < text.size() && text[pos] == '"') {
                    fields.back() += '"';
                    ++pos;
                } else {
                    quoted = false;
                }
            } else {
                fields.back() += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.emplace_back();
        } else if (ch == '\n') {
            return fields;
        } else if (ch != '\r') {
            fields.back() += ch;
        }
    }
    if (quoted) throw Error(ErrorCode::InvalidArgument, "CSV line " + std::to_string(line) + ": unterminated quote");
    return fields;
}

template <class T>
T parse_number(const std::string &s, int line, const char *column) {
    T v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw Error(ErrorCode::InvalidArgument,
                    "CSV line " + std::to_string(line) + ": bad value '" + s + "' in column " + column);
    return v;
}

EdgeKind parse_edge_kind(std::string_view name, int line) {
    for (auto k : {EdgeKind::Standard, EdgeKind::Conditional, EdgeKind::Measurement, EdgeKind::SuperGroup})
        if (edge_kind_name(k) == name) return k;
    throw Error(ErrorCode::InvalidArgument, "CSV line " + std::to_string(line) + ": unknown edge kind '" +
                                                std::string(name) + "'");
}

}  // namespace

std::vector<ComparisonRow> parse_comparison_csv(std::string_view text) {
    std::size_t pos = 0;
    int line = 1;
    auto header = read_record(text, pos, line);
    std::string expected = comparison_csv_header();
    expected.pop_back();
    std::string joined;
    for (const auto &h : header) joined += (joined.empty() ? "" : ",") + h;
    if (joined != expected) throw Error(ErrorCode::InvalidArgument, "CSV line 1: unexpected header");

    std::vector<ComparisonRow> rows;
    while (pos < text.size()) {
        ++line;
        auto f = read_record(text, pos, line);
        if (f.size() == 1 && f[0].empty()) continue;
        if (f.size() != 22)
            throw Error(ErrorCode::InvalidArgument,
                        "CSV line " + std::to_string(line) + ": expected 22 fields, got " + std::to_string(f.size()));
        ComparisonRow r;
        r.suite = f[0];
        r.circuit = f[1];
        r.size = parse_number<std::uint64_t>(f[2], line, "size");
        r.num_qubits = parse_number<std::uint32_t>(f[3], line, "num_qubits");
        r.mode = f[4];
        if (f[5] == "ok") {
            r.status = RowStatus::Ok;
        } else if (f[5] == "skipped") {
            r.status = RowStatus::Skipped;
        } else if (f[5] == "error") {
            r.status = RowStatus::Error;
        } else {
            throw Error(ErrorCode::InvalidArgument, "CSV line " + std::to_string(line) + ": bad status '" + f[5] + "'");
        }
        r.estimated_depth = parse_number<std::size_t>(f[6], line, "estimated_depth");
        r.total_gates = parse_number<std::size_t>(f[7], line, "total_gates");
        r.active_edges = parse_number<std::size_t>(f[8], line, "active_edges");
        r.edge_kinds = parse_number<std::size_t>(f[9], line, "edge_kinds");
        std::string_view kinds = f[10];
        while (!kinds.empty()) {
            auto semi = kinds.find(';');
            auto item = kinds.substr(0, semi);
            auto colon = item.find(':');
            if (colon == std::string_view::npos)
                throw Error(ErrorCode::InvalidArgument, "CSV line " + std::to_string(line) + ": bad edges_by_kind");
            r.edges_by_kind[parse_edge_kind(item.substr(0, colon), line)] =
                parse_number<std::size_t>(std::string(item.substr(colon + 1)), line, "edges_by_kind");
            kinds = semi == std::string_view::npos ? std::string_view{} : kinds.substr(semi + 1);
        }
        r.total_edge_weight = parse_number<double>(f[11], line, "total_edge_weight");
        r.cut_size = parse_number<double>(f[12], line, "cut_size");
        r.cut_size_with_overhead = parse_number<double>(f[13], line, "cut_size_with_overhead");
        r.balance = parse_number<double>(f[14], line, "balance");
        r.heuristic = parse_heuristic(f[15]);
        r.k = parse_number<std::uint32_t>(f[16], line, "k");
        r.lambda = parse_number<double>(f[17], line, "lambda");
        r.epsilon = parse_number<double>(f[18], line, "epsilon");
        r.seed = parse_number<std::uint64_t>(f[19], line, "seed");
        r.runtime_ms = parse_number<double>(f[20], line, "runtime_ms");
        r.error = f[21];
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace hypaq
