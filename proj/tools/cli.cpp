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

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hypaq/builders.hpp"
#include "hypaq/circuit_json.hpp"
#include "hypaq/circuit_text.hpp"
#include "hypaq/error.hpp"
#include "hypaq/generator_spec.hpp"
#include "hypaq/hypergraph_export.hpp"
#include "hypaq/partition.hpp"
#include "hypaq/partition_io.hpp"
#include "hypaq/report.hpp"

namespace hypaq::cli {

namespace {

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Everything a subcommand may consult; filled from defaults, then the
// HYPAQ_CONFIG file, then --weights, then explicit flags.
struct Settings {
    std::string input;
    std::string output;
    std::string format;
    bool strict = false;
    std::string mode = "adaptive";
    bool grouping = true;
    std::string weights_path;
    WeightModel wm;
    PartitionConfig cfg;
    std::string heuristic = "fm";
    std::string suite = "all";
    std::string sizes;
    bool timing = false;
    double expected_iterations = 1.0;
    unsigned jobs = 1;
};

struct Flags {
    CLI::Option *k = nullptr, *lambda = nullptr, *epsilon = nullptr, *max_passes = nullptr, *seed = nullptr,
                *heuristic = nullptr, *mode = nullptr, *grouping = nullptr, *overhead = nullptr,
                *restarts = nullptr, *repartition = nullptr;
};

bool given(const CLI::Option *opt) { return opt != nullptr && opt->count() > 0; }

template <class T>
T config_number(const ConfigEntry &e) {
    T v{};
    const auto &s = e.value;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw Error(ErrorCode::InvalidArgument,
                    "config line " + std::to_string(e.line) + " (" + e.key + "): bad value '" + s + "'");
    return v;
}

bool config_bool(const ConfigEntry &e) {
    if (e.value == "true" || e.value == "1" || e.value == "on") return true;
    if (e.value == "false" || e.value == "0" || e.value == "off") return false;
    throw Error(ErrorCode::InvalidArgument,
                "config line " + std::to_string(e.line) + " (" + e.key + "): expected true or false");
}

void apply_config_file(const std::string &path, Settings &s, const Flags &f) {
    std::vector<ConfigEntry> entries;
    try {
        entries = parse_config_entries(read_file(path));
    } catch (const Error &e) {
        throw Error(e.code(), path + ": " + e.what());
    }
    for (const auto &e : entries) {
        try {
            if (is_weight_model_key(e.key)) {
                apply_weight_setting(s.wm, e);
            } else if (e.key == "k") {
                if (!given(f.k)) s.cfg.k = config_number<std::uint32_t>(e);
            } else if (e.key == "lambda") {
                if (!given(f.lambda)) s.cfg.lambda = config_number<double>(e);
            } else if (e.key == "epsilon") {
                if (!given(f.epsilon)) s.cfg.epsilon = config_number<double>(e);
            } else if (e.key == "max_passes") {
                if (!given(f.max_passes)) s.cfg.max_passes = config_number<std::uint32_t>(e);
            } else if (e.key == "seed") {
                if (!given(f.seed)) s.cfg.seed = config_number<std::uint64_t>(e);
            } else if (e.key == "heuristic") {
                if (!given(f.heuristic)) s.heuristic = e.value;
            } else if (e.key == "overhead_factor") {
                if (!given(f.overhead)) s.cfg.comm_overhead_factor = config_number<double>(e);
            } else if (e.key == "restarts") {
                if (!given(f.restarts)) s.cfg.restarts = config_number<std::uint32_t>(e);
            } else if (e.key == "mode") {
                if (!given(f.mode)) s.mode = e.value;
            } else if (e.key == "grouping") {
                if (!given(f.grouping)) s.grouping = config_bool(e);
            } else if (e.key == "repartition_after_overhead") {
                if (!given(f.repartition)) s.cfg.repartition_after_overhead = config_bool(e);
            } else {
                throw Error(ErrorCode::InvalidArgument,
                            "config line " + std::to_string(e.line) + ": unknown key '" + e.key + "'");
            }
        } catch (const Error &err) {
            throw Error(err.code(), path + ": " + err.what());
        }
    }
}

void load_settings(Settings &s, const Flags &f) {
    if (const char *env = std::getenv("HYPAQ_CONFIG"); env != nullptr && *env != '\0') apply_config_file(env, s, f);
    if (!s.weights_path.empty()) {
        try {
            auto entries = parse_config_entries(read_file(s.weights_path));
            for (const auto &e : entries) apply_weight_setting(s.wm, e);
        } catch (const Error &e) {
            throw Error(e.code(), "--weights " + s.weights_path + ": " + e.what());
        }
    }
    s.cfg.heuristic = parse_heuristic(s.heuristic);
    if (s.mode != "static" && s.mode != "adaptive")
        throw Error(ErrorCode::InvalidArgument, "--mode: expected static or adaptive, got '" + s.mode + "'");
    try {
        s.cfg.validate();
    } catch (const Error &e) {
        throw Error(e.code(), std::string("partition flags: ") + e.what());
    }
}

Circuit load_circuit(const Settings &s, std::ostream &err) {
    const std::string &input = s.input;
    std::error_code ec;
    if (std::filesystem::is_regular_file(input, ec)) {
        auto text = read_file(input);
        try {
            if (input.size() >= 5 && input.ends_with(".json")) return circuit_from_json(text);
            auto parsed = parse_circuit_checked(text, ParseOptions{s.strict});
            for (const auto &w : parsed.warnings) err << input << ": warning: line " << w.line << ": " << w.message << "\n";
            return std::move(parsed.circuit);
        } catch (const Error &e) {
            throw Error(e.code(), input + ": " + e.what());
        }
    }
    if (looks_like_generator_spec(input)) return generate(input);
    throw Error(ErrorCode::Io, "input '" + input + "' is neither a readable file nor a generator spec");
}

void emit(const Settings &s, const std::string &data, std::ostream &out) {
    if (s.output.empty()) {
        out << data;
        return;
    }
    std::ofstream file(s.output, std::ios::binary);
    if (!file) throw Error(ErrorCode::Io, "-o: cannot write '" + s.output + "'");
    file << data;
    if (!file) throw Error(ErrorCode::Io, "-o: write to '" + s.output + "' failed");
}

Hypergraph build(const Circuit &c, const Settings &s) {
    Hypergraph g = s.mode == "static" ? build_static(c, s.wm) : build_adaptive(c, s.wm, s.grouping);
    if (g.mode() == HypergraphMode::Primal) {
        for (const auto &e : g.edges())
            if (e.kind != EdgeKind::Standard)
                throw Error(ErrorCode::InvariantViolation, "primal hypergraph holds a non-standard edge");
    }
    return g;
}

std::string edge_table_csv(const Hypergraph &g) {
    std::string out = "id,label,kind,active,weight,pins\n";
    for (const auto &e : g.edges()) {
        std::string pins;
        for (auto v : e.pins) pins += (pins.empty() ? "" : " ") + g.vertex(v).label;
        std::ostringstream w;
        w.precision(17);
        w << e.weight;
        out += std::to_string(e.id) + "," + e.label + "," + std::string(edge_kind_name(e.kind)) + "," +
               (e.active ? "1" : "0") + "," + w.str() + ",\"" + pins + "\"\n";
    }
    return out;
}

void require_format(const std::string &format, std::initializer_list<const char *> allowed) {
    for (const char *a : allowed)
        if (format == a) return;
    std::string list;
    for (const char *a : allowed) list += (list.empty() ? "" : "|") + std::string(a);
    throw Error(ErrorCode::InvalidArgument, "--format: expected " + list + ", got '" + format + "'");
}

void add_partition_flags(CLI::App *cmd, Settings &s, Flags &f) {
    f.k = cmd->add_option("-k", s.cfg.k, "number of blocks (QPUs)")->capture_default_str();
    f.lambda = cmd->add_option("--lambda", s.cfg.lambda, "balance weight in the gain")->capture_default_str();
    f.epsilon = cmd->add_option("--epsilon", s.cfg.epsilon, "balance tolerance fraction")->capture_default_str();
    f.max_passes = cmd->add_option("--max-passes", s.cfg.max_passes, "FM pass limit")->capture_default_str();
    f.seed = cmd->add_option("--seed", s.cfg.seed, "seed for restarts")->capture_default_str();
    f.heuristic = cmd->add_option("--heuristic", s.heuristic, "fm or kl")->capture_default_str();
    f.overhead = cmd->add_option("--overhead-factor", s.cfg.comm_overhead_factor,
                                 "weight multiplier for cut conditional edges")
                     ->capture_default_str();
    f.restarts = cmd->add_option("--restarts", s.cfg.restarts, "extra FM runs from random balanced starts")
                     ->capture_default_str();
    f.repartition = cmd->add_flag("--repartition-after-overhead", s.cfg.repartition_after_overhead,
                                  "rerun FM with overhead-adjusted weights");
}

void add_build_flags(CLI::App *cmd, Settings &s, Flags &f, bool with_mode) {
    if (with_mode) f.mode = cmd->add_option("--mode", s.mode, "static or adaptive")->capture_default_str();
    f.grouping = cmd->add_flag("--grouping,!--no-grouping", s.grouping, "form SuperGroup edges (default on)");
    cmd->add_option("--weights", s.weights_path, "weight-model config file");
    cmd->add_flag("--strict", s.strict, "reject conditions that read unmeasured bits");
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"hypaq: circuit hypergraph builder and partitioner", "hypaq"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "hypaq 0.1.0");

    Settings s;
    Flags hyper_flags, part_flags, cmp_flags, sweep_flags;

    auto *parse = app.add_subcommand("parse", "parse a circuit and print it as JSON or text");
    parse->add_option("input", s.input, "circuit file or generator spec")->required();
    parse->add_option("--format", s.format, "json or text")->default_str("json");
    parse->add_flag("--strict", s.strict, "reject conditions that read unmeasured bits");
    parse->add_option("-o,--out", s.output, "output file (default stdout)");

    auto *hyper = app.add_subcommand("hypergraph", "build a hypergraph and export it");
    hyper->add_option("input", s.input, "circuit file or generator spec")->required();
    add_build_flags(hyper, s, hyper_flags, true);
    hyper->add_option("--format", s.format, "json, csv, hmetis or incidence")->default_str("json");
    hyper->add_option("-o,--out", s.output, "output file (default stdout)");

    auto *part = app.add_subcommand("partition", "partition a circuit's hypergraph across k blocks");
    part->add_option("input", s.input, "circuit file or generator spec")->required();
    add_build_flags(part, s, part_flags, true);
    add_partition_flags(part, s, part_flags);
    part->add_option("--format", s.format, "json or csv")->default_str("json");
    part->add_option("-o,--out", s.output, "output file (default stdout)");

    auto *cmp = app.add_subcommand("compare", "static vs adaptive rows for one circuit");
    cmp->add_option("input", s.input, "circuit file or generator spec")->required();
    add_build_flags(cmp, s, cmp_flags, false);
    add_partition_flags(cmp, s, cmp_flags);
    cmp->add_option("--format", s.format, "csv or jsonl")->default_str("csv");
    cmp->add_flag("--timing", s.timing, "record wall time (output no longer reproducible)");
    cmp->add_option("--expected-iterations", s.expected_iterations, "while-body gate multiplier for total_gates")
        ->capture_default_str();
    cmp->add_option("-o,--out", s.output, "output file (default stdout)");

    auto *swp = app.add_subcommand("sweep", "comparison rows over benchmark families");
    swp->add_option("--suite", s.suite, "rus, qpe, iqpe, vqe, random or all")->capture_default_str();
    swp->add_option("--sizes", s.sizes, "first:last[:step] (default per suite)");
    add_build_flags(swp, s, sweep_flags, false);
    add_partition_flags(swp, s, sweep_flags);
    swp->add_option("--format", s.format, "csv or jsonl")->default_str("csv");
    swp->add_flag("--timing", s.timing, "record wall time (output no longer reproducible)");
    swp->add_option("--expected-iterations", s.expected_iterations, "while-body gate multiplier for total_gates")
        ->capture_default_str();
    swp->add_option("--jobs", s.jobs, "worker threads")->capture_default_str();
    swp->add_option("-o,--out", s.output, "output file (default stdout)");

    auto *gen = app.add_subcommand("generate", "emit a benchmark circuit, e.g. rus(n=8)");
    gen->add_option("spec", s.input, "generator spec")->required();
    gen->add_option("--format", s.format, "text or json")->default_str("text");
    gen->add_option("-o,--out", s.output, "output file (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*parse) {
            if (s.format.empty()) s.format = "json";
            require_format(s.format, {"json", "text"});
            Circuit c = load_circuit(s, err);
            emit(s, s.format == "json" ? circuit_to_json(c) : serialize_circuit(c), out);
        } else if (*gen) {
            if (s.format.empty()) s.format = "text";
            require_format(s.format, {"text", "json"});
            Circuit c = generate(s.input);
            emit(s, s.format == "json" ? circuit_to_json(c) : serialize_circuit(c), out);
        } else if (*hyper) {
            if (s.format.empty()) s.format = "json";
            require_format(s.format, {"json", "csv", "hmetis", "incidence"});
            load_settings(s, hyper_flags);
            Hypergraph g = build(load_circuit(s, err), s);
            std::string data = s.format == "json"     ? hypergraph_to_json(g)
                               : s.format == "csv"    ? edge_table_csv(g)
                               : s.format == "hmetis" ? export_hmetis(g)
                                                      : export_incidence_csv(g);
            emit(s, data, out);
        } else if (*part) {
            if (s.format.empty()) s.format = "json";
            require_format(s.format, {"json", "csv"});
            load_settings(s, part_flags);
            Circuit c = load_circuit(s, err);
            Hypergraph g = build(c, s);
            PartitionResult r = partition(g, s.cfg);
            if (!is_admissible(g, r.assignment, s.cfg.k, s.cfg.epsilon))
                throw Error(ErrorCode::InvariantViolation, "partition exceeds the block capacity");
            emit(s,
                 s.format == "json" ? partition_result_to_json(g, r, s.cfg)
                                    : partition_csv_header() + partition_csv_row(c.name, g.mode(), s.cfg, r, 0.0),
                 out);
        } else if (*cmp || *swp) {
            if (s.format.empty()) s.format = "csv";
            require_format(s.format, {"csv", "jsonl"});
            load_settings(s, *cmp ? cmp_flags : sweep_flags);
            ReportOptions opts{s.grouping, s.timing, s.expected_iterations};
            std::vector<ComparisonRow> rows;
            if (*cmp) {
                auto pair = compare(load_circuit(s, err), s.wm, s.cfg, opts);
                rows.assign(pair.begin(), pair.end());
            } else {
                SizeRange range;
                const SizeRange *sizes = nullptr;
                if (!s.sizes.empty()) {
                    range = parse_size_range(s.sizes);
                    sizes = &range;
                }
                rows = sweep(sweep_entries(s.suite, sizes), s.wm, s.cfg, opts, std::max(1u, s.jobs));
            }
            std::string data;
            if (s.format == "csv") {
                data = comparison_csv(rows);
            } else {
                for (const auto &r : rows) data += comparison_json_line(r);
            }
            emit(s, data, out);
        }
    } catch (const Error &e) {
        err << "hypaq: " << e.what() << "\n";
        return e.is_input_error() ? 1 : 2;
    } catch (const std::exception &e) {
        err << "hypaq: internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace hypaq::cli
