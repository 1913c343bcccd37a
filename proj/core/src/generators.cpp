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

#include "hypaq/generators.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "hypaq/error.hpp"

namespace hypaq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require(bool ok, const std::string &msg) {
    if (!ok) throw Error(ErrorCode::InvalidSize, msg);
}

Circuit skeleton(std::string name, std::uint32_t qubits, std::string reg, std::uint32_t bits) {
    Circuit c;
    c.name = std::move(name);
    c.num_qubits = qubits;
    if (bits > 0) c.clbit_registers.push_back({std::move(reg), bits});
    return c;
}

// Rounded so the text form stays short; exact round-trip does not depend on it.
double angle(double radians) { return std::round(radians * 1e6) / 1e6; }

}  // namespace

Circuit gen_qpe(std::uint32_t n_counting) {
    require(n_counting >= 1, "qpe needs at least one counting qubit");
    const std::uint32_t target = n_counting;
    Circuit c = skeleton("qpe_" + std::to_string(n_counting), n_counting + 1, "c", n_counting);
    auto &body = c.body.items;

    constexpr double phase = 5.0 / 32.0;  // eigenphase of the modeled U
    for (std::uint32_t j = 0; j < n_counting; ++j) body.push_back(make_gate("h", {j}));
    for (std::uint32_t j = 0; j < n_counting; ++j) {
        double theta = std::fmod(kTwoPi * phase * std::ldexp(1.0, static_cast<int>(j)), kTwoPi);
        body.push_back(make_gate("cp", {j, target}, {angle(theta)}));
    }
    // Inverse QFT, most significant qubit first, no final swaps.
    for (std::uint32_t jj = n_counting; jj-- > 0;) {
        for (std::uint32_t m = n_counting - 1; m > jj; --m) {
            double theta = -std::numbers::pi / std::ldexp(1.0, static_cast<int>(m - jj));
            body.push_back(make_gate("cp", {m, jj}, {angle(theta)}));
        }
        body.push_back(make_gate("h", {jj}));
    }
    for (std::uint32_t j = 0; j < n_counting; ++j) body.push_back(make_measure(j, j));
    return c;
}

Circuit gen_iqpe(std::uint32_t iterations) {
    require(iterations >= 1, "iqpe needs at least one iteration");
    Circuit c = skeleton("iqpe_" + std::to_string(iterations), 2, "c", iterations);
    auto &body = c.body.items;
    constexpr double phase = 5.0 / 32.0;
    for (std::uint32_t k = 0; k < iterations; ++k) {
        // Most significant phase bit is estimated first.
        int power = static_cast<int>(iterations - 1 - k);
        double theta = std::fmod(kTwoPi * phase * std::ldexp(1.0, power), kTwoPi);
        body.push_back(make_gate("h", {0}));
        body.push_back(make_gate("cp", {0, 1}, {angle(theta)}));
        if (k >= 1) {
            body.push_back(make_if(Condition::bit_equals(ClbitRef{k - 1}, true),
                                   {make_gate("rz", {0}, {angle(-std::numbers::pi / 2.0)})}));
        }
        body.push_back(make_gate("h", {0}));
        body.push_back(make_measure(0, k));
        body.push_back(make_reset(0));
    }
    return c;
}

Circuit gen_vqe(std::uint32_t n_qubits, std::uint32_t ansatz_layers, std::uint32_t feedback_iterations) {
    require(n_qubits >= 1 && ansatz_layers >= 1 && feedback_iterations >= 1, "vqe arguments must be positive");
    Circuit c = skeleton("vqe_" + std::to_string(n_qubits) + "_" + std::to_string(ansatz_layers) + "_" +
                             std::to_string(feedback_iterations),
                         n_qubits, "c", n_qubits);
    std::vector<Statement> round;
    for (std::uint32_t l = 0; l < ansatz_layers; ++l) {
        for (std::uint32_t q = 0; q < n_qubits; ++q)
            round.push_back(make_gate("ry", {q}, {angle(0.1 * (1 + l * n_qubits + q))}));
        for (std::uint32_t q = 0; q + 1 < n_qubits; ++q) round.push_back(make_gate("cz", {q, q + 1}));
    }
    for (std::uint32_t q = 0; q < n_qubits; ++q) round.push_back(make_measure(q, q));
    for (std::uint32_t q = 0; q < n_qubits; ++q) round.push_back(make_reset(q));
    c.body.items.push_back(make_for(feedback_iterations, std::move(round)));
    return c;
}

double rus_theta() { return std::numbers::pi + std::acos(3.0 / 5.0); }

Circuit gen_rus(std::uint32_t n_qubits) {
    require(n_qubits >= 4, "rus needs at least 4 qubits, got " + std::to_string(n_qubits));
    const std::uint32_t blocks = n_qubits / 4;
    Circuit c = skeleton("rus_" + std::to_string(n_qubits), n_qubits, "flag", blocks);
    auto &body = c.body.items;
    const double theta = rus_theta();

    for (std::uint32_t b = 0; b < blocks; ++b) {
        const std::uint32_t a0 = 4 * b, a1 = a0 + 1, t = a0 + 2, f = a0 + 3;
        auto gadget = [&] {
            return std::vector<Statement>{
                make_gate("h", {a0}),          make_gate("h", {a1}),          make_gate("cx", {a0, t}),
                make_gate("cx", {a1, t}),      make_gate("rz", {t}, {theta}), make_gate("cx", {a1, t}),
                make_gate("cx", {a0, t}),      make_gate("h", {a0}),          make_gate("h", {a1}),
                make_gate("cx", {a0, f}),      make_gate("cx", {a1, f}),      make_measure(f, b),
            };
        };
        for (auto &st : gadget()) body.push_back(std::move(st));
        std::vector<Statement> retry{make_reset(a0), make_reset(a1), make_reset(f)};
        for (auto &st : gadget()) retry.push_back(std::move(st));
        body.push_back(make_while(Condition::bit_equals(ClbitRef{b}, true), std::move(retry)));
        body.push_back(make_reset(a0));
        body.push_back(make_reset(a1));
        body.push_back(make_reset(f));
    }
    for (std::uint32_t b = 0; b + 1 < blocks; ++b) body.push_back(make_gate("cx", {4 * b + 2, 4 * (b + 1) + 2}));
    return c;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Small self-contained stream so output does not depend on the standard
// library's distribution implementations.
class Stream {
   public:
    explicit Stream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return splitmix64(state_);
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    std::uint32_t below(std::uint32_t n) { return static_cast<std::uint32_t>(next() % n); }

   private:
    std::uint64_t state_;
};

enum class Draw { Gate1, Gate2, Measure, Reset, If, While, For };

class RandomSlot {
   public:
    RandomSlot(Stream &rng, std::uint32_t slot, const RandomCircuitOptions &opt) : rng_(rng), slot_(slot), opt_(opt) {}

    Statement statement(std::uint32_t level, std::vector<bool> &written) {
        Draw d = pick(level);
        switch (d) {
            case Draw::Gate1: return gate1();
            case Draw::Gate2: return slot_ == 0 ? gate1() : gate2();
            case Draw::Measure: return measure(written);
            case Draw::Reset: return make_reset(slot_);
            case Draw::If: return if_block(level, written);
            case Draw::While: return while_block(level, written);
            case Draw::For: return for_block(level, written);
        }
        return gate1();
    }

   private:
    Draw pick(std::uint32_t level) {
        const std::array<double, 7> weights{opt_.p_gate1, opt_.p_gate2, opt_.p_measure, opt_.p_reset,
                                            opt_.p_if,    opt_.p_while, opt_.p_for};
        const bool blocks_allowed = level < opt_.max_nesting;
        double total = 0.0;
        for (std::size_t i = 0; i < weights.size(); ++i)
            if (blocks_allowed || i < 4) total += weights[i];
        if (total <= 0.0) return Draw::Gate1;
        double r = rng_.uniform() * total;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            if (!blocks_allowed && i >= 4) break;
            if (r < weights[i]) return static_cast<Draw>(i);
            r -= weights[i];
        }
        return Draw::Gate1;
    }

    double theta() { return std::round(rng_.uniform() * kTwoPi * 1000.0) / 1000.0; }

    Statement gate1() {
        static const std::array<const char *, 6> names{"h", "x", "s", "t", "rz", "ry"};
        std::string name = names[rng_.below(names.size())];
        if (name == "rz" || name == "ry") return make_gate(name, {slot_}, {theta()});
        return make_gate(name, {slot_});
    }

    Statement gate2() {
        static const std::array<const char *, 3> names{"cx", "cz", "cp"};
        std::string name = names[rng_.below(names.size())];
        std::uint32_t partner = rng_.below(slot_);
        std::vector<std::uint32_t> qubits = rng_.below(2) ? std::vector{partner, slot_} : std::vector{slot_, partner};
        if (name == "cp") return make_gate(name, qubits, {theta()});
        return make_gate(name, qubits);
    }

    Statement measure(std::vector<bool> &written) {
        written[slot_] = true;
        return make_measure(slot_, slot_);
    }

    // Bits at or below this slot that are measured on every path so far.
    std::vector<std::uint32_t> readable(const std::vector<bool> &written) const {
        std::vector<std::uint32_t> out;
        for (std::uint32_t j = 0; j <= slot_; ++j)
            if (written[j]) out.push_back(j);
        return out;
    }

    std::vector<Statement> body(std::uint32_t level, std::vector<bool> &written) {
        std::vector<Statement> out;
        std::uint32_t n = 1 + rng_.below(2);
        for (std::uint32_t i = 0; i < n; ++i) out.push_back(statement(level, written));
        return out;
    }

    Statement if_block(std::uint32_t level, std::vector<bool> &written) {
        auto bits = readable(written);
        if (bits.empty()) return measure(written);
        std::uint32_t bit = bits[rng_.below(static_cast<std::uint32_t>(bits.size()))];
        bool value = rng_.uniform() < 0.75;
        auto then_written = written;
        auto then_body = body(level + 1, then_written);
        auto else_written = written;
        std::vector<Statement> else_body;
        if (rng_.uniform() < opt_.p_else) else_body = body(level + 1, else_written);
        for (std::size_t i = 0; i < written.size(); ++i) written[i] = then_written[i] && else_written[i];
        return make_if(Condition::bit_equals(ClbitRef{bit}, value), std::move(then_body), std::move(else_body));
    }

    Statement while_block(std::uint32_t level, std::vector<bool> &written) {
        auto bits = readable(written);
        if (bits.empty()) return measure(written);
        std::uint32_t bit = bits[rng_.below(static_cast<std::uint32_t>(bits.size()))];
        bool value = rng_.uniform() < 0.75;
        auto inner = written;
        auto loop_body = body(level + 1, inner);
        loop_body.push_back(make_measure(bit, bit));  // retry re-samples the tested bit
        return make_while(Condition::bit_equals(ClbitRef{bit}, value), std::move(loop_body));
    }

    Statement for_block(std::uint32_t level, std::vector<bool> &written) {
        std::uint32_t count = 2 + (opt_.max_for_count > 2 ? rng_.below(opt_.max_for_count - 1) : 0);
        return make_for(count, body(level + 1, written));
    }

    Stream &rng_;
    std::uint32_t slot_;
    const RandomCircuitOptions &opt_;
};

}  // namespace

Circuit gen_random_adaptive(std::uint32_t n_qubits, std::uint32_t target_depth, std::uint64_t seed,
                            const RandomCircuitOptions &options) {
    require(n_qubits >= 2, "random circuits need at least 2 qubits");
    require(target_depth >= 1, "random circuits need a positive depth");
    Circuit c = skeleton("random_" + std::to_string(n_qubits) + "_" + std::to_string(target_depth) + "_" +
                             std::to_string(seed),
                         n_qubits, "c", n_qubits);
    std::vector<bool> written(n_qubits, false);
    for (std::uint32_t round = 0; round < target_depth; ++round) {
        for (std::uint32_t q = 0; q < n_qubits; ++q) {
            Stream rng(splitmix64(seed ^ splitmix64((static_cast<std::uint64_t>(round) << 32) | q)));
            RandomSlot slot(rng, q, options);
            c.body.items.push_back(slot.statement(0, written));
        }
    }
    return c;
}

}  // namespace hypaq
