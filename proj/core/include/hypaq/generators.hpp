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

// Benchmark circuit families. Gates are named but never evaluated; what
// matters downstream is which qubits and classical bits each op touches.

#pragma once

#include <cstdint>

#include "hypaq/circuit.hpp"

namespace hypaq {

/// Quantum phase estimation with `n_counting` counting qubits plus one
/// target (the last qubit): Hadamards on the counting register, a ladder of
/// `cp` gates (counting qubit j controls U^(2^j)), the inverse QFT without
/// swaps (n(n-1)/2 `cp` gates, n Hadamards) and measurement of the counting
/// register into `c`. Static.
Circuit gen_qpe(std::uint32_t n_counting);

/// Iterative phase estimation on two qubits (q0 ancilla, q1 target). Every
/// iteration k applies h, cp, then (for k >= 1) an rz correction guarded by
/// the previous outcome c[k-1], h, measures the ancilla into c[k] and resets
/// it.
Circuit gen_iqpe(std::uint32_t iterations);

/// Variational ansatz with classical feedback: a For loop of
/// `feedback_iterations` rounds, each with `ansatz_layers` x (ry on every
/// qubit + cz chain), then measure-all and reset-all.
Circuit gen_vqe(std::uint32_t n_qubits, std::uint32_t ansatz_layers, std::uint32_t feedback_iterations);

/// Repeat-until-success Rz(theta) with cos(theta - pi) = 3/5, one 4-qubit
/// gadget per block (two ancillas, target, flag) and floor(n/4) blocks.
/// Each block runs the gadget once, then retries it inside
/// `while (flag[b] == 1)`, then resets its ancillas. Targets of neighbouring
/// blocks are chained with cx at the end. Throws Error(InvalidSize) for n < 4.
Circuit gen_rus(std::uint32_t n_qubits);

/// Rotation angle used by gen_rus: pi + arccos(3/5).
double rus_theta();

struct RandomCircuitOptions {
    double p_gate1 = 0.35;
    double p_gate2 = 0.35;
    double p_measure = 0.10;
    double p_reset = 0.05;
    double p_if = 0.07;
    double p_while = 0.04;
    double p_for = 0.04;
    double p_else = 0.5;
    std::uint32_t max_nesting = 2;
    std::uint32_t max_for_count = 3;
};

/// Random adaptive circuit built in `target_depth` rounds; in each round
/// every qubit i draws one statement from its own seeded stream. A slot only
/// touches qubits <= i and writes c[i] (While retry loops may re-measure the
/// bit they test), so the circuit for n qubits is a subsequence of the one for
/// n + 1 with the same seed. Conditions only read bits already measured on
/// every path; blocks nest at most `max_nesting` deep.
Circuit gen_random_adaptive(std::uint32_t n_qubits, std::uint32_t target_depth, std::uint64_t seed,
                            const RandomCircuitOptions &options = {});

}  // namespace hypaq
