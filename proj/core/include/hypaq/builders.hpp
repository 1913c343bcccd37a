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

// Circuit -> hypergraph translation.

#pragma once

#include "hypaq/circuit.hpp"
#include "hypaq/hypergraph.hpp"
#include "hypaq/weight_model.hpp"

namespace hypaq {

/// Primal hypergraph: one vertex per qubit and one Standard edge per
/// multi-qubit gate instance (For bodies unrolled). Single-qubit gates and
/// measurements produce no edge. Throws Error(AdaptiveConstructInStaticMode)
/// or Error(WhileInStaticMode) naming the block's line.
Hypergraph build_static(const Circuit &c, const WeightModel &wm = {});

/// Extended hypergraph, edges created in layer order:
///  - unconditioned multi-qubit gate: Standard edge, labels e1, e2, ...
///  - gate under a path condition (any arity): Conditional edge over its
///    qubits and the bits its guards read, weight = base x path probability
///    (x while_multiplier inside a while body), labels e_c1, ...
///  - measurement whose bit is read by a later guard, or by the condition of
///    an enclosing while (the next iteration reads it): Measurement edge
///    {qubit, bit}, labels e_m1, ...
/// With `grouping`, every outermost control-flow block that produced edges
/// becomes a SuperGroup "e_<kind>_<id>" absorbing them.
Hypergraph build_adaptive(const Circuit &c, const WeightModel &wm = {}, bool grouping = true);

}  // namespace hypaq
