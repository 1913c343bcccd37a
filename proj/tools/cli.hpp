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

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hypaq::cli {

/// Runs one `hypaq` invocation (arguments without the program name). Data
/// goes to `out` unless `-o` is given, diagnostics to `err`. Returns 0 on
/// success, 1 for bad input, 2 for an internal invariant violation.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace hypaq::cli
