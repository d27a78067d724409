// Copyright 2026 The multires Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

namespace multires {

/// Outcome of one verification criterion.
struct CriterionResult {
    std::string name;
    std::string detail;
    bool passed = false;
    double seconds = 0.0;
};

struct VerifyOptions {
    /// Run only the criterion with this name; empty runs all of them.
    std::string only;
    /// Override the criterion's top resolution (0 keeps the defaults).
    int max_n = 0;
    /// Seed for the deterministic random inputs.
    std::uint64_t seed = 20260810;
};

/// Names of all criteria in execution order.
std::vector<std::string> criterion_names();

/// Run the verification suite. Throws std::invalid_argument for an unknown
/// criterion name.
std::vector<CriterionResult> run_verification(const VerifyOptions& options);

}  // namespace multires
