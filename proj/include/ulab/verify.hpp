// Copyright 2026 The ulab Authors
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

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ulab/parallel.hpp"

namespace ulab {

enum class Comparison { Within, AtMost, AtLeast };

struct Claim {
    std::string id;
    int criterion = 0;
    std::string group;
    std::string description;
    double computed = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    Comparison comparison = Comparison::Within;
    bool pass = false;

    nlohmann::json to_json() const;
    /// One human-readable line: status, id, computed, expected, tolerance.
    std::string summary_line() const;
};

struct VerifyOptions {
    /// Group name (e.g. "dissonance"), criterion number, or claim id; empty runs everything.
    std::string only;
    /// Multiplies every pinned tolerance; 0 is the negative control.
    double tolerance_scale = 1.0;
    Execution exec = Execution::Parallel;
};

struct VerifyReport {
    std::vector<Claim> claims;

    bool all_pass() const;
    std::optional<Claim> first_failure() const;
    /// Claims belonging to one criterion.
    std::vector<Claim> for_criterion(int criterion) const;
    nlohmann::json to_json() const;
};

/// Group names in criterion order: bell, separable-x, closed-form, bell-diagonal, dissonance,
/// chi, noisy, gd, properties, probe.
const std::vector<std::string> &verify_groups();

/// Runs the acceptance claims. Throws InvalidParams for an unknown filter or negative scale.
VerifyReport run_verification(const VerifyOptions &options = {});

}  // namespace ulab
