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

// State files and the builtin state registry.
//
// Full form:      {"dim": 4, "re": [[...], ...], "im": [[...], ...]}   (row-major)
// X shorthand:    {"x_params": {"a11": ..., "a22": ..., "a33": ..., "a44": ..., "a14": ..., "a23": ...}}
//                 where a14 / a23 may also be [re, im] or {"re": ..., "im": ...}.

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ulab/states.hpp"

namespace ulab {

struct LoadedState {
    DensityMatrix state;
    /// Source description and any canonicalization applied (e.g. removed local phases).
    nlohmann::json metadata;
};

/// Full-form JSON with exact (round-trippable) doubles.
nlohmann::json state_to_json(const DensityMatrix &rho);

/// Accepts either form. Throws Error (Parse, InvalidState or InvalidParams) naming the problem.
LoadedState state_from_json(const nlohmann::json &doc);
LoadedState load_state_file(const std::string &path);

/// rho_star, bell_{phi,psi}_{plus,minus}, maximally_mixed, werner:p, chi:eps, noisy:p,
/// bell_diag:t1,t2,t3. Throws Parse for unknown names.
LoadedState builtin_state(std::string_view name);
std::vector<std::string> builtin_names();

/// "builtin:<name>" or a path to a JSON state file.
LoadedState resolve_state(std::string_view source);

/// FNV-1a 64-bit hash of the canonical full-form JSON, as 16 hex digits.
std::string state_fingerprint(const DensityMatrix &rho);

}  // namespace ulab
