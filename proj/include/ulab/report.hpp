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

#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "ulab/states.hpp"

namespace ulab {

/// Every measure computed for one state.
struct MeasureReport {
    std::string state_fingerprint;
    std::map<std::string, double> measures;
    std::map<std::string, double> tolerances;
    nlohmann::json metadata = nlohmann::json::object();

    /// {"state_fingerprint": ..., "measures": {...}, "tolerances": {...}, "metadata": {...}};
    /// numbers rounded to 9 significant digits.
    nlohmann::json to_json() const;
};

/// lqu, gd, negativity, concurrence, eof, discord, classical_correlation, mutual_information,
/// entropy_ab, entropy_a, entropy_b, conditional_entropy; plus dissonance for rank <= 2 states.
MeasureReport measure_report(const DensityMatrix &rho, nlohmann::json metadata = nlohmann::json::object());

}  // namespace ulab
