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

// Nelder-Mead downhill simplex with optional box clamping.

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ulab {

struct NelderMeadOptions {
    /// Stop when every vertex is within this infinity-norm distance of the best vertex.
    double diameter_tolerance = 1e-10;
    int max_iterations = 2000;
    /// Trial points are clamped coordinatewise into [lower, upper] when given.
    std::optional<std::vector<double>> lower;
    std::optional<std::vector<double>> upper;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
    /// (iteration, best value) recorded whenever the best vertex improves.
    std::vector<std::pair<int, double>> trace;
};

using Objective = std::function<double(std::span<const double>)>;

/// Minimizes `f` from an axis-aligned initial simplex x0 + steps[i] e_i. Non-finite
/// objective values are treated as +infinity.
NelderMeadResult nelder_mead(const Objective &f, std::vector<double> x0, std::span<const double> steps,
                             const NelderMeadOptions &options = {});

}  // namespace ulab
