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

#include "ulab/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "ulab/errors.hpp"

namespace ulab {

namespace {

struct Vertex {
    std::vector<double> x;
    double value;
};

}  // namespace

NelderMeadResult nelder_mead(const Objective &f, std::vector<double> x0, std::span<const double> steps,
                             const NelderMeadOptions &options) {
    const std::size_t n = x0.size();
    if (steps.size() != n) throw Error(ErrorCode::DimMismatch, "steps must match the starting point");
    if ((options.lower && options.lower->size() != n) || (options.upper && options.upper->size() != n)) {
        throw Error(ErrorCode::DimMismatch, "bounds must match the starting point");
    }

    const auto clamp = [&](std::vector<double> &x) {
        for (std::size_t i = 0; i < n; ++i) {
            if (options.lower) x[i] = std::max(x[i], (*options.lower)[i]);
            if (options.upper) x[i] = std::min(x[i], (*options.upper)[i]);
        }
    };
    const auto evaluate = [&](std::vector<double> x) {
        clamp(x);
        double v = f(x);
        if (!std::isfinite(v)) v = std::numeric_limits<double>::infinity();
        return Vertex{std::move(x), v};
    };

    std::vector<Vertex> simplex;
    simplex.reserve(n + 1);
    simplex.push_back(evaluate(x0));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> x = simplex.front().x;
        x[i] += steps[i];
        // A step pushed onto a bound would collapse the simplex; step the other way instead.
        if (options.upper && x[i] > (*options.upper)[i]) x[i] = simplex.front().x[i] - steps[i];
        if (options.lower && x[i] < (*options.lower)[i]) x[i] = simplex.front().x[i] + steps[i];
        simplex.push_back(evaluate(std::move(x)));
    }

    const auto by_value = [](const Vertex &a, const Vertex &b) { return a.value < b.value; };
    const auto diameter = [&]() {
        double d = 0.0;
        for (std::size_t v = 1; v <= n; ++v) {
            for (std::size_t i = 0; i < n; ++i) d = std::max(d, std::abs(simplex[v].x[i] - simplex[0].x[i]));
        }
        return d;
    };
    const auto along = [&](const std::vector<double> &centroid, const std::vector<double> &worst, double t) {
        std::vector<double> x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = centroid[i] + t * (worst[i] - centroid[i]);
        return x;
    };

    NelderMeadResult result;
    std::stable_sort(simplex.begin(), simplex.end(), by_value);
    double best_seen = simplex.front().value;
    result.trace.emplace_back(0, best_seen);

    int iteration = 0;
    while (iteration < options.max_iterations) {
        if (diameter() < options.diameter_tolerance) {
            result.converged = true;
            break;
        }
        ++iteration;
        std::vector<double> centroid(n, 0.0);
        for (std::size_t v = 0; v < n; ++v) {
            for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[v].x[i] / static_cast<double>(n);
        }
        Vertex &worst = simplex[n];
        Vertex reflected = evaluate(along(centroid, worst.x, -1.0));
        if (reflected.value < simplex.front().value) {
            Vertex expanded = evaluate(along(centroid, worst.x, -2.0));
            worst = expanded.value < reflected.value ? std::move(expanded) : std::move(reflected);
        } else if (reflected.value < simplex[n - 1].value) {
            worst = std::move(reflected);
        } else {
            const bool outside = reflected.value < worst.value;
            Vertex contracted = evaluate(along(centroid, worst.x, outside ? -0.5 : 0.5));
            if (contracted.value < (outside ? reflected.value : worst.value)) {
                worst = std::move(contracted);
            } else {
                for (std::size_t v = 1; v <= n; ++v) {
                    std::vector<double> x(n);
                    for (std::size_t i = 0; i < n; ++i) {
                        x[i] = simplex[0].x[i] + 0.5 * (simplex[v].x[i] - simplex[0].x[i]);
                    }
                    simplex[v] = evaluate(std::move(x));
                }
            }
        }
        std::stable_sort(simplex.begin(), simplex.end(), by_value);
        if (simplex.front().value < best_seen) {
            best_seen = simplex.front().value;
            result.trace.emplace_back(iteration, best_seen);
        }
    }
    if (!result.converged && diameter() < options.diameter_tolerance) result.converged = true;

    result.x = simplex.front().x;
    result.value = simplex.front().value;
    result.iterations = iteration;
    return result;
}

}  // namespace ulab
