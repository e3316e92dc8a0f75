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

// Constrained maximization over separable two-qubit families and figure-data sweeps.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "ulab/parallel.hpp"
#include "ulab/states.hpp"

namespace ulab {

using OptimizedParams = std::variant<XStateParams, BellDiagonalParams>;

struct OptimizationResult {
    std::string family;
    std::string objective;
    OptimizedParams best_params;
    double best_value = 0.0;
    bool feasible = false;
    double max_violation = 0.0;
    int n_starts = 0;
    std::uint64_t seed = 0;
    /// Index of the winning start (analytic starts come first when injected).
    int best_start = -1;
    /// For X-state LQU runs: which W diagonal entry ("w11", "w22", "w33") is the maximum.
    std::string active_entry;
    /// (iteration, objective) for the winning start.
    std::vector<std::pair<int, double>> trace;

    nlohmann::json to_json() const;
};

struct SeparableXOptions {
    /// Add rho* and its sigma_x (x) sigma_x mirror as two deterministic extra starts.
    bool inject_analytic = true;
    /// Replaces the random draw for the first starts, in order.
    std::vector<XStateParams> start_points;
    Execution exec = Execution::Parallel;
};

/// Search coordinates (s1..s4, f1, f2) in [0,1]^6: populations s / sum(s), coherences
/// f_i * min(sqrt(a11 a44), sqrt(a22 a33)). Every point is a valid separable X-state.
XStateParams params_from_coordinates(std::span<const double> z);
std::array<double, 6> coordinates_from_params(const XStateParams &p);

/// Applies the sigma_x (x) sigma_x relabeling when a44 > a11.
XStateParams canonicalize_sigma_xx(const XStateParams &p);
/// Max absolute parameter difference.
double param_distance(const XStateParams &a, const XStateParams &b);

/// Maximizes LQU over separable X-states (multi-start Nelder-Mead).
OptimizationResult maximize_lqu_separable_x(int n_starts, std::uint64_t seed, const SeparableXOptions &options = {});
/// Maximizes geometric discord over separable X-states.
OptimizationResult maximize_gd_separable_x(int n_starts, std::uint64_t seed, const SeparableXOptions &options = {});

struct ReducedFamilySolution {
    XStateParams params;
    /// Actual W diagonal entries at the solution: 16 a11 a33 and 4 (a11 - a33)^2.
    double w11 = 0.0;
    double w33 = 0.0;
    double lqu = 0.0;
};

/// a11 = a22, a33 = a44, a14 = a23 = sqrt(a11 a33), a11 + a33 = 1/2, with 16 a11 a33 = 4 (a11 - a33)^2.
ReducedFamilySolution solve_reduced_family();

/// Grid over t in [-1, 1]^3 (PSD and PPT checked numerically) followed by Nelder-Mead refinement.
OptimizationResult maximize_lqu_bell_diagonal_separable(int grid, std::uint64_t seed,
                                                         Execution exec = Execution::Parallel);

struct SweepTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::map<std::string, double> summary;

    std::vector<double> column(const std::string &name) const;
    /// Header line plus rows, 6 significant digits.
    std::string to_csv() const;
    nlohmann::json to_json() const;
};

/// Reduced family over a11 in [0, 1/2]: a11, w11, w33, lambda_max. Throws OutOfRange if n < 3.
SweepTable region_sweep(int n, Execution exec = Execution::Parallel);
/// chi(eps) on an n-point grid over [0, 1]: eps, s_pb, s_qb, c, berta, pati, gap, negativity.
/// The negativity column is the half-trace-norm scale. Summary: crossing_eps, gap_argmax.
SweepTable chi_sweep(int n, Execution exec = Execution::Parallel);
/// Same columns for p rho* + (1 - p) I/4 with the first column named p. Summary: gap_argmax,
/// separable_points.
SweepTable noisy_sweep(int n, Execution exec = Execution::Parallel);

/// Gap minus half-trace-norm negativity along chi(eps).
double chi_gap_minus_negativity(double eps);
/// Bisection for the gap/negativity crossing on [0.5, 0.9].
double chi_crossing(double tolerance = 1e-4);

struct ProbeOptions {
    bool include_rho_star = false;
    Execution exec = Execution::Parallel;
};

struct ProbeSummary {
    int samples = 0;
    int k_max = 0;
    std::uint64_t seed = 0;
    double max_lqu = 0.0;
    /// Sample index of the maximum; -1 when rho* from the pool wins.
    long argmax_index = -1;
    int argmax_mixture_size = 0;
    std::optional<DensityMatrix> argmax_state;
    bool counterexample = false;

    nlohmann::json to_json() const;
};

/// LQU over random separable mixtures; sample i draws k in [1, k_max] and its states from
/// Rng::stream(seed, i).
ProbeSummary conjecture_probe(int samples, int k_max, std::uint64_t seed, const ProbeOptions &options = {});

}  // namespace ulab
