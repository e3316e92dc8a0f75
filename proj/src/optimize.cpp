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

#include "ulab/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include "ulab/errors.hpp"
#include "ulab/format.hpp"
#include "ulab/measures.hpp"
#include "ulab/nelder_mead.hpp"
#include "ulab/state_io.hpp"
#include "ulab/uncertainty.hpp"

namespace ulab {

namespace {

using nlohmann::json;

struct StartOutcome {
    XStateParams params;
    double value = -std::numeric_limits<double>::infinity();
    std::vector<std::pair<int, double>> trace;
};

json x_params_json(const XStateParams &p) {
    return {{"a11", p.a11}, {"a22", p.a22}, {"a33", p.a33}, {"a44", p.a44}, {"a14", p.a14}, {"a23", p.a23}};
}

std::string active_w_entry(const XStateParams &p) {
    const Vec3 w = x_state_w_diagonal(p);
    const auto top = std::max_element(w.begin(), w.end()) - w.begin();
    return "w" + std::to_string(top + 1) + std::to_string(top + 1);
}

OptimizationResult maximize_over_separable_x(const std::string &objective_name,
                                             const std::function<double(const XStateParams &)> &measure,
                                             int n_starts, std::uint64_t seed, const SeparableXOptions &options) {
    if (n_starts < 1) throw Error(ErrorCode::OutOfRange, "n_starts must be >= 1");
    std::vector<std::array<double, 6>> starts;
    if (options.inject_analytic) {
        const XStateParams star = rho_star_params();
        starts.push_back(coordinates_from_params(star));
        starts.push_back(coordinates_from_params({star.a44, star.a33, star.a22, star.a11, star.a14, star.a23}));
    }
    for (int i = 0; i < n_starts; ++i) {
        if (static_cast<std::size_t>(i) < options.start_points.size()) {
            starts.push_back(coordinates_from_params(options.start_points[i]));
            continue;
        }
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(i));
        const std::vector<double> s = random_simplex(rng, 4);
        starts.push_back({s[0], s[1], s[2], s[3], rng.uniform(), rng.uniform()});
    }

    NelderMeadOptions nm;
    nm.diameter_tolerance = 1e-10;
    nm.max_iterations = 2000;
    nm.lower = std::vector<double>(6, 0.0);
    nm.upper = std::vector<double>(6, 1.0);
    const std::array<double, 6> steps{0.1, 0.1, 0.1, 0.1, 0.1, 0.1};
    const Objective negated = [&](std::span<const double> z) { return -measure(params_from_coordinates(z)); };

    std::vector<StartOutcome> outcomes(starts.size());
    for_each_index(starts.size(), options.exec, [&](std::size_t i) {
        const NelderMeadResult r =
            nelder_mead(negated, std::vector<double>(starts[i].begin(), starts[i].end()), steps, nm);
        StartOutcome &out = outcomes[i];
        out.params = params_from_coordinates(r.x);
        out.value = measure(out.params);
        for (const auto &[iteration, v] : r.trace) out.trace.emplace_back(iteration, -v);
    });

    std::size_t best = 0;
    for (std::size_t i = 1; i < outcomes.size(); ++i) {
        if (outcomes[i].value > outcomes[best].value) best = i;
    }
    OptimizationResult result;
    result.family = "separable-x";
    result.objective = objective_name;
    result.best_params = outcomes[best].params;
    result.best_value = outcomes[best].value;
    result.max_violation = outcomes[best].params.max_constraint_violation();
    result.feasible = result.max_violation <= 1e-9;
    result.n_starts = static_cast<int>(starts.size());
    result.seed = seed;
    result.best_start = static_cast<int>(best);
    result.active_entry = active_w_entry(outcomes[best].params);
    result.trace = std::move(outcomes[best].trace);
    return result;
}

bool bell_diagonal_feasible(const BellDiagonalParams &t, std::optional<DensityMatrix> &state) {
    state = try_bell_diagonal(t);
    return state && min_partial_transpose_eigenvalue(*state) >= -kPsdTolerance;
}

/// Largest s in [0, 1] with s t separable, by bisection along the ray from I/4.
BellDiagonalParams project_bell_diagonal(const BellDiagonalParams &t) {
    std::optional<DensityMatrix> state;
    if (bell_diagonal_feasible(t, state)) return t;
    const auto scaled = [&](double s) { return BellDiagonalParams{s * t.t1, s * t.t2, s * t.t3}; };
    double lo = 0.0;
    double hi = 1.0;
    for (int i = 0; i < 60 && hi - lo > 1e-16; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (bell_diagonal_feasible(scaled(mid), state)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return scaled(lo);
}

double noisy_or_chi_gap(const DensityMatrix &rho, const ObservablePair &pair, std::vector<double> &row) {
    const UncertaintyReport r = uncertainty_gap(rho, pair);
    row.insert(row.end(), {r.s_pb, r.s_qb, r.c, r.berta_bound, r.pati_bound, r.gap,
                           negativity(rho, NegativityScale::HalfTraceNorm)});
    return r.gap;
}

SweepTable uncertainty_sweep(const std::string &parameter, int n, Execution exec,
                             const std::function<DensityMatrix(double)> &family) {
    if (n < 11) throw Error(ErrorCode::OutOfRange, "sweep needs n >= 11");
    SweepTable table;
    table.columns = {parameter, "s_pb", "s_qb", "c", "berta", "pati", "gap", "negativity"};
    table.rows.resize(static_cast<std::size_t>(n));
    const ObservablePair pair = ObservablePair::pauli_xz();
    for_each_index(table.rows.size(), exec, [&](std::size_t i) {
        const double x = static_cast<double>(i) / (n - 1);
        std::vector<double> row{x};
        noisy_or_chi_gap(family(x), pair, row);
        table.rows[i] = std::move(row);
    });
    std::size_t argmax = 0;
    for (std::size_t i = 1; i < table.rows.size(); ++i) {
        if (table.rows[i][6] > table.rows[argmax][6]) argmax = i;
    }
    table.summary["gap_argmax"] = table.rows[argmax][0];
    table.summary["gap_max"] = table.rows[argmax][6];
    return table;
}

}  // namespace

json OptimizationResult::to_json() const {
    json params;
    if (const auto *x = std::get_if<XStateParams>(&best_params)) {
        params = x_params_json(*x);
    } else {
        const auto &t = std::get<BellDiagonalParams>(best_params);
        params = {{"t1", t.t1}, {"t2", t.t2}, {"t3", t.t3}};
    }
    for (auto &[key, v] : params.items()) v = round_significant(v.get<double>(), kJsonDigits);
    json trace_json = json::array();
    for (const auto &[iteration, v] : trace) trace_json.push_back({iteration, round_significant(v, kJsonDigits)});
    json out = {{"family", family},
                {"objective", objective},
                {"best_params", std::move(params)},
                {"best_value", round_significant(best_value, kJsonDigits)},
                {"feasible", feasible},
                {"max_violation", round_significant(max_violation, kJsonDigits)},
                {"n_starts", n_starts},
                {"seed", seed},
                {"best_start", best_start},
                {"trace", std::move(trace_json)}};
    if (!active_entry.empty()) out["active_entry"] = active_entry;
    if (const auto *x = std::get_if<XStateParams>(&best_params)) {
        const XStateParams canonical = canonicalize_sigma_xx(*x);
        json c = x_params_json(canonical);
        for (auto &[key, v] : c.items()) v = round_significant(v.get<double>(), kJsonDigits);
        out["canonical_params"] = std::move(c);
        out["distance_to_rho_star"] = round_significant(param_distance(canonical, rho_star_params()), kJsonDigits);
    }
    return out;
}

XStateParams params_from_coordinates(std::span<const double> z) {
    if (z.size() != 6) throw Error(ErrorCode::DimMismatch, "separable X coordinates are 6-dimensional");
    std::array<double, 4> s{};
    double total = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        s[i] = std::clamp(z[i], 0.0, 1.0);
        total += s[i];
    }
    if (total <= 0.0) {
        s = {1.0, 1.0, 1.0, 1.0};
        total = 4.0;
    }
    XStateParams p{s[0] / total, s[1] / total, s[2] / total, s[3] / total, 0.0, 0.0};
    const double bound = std::min(std::sqrt(p.a11 * p.a44), std::sqrt(p.a22 * p.a33));
    p.a14 = std::clamp(z[4], 0.0, 1.0) * bound;
    p.a23 = std::clamp(z[5], 0.0, 1.0) * bound;
    return p;
}

std::array<double, 6> coordinates_from_params(const XStateParams &p) {
    const double bound = std::min(std::sqrt(p.a11 * p.a44), std::sqrt(p.a22 * p.a33));
    const auto fraction = [&](double c) { return bound > 0.0 ? std::min(c / bound, 1.0) : 0.0; };
    return {p.a11, p.a22, p.a33, p.a44, fraction(p.a14), fraction(p.a23)};
}

XStateParams canonicalize_sigma_xx(const XStateParams &p) {
    if (p.a44 > p.a11) return {p.a44, p.a33, p.a22, p.a11, p.a14, p.a23};
    return p;
}

double param_distance(const XStateParams &a, const XStateParams &b) {
    const auto x = a.as_array();
    const auto y = b.as_array();
    double d = 0.0;
    for (std::size_t i = 0; i < 6; ++i) d = std::max(d, std::abs(x[i] - y[i]));
    return d;
}

OptimizationResult maximize_lqu_separable_x(int n_starts, std::uint64_t seed, const SeparableXOptions &options) {
    return maximize_over_separable_x(
        "lqu", [](const XStateParams &p) { return lqu(x_state(p)); }, n_starts, seed, options);
}

OptimizationResult maximize_gd_separable_x(int n_starts, std::uint64_t seed, const SeparableXOptions &options) {
    OptimizationResult r = maximize_over_separable_x(
        "gd", [](const XStateParams &p) { return geometric_discord(x_state(p)); }, n_starts, seed, options);
    r.family = "gd-separable-x";
    r.active_entry.clear();
    return r;
}

ReducedFamilySolution solve_reduced_family() {
    // With a11 + a33 = s and d = a11 - a33: 16 a11 a33 = 4 (s^2 - d^2) equals 4 d^2 at d = s / sqrt2,
    // so a11 = s (sqrt2 + 1) / (2 sqrt2).
    const double s = 0.5;
    const double a11 = s * (std::numbers::sqrt2 + 1.0) / (2.0 * std::numbers::sqrt2);
    const double a33 = s - a11;
    const double c = std::sqrt(a11 * a33);
    ReducedFamilySolution out;
    out.params = {a11, a11, a33, a33, c, c};
    out.w11 = 16.0 * a11 * a33;
    out.w33 = 4.0 * (a11 - a33) * (a11 - a33);
    out.lqu = 1.0 - std::max(out.w11, out.w33);
    return out;
}

OptimizationResult maximize_lqu_bell_diagonal_separable(int grid, std::uint64_t seed, Execution exec) {
    if (grid < 11) throw Error(ErrorCode::OutOfRange, "grid must be >= 11");
    const auto g = static_cast<std::size_t>(grid);
    const double spacing = 2.0 / (grid - 1);
    struct Candidate {
        double value = -std::numeric_limits<double>::infinity();
        BellDiagonalParams t;
    };
    std::vector<Candidate> grid_values(g * g * g);
    for_each_index(grid_values.size(), exec, [&](std::size_t idx) {
        const BellDiagonalParams t{-1.0 + spacing * static_cast<double>(idx / (g * g)),
                                   -1.0 + spacing * static_cast<double>((idx / g) % g),
                                   -1.0 + spacing * static_cast<double>(idx % g)};
        std::optional<DensityMatrix> state;
        if (bell_diagonal_feasible(t, state)) grid_values[idx] = {lqu(*state), t};
    });

    std::vector<Candidate> seeds;
    std::vector<std::size_t> order(grid_values.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return grid_values[a].value > grid_values[b].value; });
    for (std::size_t i = 0; i < 3 && i < order.size(); ++i) seeds.push_back(grid_values[order[i]]);
    // A few seeded random feasible starts guard against grid aliasing.
    Rng rng(seed);
    for (int found = 0, tries = 0; found < 4 && tries < 10000; ++tries) {
        const BellDiagonalParams t{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
        std::optional<DensityMatrix> state;
        if (bell_diagonal_feasible(t, state)) {
            seeds.push_back({lqu(*state), t});
            ++found;
        }
    }

    NelderMeadOptions nm;
    nm.diameter_tolerance = 1e-13;
    nm.max_iterations = 4000;
    nm.lower = std::vector<double>(3, -1.0);
    nm.upper = std::vector<double>(3, 1.0);
    const std::array<double, 3> steps{spacing / 2.0, spacing / 2.0, spacing / 2.0};
    const Objective negated = [](std::span<const double> x) {
        std::optional<DensityMatrix> state;
        bell_diagonal_feasible(project_bell_diagonal({x[0], x[1], x[2]}), state);
        return -lqu(*state);
    };

    struct Refined {
        Candidate best;
        std::vector<std::pair<int, double>> trace;
    };
    std::vector<Refined> refined(seeds.size());
    for_each_index(seeds.size(), exec, [&](std::size_t i) {
        const BellDiagonalParams &t0 = seeds[i].t;
        const NelderMeadResult r = nelder_mead(negated, {t0.t1, t0.t2, t0.t3}, steps, nm);
        refined[i].best = seeds[i];
        if (-r.value > seeds[i].value) refined[i].best = {-r.value, project_bell_diagonal({r.x[0], r.x[1], r.x[2]})};
        for (const auto &[iteration, v] : r.trace) refined[i].trace.emplace_back(iteration, -v);
    });
    std::size_t best = 0;
    for (std::size_t i = 1; i < refined.size(); ++i) {
        if (refined[i].best.value > refined[best].best.value) best = i;
    }

    OptimizationResult result;
    result.family = "bell-diagonal";
    result.objective = "lqu";
    const BellDiagonalParams t = refined[best].best.t;
    result.best_params = t;
    std::optional<DensityMatrix> state;
    result.feasible = bell_diagonal_feasible(t, state);
    result.best_value = state ? lqu(*state) : refined[best].best.value;
    if (state) {
        result.max_violation = std::max({0.0, -hermitian_eig(state->matrix()).eigenvalues.front(),
                                         -min_partial_transpose_eigenvalue(*state)});
    }
    result.n_starts = static_cast<int>(seeds.size());
    result.seed = seed;
    result.best_start = static_cast<int>(best);
    result.trace = std::move(refined[best].trace);
    return result;
}

std::vector<double> SweepTable::column(const std::string &name) const {
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) throw Error(ErrorCode::BadIndex, "no column '" + name + "'");
    const auto k = static_cast<std::size_t>(it - columns.begin());
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto &row : rows) out.push_back(row[k]);
    return out;
}

std::string SweepTable::to_csv() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
    out << '\n';
    for (const auto &row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_significant(row[i], kCsvDigits);
        out << '\n';
    }
    return out.str();
}

json SweepTable::to_json() const {
    json rows_json = json::array();
    for (const auto &row : rows) {
        json r = json::array();
        for (double v : row) r.push_back(round_significant(v, kJsonDigits));
        rows_json.push_back(std::move(r));
    }
    json summary_json = json::object();
    for (const auto &[k, v] : summary) summary_json[k] = round_significant(v, kJsonDigits);
    return {{"columns", columns}, {"rows", std::move(rows_json)}, {"summary", std::move(summary_json)}};
}

SweepTable region_sweep(int n, Execution exec) {
    if (n < 3) throw Error(ErrorCode::OutOfRange, "region sweep needs n >= 3");
    SweepTable table;
    table.columns = {"a11", "w11", "w33", "lambda_max"};
    table.rows.resize(static_cast<std::size_t>(n));
    for_each_index(table.rows.size(), exec, [&](std::size_t i) {
        const double a11 = 0.5 * static_cast<double>(i) / (n - 1);
        const double a33 = 0.5 - a11;
        const double c = std::sqrt(a11 * a33);
        const Vec3 w = x_state_w_diagonal({a11, a11, a33, a33, c, c});
        table.rows[i] = {a11, w[0], w[2], std::max({w[0], w[1], w[2]})};
    });
    // One minimum on each side of the symmetric point a11 = 1/4.
    for (const bool lower : {true, false}) {
        std::size_t best = table.rows.size();
        for (std::size_t i = 0; i < table.rows.size(); ++i) {
            if ((table.rows[i][0] < 0.25) != lower) continue;
            if (best == table.rows.size() || table.rows[i][3] < table.rows[best][3]) best = i;
        }
        if (best == table.rows.size()) continue;
        const std::string side = lower ? "lower" : "upper";
        table.summary["min_lambda_max_" + side] = table.rows[best][3];
        table.summary["argmin_a11_" + side] = table.rows[best][0];
    }
    return table;
}

double chi_gap_minus_negativity(double eps) {
    const DensityMatrix chi = chi_state(eps);
    return uncertainty_gap(chi, ObservablePair::pauli_xz()).gap - negativity(chi, NegativityScale::HalfTraceNorm);
}

double chi_crossing(double tolerance) {
    double lo = 0.5;
    double hi = 0.9;
    double f_lo = chi_gap_minus_negativity(lo);
    while (hi - lo > tolerance) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = chi_gap_minus_negativity(mid);
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

SweepTable chi_sweep(int n, Execution exec) {
    SweepTable table = uncertainty_sweep("eps", n, exec, [](double eps) { return chi_state(eps); });
    table.summary["crossing_eps"] = chi_crossing();
    return table;
}

SweepTable noisy_sweep(int n, Execution exec) {
    SweepTable table = uncertainty_sweep("p", n, exec, [](double p) { return noisy_star(p); });
    double separable = 0.0;
    for (const auto &row : table.rows) separable += is_separable(noisy_star(row[0])) ? 1.0 : 0.0;
    table.summary["separable_points"] = separable;
    return table;
}

json ProbeSummary::to_json() const {
    json out = {{"samples", samples},
                {"k_max", k_max},
                {"seed", seed},
                {"max_lqu", round_significant(max_lqu, kJsonDigits)},
                {"argmax_index", argmax_index},
                {"argmax_mixture_size", argmax_mixture_size},
                {"counterexample", counterexample}};
    if (argmax_state) out["argmax_state"] = state_to_json(*argmax_state);
    return out;
}

ProbeSummary conjecture_probe(int samples, int k_max, std::uint64_t seed, const ProbeOptions &options) {
    if (samples < 1) throw Error(ErrorCode::OutOfRange, "samples must be >= 1");
    if (k_max < 1) throw Error(ErrorCode::OutOfRange, "k_max must be >= 1");
    std::vector<double> values(static_cast<std::size_t>(samples));
    std::vector<int> sizes(values.size());
    const auto draw = [&](std::size_t i, int &k) {
        Rng rng = Rng::stream(seed, i);
        k = static_cast<int>(rng.uniform_int(1, k_max));
        return random_separable(rng, k);
    };
    for_each_index(values.size(), options.exec, [&](std::size_t i) { values[i] = lqu(draw(i, sizes[i])); });

    ProbeSummary s;
    s.samples = samples;
    s.k_max = k_max;
    s.seed = seed;
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] > values[best]) best = i;
    }
    s.max_lqu = values[best];
    s.argmax_index = static_cast<long>(best);
    s.argmax_mixture_size = sizes[best];
    int k = 0;
    s.argmax_state = draw(best, k);
    if (options.include_rho_star) {
        const double star = lqu(rho_star());
        if (star > s.max_lqu) {
            s.max_lqu = star;
            s.argmax_index = -1;
            s.argmax_mixture_size = 2;
            s.argmax_state = rho_star();
        }
    }
    s.counterexample = s.max_lqu > 0.5 + 1e-6;
    return s;
}

}  // namespace ulab
