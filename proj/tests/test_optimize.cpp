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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "ulab/errors.hpp"
#include "ulab/measures.hpp"
#include "ulab/optimize.hpp"

using namespace ulab;

namespace {

bool same_params(const OptimizedParams &a, const OptimizedParams &b) {
    if (a.index() != b.index()) return false;
    if (const auto *x = std::get_if<XStateParams>(&a)) return x->as_array() == std::get<XStateParams>(b).as_array();
    const auto &s = std::get<BellDiagonalParams>(a);
    const auto &t = std::get<BellDiagonalParams>(b);
    return s.t1 == t.t1 && s.t2 == t.t2 && s.t3 == t.t3;
}

}  // namespace

TEST_CASE("search coordinates always map to feasible separable X-states") {
    Rng rng(61);
    for (int i = 0; i < 500; ++i) {
        std::array<double, 6> z{};
        for (double &v : z) v = rng.uniform(-0.2, 1.2);
        const XStateParams p = params_from_coordinates(z);
        CHECK(p.max_constraint_violation() <= 1e-12);
        CHECK_FALSE(p.violation().has_value());
        CHECK(is_separable(x_state(p)));
    }
    const XStateParams star = rho_star_params();
    const auto round_trip = params_from_coordinates(coordinates_from_params(star)).as_array();
    const auto want = star.as_array();
    for (int i = 0; i < 6; ++i) CHECK(round_trip[i] == doctest::Approx(want[i]).epsilon(1e-14));
    CHECK_THROWS_AS(params_from_coordinates(std::vector<double>(5, 0.5)), Error);
}

TEST_CASE("sigma_x sigma_x canonicalization") {
    const XStateParams star = rho_star_params();
    const XStateParams mirror{star.a44, star.a33, star.a22, star.a11, star.a14, star.a23};
    CHECK(param_distance(canonicalize_sigma_xx(mirror), star) == 0.0);
    CHECK(param_distance(canonicalize_sigma_xx(star), star) == 0.0);
    CHECK(lqu(x_state(mirror)) == doctest::Approx(lqu(x_state(star))).epsilon(1e-12));
}

TEST_CASE("reduced family solution") {
    const ReducedFamilySolution r = solve_reduced_family();
    CHECK(r.params.a11 == (std::numbers::sqrt2 + 1.0) / (4.0 * std::numbers::sqrt2));
    CHECK(r.params.a11 == r.params.a22);
    CHECK(r.params.a33 == r.params.a44);
    CHECK(r.w11 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(r.w33 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(r.lqu == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(param_distance(r.params, rho_star_params()) < 1e-15);
}

TEST_CASE("separable X-state LQU maximum") {
    const OptimizationResult r = maximize_lqu_separable_x(16, 7);
    CHECK(r.best_value == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(r.best_value >= solve_reduced_family().lqu - 1e-9);
    CHECK(r.feasible);
    CHECK(r.max_violation <= 1e-9);
    CHECK(param_distance(canonicalize_sigma_xx(std::get<XStateParams>(r.best_params)), rho_star_params()) < 1e-3);
    CHECK_FALSE(r.trace.empty());
    CHECK(r.n_starts == 18);
    CHECK((r.active_entry == "w11" || r.active_entry == "w33"));
    CHECK_THROWS_AS(maximize_lqu_separable_x(0, 7), Error);
}

TEST_CASE("without the analytic starts the random search still finds 1/2") {
    SeparableXOptions options;
    options.inject_analytic = false;
    const OptimizationResult r = maximize_lqu_separable_x(64, 7, options);
    CHECK(r.best_value == doctest::Approx(0.5).epsilon(1e-4));
    CHECK(r.best_value <= 0.5 + 1e-9);
}

TEST_CASE("optimizer is deterministic and schedule independent") {
    SeparableXOptions serial;
    serial.exec = Execution::Serial;
    SeparableXOptions parallel;
    parallel.exec = Execution::Parallel;
    const OptimizationResult a = maximize_lqu_separable_x(12, 99, serial);
    const OptimizationResult b = maximize_lqu_separable_x(12, 99, parallel);
    const OptimizationResult c = maximize_lqu_separable_x(12, 99, parallel);
    CHECK(a.best_value == b.best_value);
    CHECK(same_params(a.best_params, b.best_params));
    CHECK(a.to_json().dump() == b.to_json().dump());
    CHECK(b.to_json().dump() == c.to_json().dump());
}

TEST_CASE("geometric discord maximum coincides with rho*") {
    const OptimizationResult r = maximize_gd_separable_x(16, 7);
    CHECK(r.best_value == doctest::Approx(0.125).epsilon(1e-9));
    CHECK(param_distance(canonicalize_sigma_xx(std::get<XStateParams>(r.best_params)), rho_star_params()) < 1e-3);
    CHECK(std::abs(geometric_discord(maximally_mixed())) < 1e-15);
}

TEST_CASE("separable bell-diagonal maximum is 1/3") {
    const OptimizationResult a = maximize_lqu_bell_diagonal_separable(41, 7, Execution::Serial);
    const OptimizationResult b = maximize_lqu_bell_diagonal_separable(41, 7, Execution::Parallel);
    CHECK(a.best_value == doctest::Approx(1.0 / 3.0).epsilon(1e-5));
    CHECK(a.best_value <= 1.0 / 3.0 + 1e-9);
    CHECK(a.feasible);
    CHECK(a.best_value == b.best_value);
    CHECK(same_params(a.best_params, b.best_params));
    // Restricted line T = t I peaks at t = 1/3.
    double best_t = 0.0;
    double best = -1.0;
    for (int i = 0; i <= 300; ++i) {
        const double t = -1.0 / 3.0 + (2.0 / 3.0) * i / 300.0;
        const double v = lqu(bell_diagonal({t, t, t}));
        if (v > best) {
            best = v;
            best_t = t;
        }
    }
    CHECK(best_t == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(best == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK_THROWS_AS(maximize_lqu_bell_diagonal_separable(5, 7), Error);
}

TEST_CASE("region sweep") {
    const SweepTable t = region_sweep(501);
    CHECK(t.columns == std::vector<std::string>{"a11", "w11", "w33", "lambda_max"});
    REQUIRE(t.rows.size() == 501);
    const auto &mid = t.rows[250];
    CHECK(mid[0] == doctest::Approx(0.25));
    CHECK(std::abs(mid[1] - 1.0) < 1e-12);
    CHECK(std::abs(mid[2]) < 1e-12);
    const auto &first = t.rows[0];
    CHECK(std::abs(first[1]) < 1e-12);
    CHECK(first[2] == doctest::Approx(1.0));
    const std::vector<double> lam = t.column("lambda_max");
    const double min = *std::min_element(lam.begin(), lam.end());
    CHECK(min == doctest::Approx(0.5).epsilon(2e-3));
    const double lo = (std::numbers::sqrt2 - 1) / (4 * std::numbers::sqrt2);
    const double hi = (std::numbers::sqrt2 + 1) / (4 * std::numbers::sqrt2);
    CHECK(std::abs(t.summary.at("argmin_a11_lower") - lo) <= 0.5 / 500 / 2 + 1e-12);
    CHECK(std::abs(t.summary.at("argmin_a11_upper") - hi) <= 0.5 / 500 / 2 + 1e-12);
    for (const auto &row : t.rows) {
        const double a11 = row[0];
        const double a33 = 0.5 - a11;
        const double c = std::sqrt(a11 * a33);
        CHECK(1.0 - row[3] == doctest::Approx(lqu_xstate_closed_form({a11, a11, a33, a33, c, c})).epsilon(1e-8));
    }
    CHECK_THROWS_AS(region_sweep(2), Error);
}

TEST_CASE("chi and noisy sweeps") {
    const SweepTable chi = chi_sweep(101);
    CHECK(chi.columns ==
          std::vector<std::string>{"eps", "s_pb", "s_qb", "c", "berta", "pati", "gap", "negativity"});
    const std::vector<double> gap = chi.column("gap");
    CHECK(std::abs(gap.front()) < 1e-9);
    CHECK(chi.summary.at("gap_argmax") == 1.0);
    CHECK(chi.summary.at("crossing_eps") == doctest::Approx(0.714).epsilon(0.01));
    for (std::size_t i = 1; i < gap.size(); ++i) CHECK(gap[i] >= gap[i - 1] - 1e-9);
    const SweepTable noisy = noisy_sweep(101);
    CHECK(noisy.columns.front() == "p");
    CHECK(noisy.summary.at("gap_argmax") == 1.0);
    CHECK(noisy.summary.at("separable_points") == 101.0);
    CHECK_THROWS_AS(chi_sweep(10), Error);
}

TEST_CASE("chi crossing brackets the sign change") {
    const double eps = chi_crossing();
    CHECK(chi_gap_minus_negativity(eps - 1e-3) < 0.0);
    CHECK(chi_gap_minus_negativity(eps + 1e-3) > 0.0);
}

TEST_CASE("sweeps are schedule independent") {
    CHECK(chi_sweep(21, Execution::Serial).to_csv() == chi_sweep(21, Execution::Parallel).to_csv());
    CHECK(noisy_sweep(21, Execution::Serial).to_json().dump() == noisy_sweep(21, Execution::Parallel).to_json().dump());
    CHECK(region_sweep(51, Execution::Serial).rows == region_sweep(51, Execution::Parallel).rows);
}

TEST_CASE("sweep CSV layout") {
    const std::string csv = region_sweep(3).to_csv();
    CHECK(csv.rfind("a11,w11,w33,lambda_max\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
    CHECK_THROWS_AS(region_sweep(3).column("nope"), Error);
}

TEST_CASE("conjecture probe") {
    const ProbeSummary s = conjecture_probe(2000, 4, 3);
    CHECK(s.max_lqu < 0.5);
    CHECK_FALSE(s.counterexample);
    REQUIRE(s.argmax_state.has_value());
    CHECK(lqu(*s.argmax_state) == s.max_lqu);
    const ProbeSummary pure = conjecture_probe(500, 1, 3);
    CHECK(pure.max_lqu < 1e-8);
    ProbeOptions pool;
    pool.include_rho_star = true;
    const ProbeSummary with = conjecture_probe(2000, 4, 3, pool);
    CHECK(with.max_lqu == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(with.argmax_index == -1);
    ProbeOptions serial;
    serial.exec = Execution::Serial;
    CHECK(conjecture_probe(300, 4, 5, serial).to_json().dump() == conjecture_probe(300, 4, 5).to_json().dump());
}
