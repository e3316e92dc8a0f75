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

#include "ulab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "ulab/errors.hpp"
#include "ulab/format.hpp"
#include "ulab/measures.hpp"
#include "ulab/optimize.hpp"
#include "ulab/rng.hpp"
#include "ulab/uncertainty.hpp"

namespace ulab {

namespace {

using nlohmann::json;

constexpr std::uint64_t kVerifySeed = 20260417;

const char *comparison_symbol(Comparison c) {
    switch (c) {
        case Comparison::Within:
            return "+/-";
        case Comparison::AtMost:
            return "<=";
        case Comparison::AtLeast:
            return ">=";
    }
    return "?";
}

class ClaimSink {
   public:
    ClaimSink(double scale, std::vector<Claim> &out) : scale_(scale), out_(out) {}

    void add(std::string id, int criterion, std::string group, std::string description, double computed,
             double expected, double tolerance, Comparison comparison = Comparison::Within) {
        Claim c{std::move(id), criterion, std::move(group), std::move(description), computed, expected,
                tolerance * scale_, comparison, false};
        switch (comparison) {
            case Comparison::Within:
                c.pass = std::abs(computed - expected) <= c.tolerance;
                break;
            case Comparison::AtMost:
                c.pass = computed <= expected + c.tolerance;
                break;
            case Comparison::AtLeast:
                c.pass = computed >= expected - c.tolerance;
                break;
        }
        if (!std::isfinite(computed)) c.pass = false;
        out_.push_back(std::move(c));
    }

   private:
    double scale_;
    std::vector<Claim> &out_;
};

/// Max over i of f(i), evaluated per index and reduced in index order.
double max_over(std::size_t n, Execution exec, const std::function<double(std::size_t)> &f) {
    std::vector<double> values(n);
    for_each_index(n, exec, [&](std::size_t i) { values[i] = f(i); });
    return *std::max_element(values.begin(), values.end());
}

double max_decrease(const std::vector<double> &v) {
    double worst = 0.0;
    for (std::size_t i = 1; i < v.size(); ++i) worst = std::max(worst, v[i - 1] - v[i]);
    return worst;
}

double max_increase(const std::vector<double> &v) {
    double worst = 0.0;
    for (std::size_t i = 1; i < v.size(); ++i) worst = std::max(worst, v[i] - v[i - 1]);
    return worst;
}

double argmax_of(const std::vector<double> &x, const std::vector<double> &y) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < y.size(); ++i) {
        if (y[i] > y[best]) best = i;
    }
    return x[best];
}

Vec3 random_direction(Rng &rng) {
    Vec3 n{rng.normal(), rng.normal(), rng.normal()};
    const double norm = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    for (double &v : n) v /= norm;
    return n;
}

double chi_closed_form_p(double eps) {
    const double a = (2.0 - std::numbers::sqrt2) * eps / 8.0;
    const double b = (4.0 - (2.0 - std::numbers::sqrt2) * eps) / 8.0;
    const std::array<double, 4> p{a, a, b, b};
    return shannon_entropy(p) - 1.0;
}

double chi_closed_form_q(double eps) {
    const std::array<double, 4> p{(2.0 - std::numbers::sqrt2) * eps / 8.0, (2.0 + std::numbers::sqrt2) * eps / 8.0,
                                  (4.0 - (2.0 + std::numbers::sqrt2) * eps) / 8.0,
                                  (4.0 - (2.0 - std::numbers::sqrt2) * eps) / 8.0};
    return shannon_entropy(p) - 1.0;
}

void check_bell(ClaimSink &sink, Execution) {
    const std::array<std::pair<BellKind, const char *>, 4> kinds{{{BellKind::PhiPlus, "phi_plus"},
                                                                  {BellKind::PhiMinus, "phi_minus"},
                                                                  {BellKind::PsiPlus, "psi_plus"},
                                                                  {BellKind::PsiMinus, "psi_minus"}}};
    for (const auto &[kind, name] : kinds) {
        sink.add(std::string("bell.lqu.") + name, 1, "bell", std::string("LQU of Bell state ") + name,
                 lqu(bell_state(kind)), 1.0, 1e-8);
    }
}

OptimizationResult separable_x_lqu(Execution exec) {
    SeparableXOptions opts;
    opts.exec = exec;
    return maximize_lqu_separable_x(64, kVerifySeed, opts);
}

void check_separable_x(ClaimSink &sink, Execution exec) {
    const OptimizationResult r = separable_x_lqu(exec);
    const XStateParams best = canonicalize_sigma_xx(std::get<XStateParams>(r.best_params));
    sink.add("separable-x.max", 2, "separable-x", "max LQU over separable X-states (64 starts)", r.best_value, 0.5,
             1e-4);
    sink.add("separable-x.argmax", 2, "separable-x", "canonical argmax distance to rho* parameters",
             param_distance(best, rho_star_params()), 0.0, 1e-3, Comparison::AtMost);
    sink.add("separable-x.feasible", 2, "separable-x", "constraint violation at argmax", r.max_violation, 0.0, 1e-9,
             Comparison::AtMost);
    const ReducedFamilySolution red = solve_reduced_family();
    const double a11 = (std::numbers::sqrt2 + 1.0) / (4.0 * std::numbers::sqrt2);
    sink.add("separable-x.reduced.a11", 2, "separable-x", "reduced-family a11 vs (sqrt2+1)/(4 sqrt2)",
             red.params.a11, a11, 4.0 * std::numeric_limits<double>::epsilon());
    sink.add("separable-x.reduced.w11", 2, "separable-x", "reduced-family w11", red.w11, 0.5, 1e-12);
    sink.add("separable-x.reduced.w33", 2, "separable-x", "reduced-family w33", red.w33, 0.5, 1e-12);
}

void check_closed_form(ClaimSink &sink, Execution exec) {
    const double worst = max_over(1000, exec, [](std::size_t i) {
        Rng rng = Rng::stream(kVerifySeed + 3, i);
        const XStateParams p = random_x_params(rng);
        return std::abs(lqu_xstate_closed_form(p) - lqu(x_state(p)));
    });
    sink.add("closed-form.xstate", 3, "closed-form", "max |closed-form - numeric| LQU over 1000 X-states", worst,
             0.0, 1e-7, Comparison::AtMost);
}

void check_bell_diagonal(ClaimSink &sink, Execution exec) {
    const double worst = max_over(41, exec, [](std::size_t i) {
        const double t = -1.0 / 3.0 + (2.0 / 3.0) * static_cast<double>(i) / 40.0;
        const double formula = 1.0 - 0.5 * std::sqrt(1.0 + t) * (std::sqrt(1.0 + t) + std::sqrt(std::max(0.0, 1.0 - 3.0 * t)));
        return std::abs(lqu(bell_diagonal({t, t, t})) - formula);
    });
    sink.add("bell-diagonal.line", 4, "bell-diagonal", "max |LQU - closed form| on T = tI, 41 points", worst, 0.0,
             1e-8, Comparison::AtMost);
    const OptimizationResult r = maximize_lqu_bell_diagonal_separable(41, kVerifySeed, exec);
    sink.add("bell-diagonal.max", 4, "bell-diagonal", "max LQU over separable Bell-diagonal states", r.best_value,
             1.0 / 3.0, 1e-5);
}

void check_dissonance(ClaimSink &sink, Execution) {
    const DissonanceTerms d = dissonance_rank2_terms(rho_star());
    sink.add("dissonance.value", 5, "dissonance", "dissonance of rho*", d.value, 0.20175, 5e-4);
    sink.add("dissonance.entropy_a", 5, "dissonance", "S(rho*_A)", d.entropy_a, 0.60088, 1e-4);
    sink.add("dissonance.entropy_ab", 5, "dissonance", "S(rho*_AB)", d.entropy_ab, 1.0, 1e-9);
    sink.add("dissonance.eof_bc", 5, "dissonance", "E_F(rho*_BC) - S(rho*_A)", d.eof_bc - d.entropy_a, 0.0, 1e-4);
}

void check_chi(ClaimSink &sink, Execution exec) {
    const SweepTable t = chi_sweep(101, exec);
    const std::vector<double> eps = t.column("eps");
    const std::vector<double> s_pb = t.column("s_pb");
    const std::vector<double> s_qb = t.column("s_qb");
    const std::vector<double> gap = t.column("gap");
    const std::vector<double> neg = t.column("negativity");
    double worst = 0.0;
    for (std::size_t i = 0; i < eps.size(); ++i) {
        worst = std::max({worst, std::abs(s_pb[i] - chi_closed_form_p(eps[i])),
                          std::abs(s_qb[i] - chi_closed_form_q(eps[i]))});
    }
    sink.add("chi.closed-form", 6, "chi", "max |S(P|B), S(Q|B) - closed-form H|", worst, 0.0, 1e-9,
             Comparison::AtMost);
    sink.add("chi.gap-monotone", 6, "chi", "largest decrease of the gap along eps", max_decrease(gap), 0.0, 1e-9,
             Comparison::AtMost);
    sink.add("chi.gap-argmax", 6, "chi", "eps maximizing the gap", argmax_of(eps, gap), 1.0, 0.0);
    sink.add("chi.negativity-monotone", 6, "chi", "largest increase of negativity along eps", max_increase(neg), 0.0,
             1e-12, Comparison::AtMost);
    sink.add("chi.crossing", 6, "chi", "gap/negativity crossing eps", t.summary.at("crossing_eps"), 0.714, 0.01);
}

void check_noisy(ClaimSink &sink, Execution exec) {
    const SweepTable t = noisy_sweep(101, exec);
    sink.add("noisy.separable", 7, "noisy", "grid points failing PPT", static_cast<double>(t.rows.size()) -
             t.summary.at("separable_points"), 0.0, 0.0, Comparison::AtMost);
    sink.add("noisy.gap-argmax", 7, "noisy", "p maximizing the gap", argmax_of(t.column("p"), t.column("gap")), 1.0,
             0.0);
}

void check_gd(ClaimSink &sink, Execution exec) {
    SeparableXOptions opts;
    opts.exec = exec;
    const OptimizationResult gd = maximize_gd_separable_x(64, kVerifySeed, opts);
    const OptimizationResult lq = separable_x_lqu(exec);
    sink.add("gd.argmax", 8, "gd", "distance between canonical GD and LQU argmax",
             param_distance(canonicalize_sigma_xx(std::get<XStateParams>(gd.best_params)),
                            canonicalize_sigma_xx(std::get<XStateParams>(lq.best_params))),
             0.0, 1e-3, Comparison::AtMost);
    sink.add("gd.value", 8, "gd", "max geometric discord over separable X-states", gd.best_value, 0.125, 1e-6);
    sink.add("gd.rho-star", 8, "gd", "geometric discord of rho*", geometric_discord(rho_star()), 0.125, 1e-6);
}

void check_properties(ClaimSink &sink, Execution exec) {
    const double lu = max_over(100, exec, [](std::size_t i) {
        Rng rng = Rng::stream(kVerifySeed + 9, i);
        const DensityMatrix rho = random_state(rng);
        const ComplexMatrix u = random_unitary2(rng);
        const ComplexMatrix v = random_unitary2(rng);
        return std::abs(lqu(rho) - lqu(apply_local_unitaries(rho, u, v)));
    });
    sink.add("properties.local-unitary", 9, "properties", "max LQU change under 100 local unitary pairs", lu, 0.0,
             1e-8, Comparison::AtMost);

    const double hell = max_over(1000, exec, [](std::size_t i) {
        Rng rng = Rng::stream(kVerifySeed + 19, i);
        const DensityMatrix rho = random_state(rng);
        const Vec3 n = random_direction(rng);
        return std::abs(hellinger_check(rho, n) - skew_information(rho, local_observable(n)));
    });
    sink.add("properties.hellinger", 9, "properties", "max |D_H^2(rho, K rho K) - I(rho, K)| over 1000 trials",
             hell, 0.0, 1e-9, Comparison::AtMost);

    const double pure = max_over(1000, exec, [](std::size_t i) {
        Rng rng = Rng::stream(kVerifySeed + 29, i);
        const DensityMatrix rho = random_pure_state(rng);
        const ComplexMatrix a = partial_trace(rho.matrix(), Subsystem::A);
        const double linear = 2.0 * (1.0 - trace_product_real(a, a));
        return std::abs(lqu(rho) - linear);
    });
    sink.add("properties.pure-linear-entropy", 9, "properties", "max |LQU - linear entropy of marginal|, pure states",
             pure, 0.0, 1e-8, Comparison::AtMost);

    const double off = max_over(1000, exec, [](std::size_t i) {
        Rng rng = Rng::stream(kVerifySeed + 39, i);
        const Mat3 w = w_matrix(x_state(random_x_params(rng)));
        return std::max({std::abs(w[0][1]), std::abs(w[0][2]), std::abs(w[1][2])});
    });
    sink.add("properties.xstate-w-offdiag", 9, "properties", "max |W off-diagonal| over X-states", off, 0.0, 1e-9,
             Comparison::AtMost);

    const ObservablePair pair = ObservablePair::pauli_xz();
    std::vector<UncertaintyReport> reports(1000);
    for_each_index(reports.size(), exec, [&](std::size_t i) {
        Rng rng = Rng::stream(kVerifySeed + 49, i);
        reports[i] = uncertainty_gap(random_state(rng), pair);
    });
    double pati_minus_berta = std::numeric_limits<double>::infinity();
    double sum_minus_pati = std::numeric_limits<double>::infinity();
    for (const UncertaintyReport &r : reports) {
        pati_minus_berta = std::min(pati_minus_berta, r.pati_bound - r.berta_bound);
        sum_minus_pati = std::min(sum_minus_pati, r.uncertainty_sum() - r.pati_bound);
    }
    sink.add("properties.pati-vs-berta", 9, "properties", "min (Pati bound - Berta bound) over 1000 states",
             pati_minus_berta, 0.0, 0.0, Comparison::AtLeast);
    sink.add("properties.pati-holds", 9, "properties", "min (S(P|B) + S(Q|B) - Pati bound) over 1000 states",
             sum_minus_pati, 0.0, 1e-8, Comparison::AtLeast);
}

void check_probe(ClaimSink &sink, Execution exec) {
    ProbeOptions opts;
    opts.exec = exec;
    const ProbeSummary plain = conjecture_probe(10000, 4, kVerifySeed, opts);
    sink.add("probe.max", 10, "probe", "max LQU over 10^4 random separable mixtures", plain.max_lqu, 0.5, 0.0,
             Comparison::AtMost);
    opts.include_rho_star = true;
    const ProbeSummary pooled = conjecture_probe(10000, 4, kVerifySeed, opts);
    sink.add("probe.with-rho-star", 10, "probe", "max LQU with rho* in the pool", pooled.max_lqu, 0.5, 1e-12);
}

using Check = void (*)(ClaimSink &, Execution);

const std::vector<std::pair<std::string, Check>> &checks() {
    static const std::vector<std::pair<std::string, Check>> all{
        {"bell", check_bell},         {"separable-x", check_separable_x}, {"closed-form", check_closed_form},
        {"bell-diagonal", check_bell_diagonal}, {"dissonance", check_dissonance}, {"chi", check_chi},
        {"noisy", check_noisy},       {"gd", check_gd},                   {"properties", check_properties},
        {"probe", check_probe}};
    return all;
}

}  // namespace

json Claim::to_json() const {
    return {{"id", id},
            {"criterion", criterion},
            {"group", group},
            {"description", description},
            {"computed", round_significant(computed, kJsonDigits)},
            {"expected", round_significant(expected, kJsonDigits)},
            {"tolerance", round_significant(tolerance, kJsonDigits)},
            {"comparison", comparison_symbol(comparison)},
            {"pass", pass}};
}

std::string Claim::summary_line() const {
    std::ostringstream out;
    out << (pass ? "PASS " : "FAIL ") << id << ": computed " << format_significant(computed, kJsonDigits) << ", expected "
        << format_significant(expected, kJsonDigits) << ' ' << comparison_symbol(comparison) << ' '
        << format_significant(tolerance, 3) << " (" << description << ')';
    return out.str();
}

bool VerifyReport::all_pass() const {
    return std::all_of(claims.begin(), claims.end(), [](const Claim &c) { return c.pass; });
}

std::optional<Claim> VerifyReport::first_failure() const {
    const auto it = std::find_if(claims.begin(), claims.end(), [](const Claim &c) { return !c.pass; });
    if (it == claims.end()) return std::nullopt;
    return *it;
}

std::vector<Claim> VerifyReport::for_criterion(int criterion) const {
    std::vector<Claim> out;
    std::copy_if(claims.begin(), claims.end(), std::back_inserter(out),
                 [&](const Claim &c) { return c.criterion == criterion; });
    return out;
}

json VerifyReport::to_json() const {
    json list = json::array();
    for (const Claim &c : claims) list.push_back(c.to_json());
    json out = {{"claims", std::move(list)}, {"all_pass", all_pass()}};
    if (const auto f = first_failure()) out["first_failure"] = f->id;
    return out;
}

const std::vector<std::string> &verify_groups() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto &[name, check] : checks()) out.push_back(name);
        return out;
    }();
    return names;
}

VerifyReport run_verification(const VerifyOptions &options) {
    if (!(options.tolerance_scale >= 0.0)) throw Error(ErrorCode::InvalidParams, "tolerance scale must be >= 0");
    VerifyReport report;
    ClaimSink sink(options.tolerance_scale, report.claims);
    const auto &all = checks();
    if (options.only.empty()) {
        for (const auto &[name, check] : all) check(sink, options.exec);
        return report;
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (options.only == all[i].first || options.only == std::to_string(i + 1)) {
            all[i].second(sink, options.exec);
            return report;
        }
    }
    // A single claim id such as "dissonance.value".
    const std::string group = options.only.substr(0, options.only.find('.'));
    for (const auto &[name, check] : all) {
        if (name != group) continue;
        check(sink, options.exec);
        std::erase_if(report.claims, [&](const Claim &c) { return c.id != options.only; });
        if (!report.claims.empty()) return report;
    }
    throw Error(ErrorCode::InvalidParams, "unknown verification filter '" + options.only + "'");
}

}  // namespace ulab
