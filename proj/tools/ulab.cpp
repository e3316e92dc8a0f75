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

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ulab/errors.hpp"
#include "ulab/format.hpp"
#include "ulab/optimize.hpp"
#include "ulab/report.hpp"
#include "ulab/state_io.hpp"
#include "ulab/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalidData = 2;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string state;
    std::string family = "separable-x";
    std::string name;
    std::optional<int> n;
    int starts = 64;
    std::uint64_t seed = 7;
    int grid = 41;
    int k_max = 4;
    bool include_rho_star = false;
    std::string out;
    std::string format;
    std::string only;
    double tol_scale = 1.0;
};

void emit(const RunConfig &config, const std::string &text) {
    if (config.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(config.out, std::ios::binary);
    if (!file) throw UsageError("cannot open output file '" + config.out + "'");
    file << text;
}

std::string dump(const nlohmann::json &doc) { return doc.dump(2) + "\n"; }

void require_format(const RunConfig &config, std::initializer_list<std::string_view> allowed) {
    if (config.format.empty()) return;
    for (std::string_view f : allowed) {
        if (config.format == f) return;
    }
    throw UsageError("format '" + config.format + "' is not supported by this command");
}

ulab::LoadedState load(const RunConfig &config) {
    if (config.state.empty()) throw UsageError("--state is required");
    return ulab::resolve_state(config.state);
}

int cmd_measure(const RunConfig &config) {
    require_format(config, {"json", "csv"});
    const ulab::LoadedState loaded = load(config);
    const ulab::MeasureReport report = ulab::measure_report(loaded.state, loaded.metadata);
    if (config.format == "csv") {
        std::string text = "measure,value\n";
        for (const auto &[key, value] : report.measures) {
            text += key + "," + ulab::format_significant(value, ulab::kCsvDigits) + "\n";
        }
        emit(config, text);
    } else {
        emit(config, dump(report.to_json()));
    }
    return kExitOk;
}

int cmd_state(const RunConfig &config) {
    require_format(config, {"json"});
    const ulab::LoadedState loaded = load(config);
    emit(config, dump(ulab::state_to_json(loaded.state)));
    return kExitOk;
}

int cmd_optimize(const RunConfig &config) {
    require_format(config, {"json"});
    ulab::OptimizationResult result;
    if (config.family == "separable-x") {
        result = ulab::maximize_lqu_separable_x(config.starts, config.seed);
    } else if (config.family == "gd-separable-x") {
        result = ulab::maximize_gd_separable_x(config.starts, config.seed);
    } else if (config.family == "bell-diagonal") {
        result = ulab::maximize_lqu_bell_diagonal_separable(config.grid, config.seed);
    } else {
        throw UsageError("unknown family '" + config.family + "'");
    }
    emit(config, dump(result.to_json()));
    return kExitOk;
}

int cmd_sweep(const RunConfig &config) {
    require_format(config, {"json", "csv"});
    ulab::SweepTable table;
    if (config.name == "region") {
        table = ulab::region_sweep(config.n.value_or(501));
    } else if (config.name == "chi") {
        table = ulab::chi_sweep(config.n.value_or(101));
    } else if (config.name == "noisy") {
        table = ulab::noisy_sweep(config.n.value_or(101));
    } else {
        throw UsageError("unknown sweep '" + config.name + "'");
    }
    emit(config, config.format == "json" ? dump(table.to_json()) : table.to_csv());
    return kExitOk;
}

int cmd_probe(const RunConfig &config) {
    require_format(config, {"json"});
    ulab::ProbeOptions options;
    options.include_rho_star = config.include_rho_star;
    const ulab::ProbeSummary summary = ulab::conjecture_probe(config.n.value_or(10000), config.k_max, config.seed, options);
    emit(config, dump(summary.to_json()));
    return kExitOk;
}

int cmd_verify(const RunConfig &config) {
    require_format(config, {"json", "text"});
    ulab::VerifyOptions options;
    options.only = config.only;
    options.tolerance_scale = config.tol_scale;
    ulab::VerifyReport report;
    try {
        report = ulab::run_verification(options);
    } catch (const ulab::Error &e) {
        if (e.code() == ulab::ErrorCode::InvalidParams) throw UsageError(e.what());
        throw;
    }
    if (config.format == "json") {
        emit(config, dump(report.to_json()));
    } else {
        std::string text;
        for (const ulab::Claim &c : report.claims) text += c.summary_line() + "\n";
        if (const auto failure = report.first_failure()) {
            text += "verification failed: first violated claim " + failure->id + "\n";
        } else {
            text += "all " + std::to_string(report.claims.size()) + " claims pass\n";
        }
        emit(config, text);
    }
    return report.all_pass() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"ulab: local quantum uncertainty and quantum correlations of two-qubit states"};
    app.require_subcommand(1);
    RunConfig config;

    const auto add_state = [&](CLI::App *sub) {
        sub->add_option("--state", config.state, "builtin:<name> or a JSON state file")->required();
    };
    const auto add_out = [&](CLI::App *sub, const std::string &formats) {
        sub->add_option("--out", config.out, "Output path (default stdout)");
        sub->add_option("--format", config.format, "Output format: " + formats);
    };

    CLI::App *measure = app.add_subcommand("measure", "Report all measures for one state");
    add_state(measure);
    add_out(measure, "json | csv");

    CLI::App *state = app.add_subcommand("state", "Write a state as a full-form JSON matrix");
    add_state(state);
    add_out(state, "json");

    CLI::App *optimize = app.add_subcommand("optimize", "Maximize LQU or geometric discord over a separable family");
    optimize->add_option("--family", config.family, "separable-x | bell-diagonal | gd-separable-x");
    optimize->add_option("--starts", config.starts, "Random starts")->check(CLI::Range(1, 1 << 20));
    optimize->add_option("--seed", config.seed, "Seed");
    optimize->add_option("--grid", config.grid, "Grid points per axis (bell-diagonal)")->check(CLI::Range(11, 401));
    add_out(optimize, "json");

    CLI::App *sweep = app.add_subcommand("sweep", "Emit figure data");
    sweep->add_option("--name", config.name, "region | chi | noisy")->required();
    sweep->add_option("--n", config.n, "Grid points")->check(CLI::Range(3, 1 << 20));
    add_out(sweep, "csv | json");

    CLI::App *probe = app.add_subcommand("probe", "Sample LQU over random separable mixtures");
    probe->add_option("--n", config.n, "Samples")->check(CLI::Range(1, 1 << 24));
    probe->add_option("--k-max", config.k_max, "Largest mixture size")->check(CLI::Range(1, 64));
    probe->add_option("--seed", config.seed, "Seed");
    probe->add_flag("--include-rho-star", config.include_rho_star, "Add rho* to the candidate pool");
    add_out(probe, "json");

    CLI::App *verify = app.add_subcommand("verify", "Run the acceptance claims");
    verify->add_option("--only", config.only, "Group, criterion number, or claim id");
    verify->add_option("--tol-scale", config.tol_scale, "Multiply every tolerance (0 = negative control)")
        ->check(CLI::NonNegativeNumber);
    add_out(verify, "text | json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*measure) return cmd_measure(config);
        if (*state) return cmd_state(config);
        if (*optimize) return cmd_optimize(config);
        if (*sweep) return cmd_sweep(config);
        if (*probe) return cmd_probe(config);
        if (*verify) return cmd_verify(config);
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ulab::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        const bool usage = e.code() == ulab::ErrorCode::OutOfRange && !*measure && !*state;
        return usage ? kExitUsage : kExitInvalidData;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidData;
    }
    return kExitUsage;
}
