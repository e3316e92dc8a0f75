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

#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "ulab/errors.hpp"
#include "ulab/report.hpp"
#include "ulab/state_io.hpp"

using namespace ulab;
using nlohmann::json;

TEST_CASE("full-form state JSON round-trips") {
    Rng rng(71);
    for (int i = 0; i < 20; ++i) {
        const DensityMatrix rho = random_state(rng);
        const LoadedState back = state_from_json(json::parse(state_to_json(rho).dump()));
        CHECK(max_abs_diff(back.state.matrix(), rho.matrix()) <= 1e-12);
        CHECK(state_fingerprint(back.state) == state_fingerprint(rho));
    }
}

TEST_CASE("x_params shorthand") {
    const json doc = {{"x_params", {{"a11", 0.4}, {"a22", 0.1}, {"a33", 0.2}, {"a44", 0.3},
                                    {"a14", {{"re", 0.0}, {"im", 0.15}}}, {"a23", 0.1}}}};
    const LoadedState s = state_from_json(doc);
    CHECK(s.state.matrix()(0, 3).real() == doctest::Approx(0.15));
    CHECK(s.metadata.contains("local_phases"));
    const json bad = {{"x_params", {{"a11", 0.5}, {"a22", 0.5}, {"a33", 0.5}, {"a44", 0.5}, {"a14", 0}, {"a23", 0}}}};
    CHECK_THROWS_AS(state_from_json(bad), Error);
}

TEST_CASE("invalid state documents name the problem") {
    try {
        const std::vector<std::vector<double>> zeros(4, std::vector<double>(4, 0.0));
        state_from_json({{"dim", 4}, {"re", zeros}});
        FAIL("expected throw");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::InvalidState);
        CHECK(std::string(e.what()).find("trace") != std::string::npos);
    }
    CHECK_THROWS_AS(state_from_json({{"dim", 4}, {"re", std::vector<double>(3, 0.0)}}), Error);
    CHECK_THROWS_AS(state_from_json(json::array()), Error);
}

TEST_CASE("builtin registry") {
    for (const std::string &name : builtin_names()) CAPTURE(name);
    CHECK(max_abs_diff(builtin_state("rho_star").state.matrix(), rho_star().matrix()) == 0.0);
    CHECK(max_abs_diff(builtin_state("werner:0.5").state.matrix(), werner(0.5).matrix()) == 0.0);
    CHECK(max_abs_diff(builtin_state("chi:0.25").state.matrix(), chi_state(0.25).matrix()) == 0.0);
    CHECK(max_abs_diff(builtin_state("noisy:0.5").state.matrix(), noisy_star(0.5).matrix()) == 0.0);
    CHECK(max_abs_diff(builtin_state("bell_diag:0.1,0.2,0.3").state.matrix(),
                       bell_diagonal({0.1, 0.2, 0.3}).matrix()) == 0.0);
    CHECK_THROWS_AS(builtin_state("nope"), Error);
    CHECK_THROWS_AS(builtin_state("werner:abc"), Error);
    CHECK_THROWS_AS(builtin_state("chi:2"), Error);
    CHECK(max_abs_diff(resolve_state("builtin:bell_psi_minus").state.matrix(),
                       bell_state(BellKind::PsiMinus).matrix()) == 0.0);
}

TEST_CASE("state files") {
    const std::string path = "ulab_test_state.json";
    {
        std::ofstream out(path);
        out << state_to_json(chi_state(0.3)).dump();
    }
    CHECK(max_abs_diff(load_state_file(path).state.matrix(), chi_state(0.3).matrix()) <= 1e-12);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_state_file("does/not/exist.json"), Error);
}

TEST_CASE("measure report") {
    const MeasureReport r = measure_report(rho_star());
    CHECK(r.measures.at("lqu") == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(r.measures.at("gd") == doctest::Approx(0.125).epsilon(1e-9));
    CHECK(r.measures.contains("dissonance"));
    const MeasureReport mm = measure_report(maximally_mixed());
    for (const auto &[name, value] : mm.measures) {
        if (name.rfind("entropy", 0) == 0 || name == "conditional_entropy") continue;
        CAPTURE(name);
        CHECK(std::abs(value) < 1e-9);
    }
    const json doc = measure_report(bell_state(BellKind::PhiPlus)).to_json();
    CHECK(doc["measures"]["lqu"].get<double>() == 1.0);
    CHECK(doc["measures"]["negativity"].get<double>() == 1.0);
    CHECK(doc["state_fingerprint"].get<std::string>().size() == 16);
}
